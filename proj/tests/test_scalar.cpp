#include <doctest.h>

#include "twistcalc/error.hpp"
#include "twistcalc/random.hpp"
#include "twistcalc/scalar.hpp"

using namespace twc;

TEST_CASE("rational arithmetic is exact and normalized") {
    FieldPtr Q = rational_field();
    Scalar half = Scalar::from_fraction(Q, 1, 2);
    Scalar third = Scalar::from_fraction(Q, 1, 3);
    CHECK((half + third) == Scalar::from_fraction(Q, 5, 6));
    CHECK((half + third).to_string() == "5/6");
    CHECK(Scalar::from_fraction(Q, 2, -4).to_string() == "-1/2");  // positive denominator
    CHECK(Scalar::from_fraction(Q, 6, 3) == Scalar::from_int(Q, 2));
}

TEST_CASE("prime field arithmetic") {
    FieldPtr F5 = prime_field(5);
    CHECK(Scalar::from_int(F5, 2) * Scalar::from_int(F5, 3) == Scalar::from_int(F5, 1));
    CHECK(Scalar::from_int(F5, -1) == Scalar::from_int(F5, 4));
    CHECK(Scalar::from_int(F5, 3).inv() == Scalar::from_int(F5, 2));
    CHECK_THROWS_AS((void)prime_field(6), Error);
    CHECK_THROWS_AS((void)Scalar::from_int(F5, 0).inv(), Error);
}

TEST_CASE("parameter function field arithmetic") {
    FieldPtr Qt = param_function_field(rational_field(), "t");
    Scalar t = Scalar::parameter(Qt);
    Scalar one = Scalar::one(Qt);
    // t/(t+1) + 1/(t+1) = 1
    CHECK(t / (t + one) + one / (t + one) == one);
    Scalar v = (t * t - one) / (t - one);
    CHECK(v == t + one);  // gcd reduction
    CHECK(v.to_string() == "t + 1");
    // monic denominator
    Scalar w = one / (t * Scalar::from_int(Qt, 2) + Scalar::from_int(Qt, 2));
    CHECK(w.to_string() == "1/2/(t + 1)");
    CHECK_THROWS_AS((void)(one / Scalar::zero(Qt)), Error);
    CHECK_THROWS_AS((void)param_function_field(Qt, "s"), Error);  // no nesting
}

TEST_CASE("field mismatch is rejected") {
    Scalar a = Scalar::one(rational_field());
    Scalar b = Scalar::one(prime_field(5));
    CHECK_THROWS_AS((void)(a + b), Error);
}

TEST_CASE("quantum integers") {
    FieldPtr Qq = param_function_field(rational_field(), "q");
    Scalar q = Scalar::parameter(Qq);
    Scalar one = Scalar::one(Qq);
    CHECK(quantum_integer(3, q) == one + q + q * q);
    CHECK(quantum_integer(0, q).is_zero());
    FieldPtr Q = rational_field();
    CHECK(quantum_integer(-1, Scalar::from_int(Q, 2)) == Scalar::from_fraction(Q, -1, 2));
    CHECK_THROWS_AS((void)quantum_integer(-2, Scalar::zero(Q)), Error);

    // (m+1)_q = 1 + q (m)_q and (-m)_q = -q^{-m} (m)_q
    Rng rng(7);
    for (int rep = 0; rep < 25; ++rep) {
        Scalar r = random_nonzero_scalar(rng, Qq);
        std::int64_t m = rng.range(0, 8);
        CHECK(quantum_integer(m + 1, r) == Scalar::one(Qq) + r * quantum_integer(m, r));
        if (m >= 1) CHECK(quantum_integer(-m, r) == -(r.pow(-m) * quantum_integer(m, r)));
    }
}

TEST_CASE("q-characteristic") {
    FieldPtr Q = rational_field();
    CHECK(q_characteristic(Scalar::from_int(Q, -1), 10) == 2);
    CHECK(q_characteristic(Scalar::from_int(Q, 1), 10) == 0);
    CHECK(q_characteristic(Scalar::from_fraction(Q, 2, 3), 10) == 0);
    CHECK(q_characteristic(Scalar::from_int(Q, -1), 1) == std::nullopt);  // beyond the bound

    FieldPtr F5 = prime_field(5);
    CHECK(q_characteristic(Scalar::from_int(F5, 2), 4) == 4);  // ord(2) = 4 mod 5
    CHECK(q_characteristic(Scalar::from_int(F5, 1), 10) == 5);
    CHECK(q_characteristic(Scalar::zero(F5), 10) == 0);

    FieldPtr Qq = param_function_field(rational_field(), "q");
    CHECK(q_characteristic(Scalar::parameter(Qq), 50) == 0);  // generic parameter
    CHECK(q_characteristic(Scalar::from_int(Qq, -1), 10) == 2);  // constant inside Q(q)
    CHECK_THROWS_AS((void)q_characteristic(Scalar::one(Q), 0), Error);
}

TEST_CASE("field axioms on randomized triples") {
    Rng rng(11);
    for (const FieldPtr& f : {rational_field(), prime_field(7),
                              param_function_field(rational_field(), "t"),
                              param_function_field(prime_field(3), "t")}) {
        for (int rep = 0; rep < 30; ++rep) {
            Scalar a = random_scalar(rng, f);
            Scalar b = random_scalar(rng, f);
            Scalar c = random_scalar(rng, f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("canonical forms: equal values print equally") {
    FieldPtr Qt = param_function_field(rational_field(), "t");
    Rng rng(13);
    for (int rep = 0; rep < 40; ++rep) {
        Scalar a = random_scalar(rng, Qt);
        Scalar b = random_nonzero_scalar(rng, Qt);
        Scalar x = (a / b) * b;  // same value, different computation route
        CHECK(x == a);
        CHECK(x.to_string() == a.to_string());
    }
}
