#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twistcalc/field.hpp"

namespace twc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Scalar;

/// Reduced fraction of dense univariate polynomials in the field parameter.
/// Coefficients live in the base field (Rational or Prime). Invariants:
/// trimmed coefficient vectors, nonzero denominator, coprime, monic denominator.
struct ParamFraction {
    std::vector<Scalar> num;
    std::vector<Scalar> den;
};

/// Exact element of a FieldSpec field. Values are immutable after
/// construction and always held in canonical form, so equal values compare
/// structurally equal.
class Scalar {
public:
    static Scalar zero(const FieldPtr& f);
    static Scalar one(const FieldPtr& f);
    static Scalar from_int(const FieldPtr& f, std::int64_t n);
    static Scalar from_fraction(const FieldPtr& f, std::int64_t num, std::int64_t den);
    static Scalar from_rational(const FieldPtr& f, const BigRat& r);
    /// The parameter itself; requires a RatFunc field.
    static Scalar parameter(const FieldPtr& f);
    /// Embed a base-field value into a RatFunc field over that base.
    static Scalar constant(const FieldPtr& f, const Scalar& base_value);
    /// Build num/den from base-field coefficient vectors (low degree first).
    static Scalar from_param_fraction(const FieldPtr& f, std::vector<Scalar> num,
                                      std::vector<Scalar> den);

    const FieldPtr& field() const { return field_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inv() const;
    Scalar pow(std::int64_t e) const;

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// For RatFunc fields: true when the value lies in the base field.
    bool is_param_constant() const;
    /// The base-field value of a param constant (precondition: is_param_constant()).
    Scalar param_constant_value() const;
    /// Degree of the denominator polynomial (0 when not a RatFunc value).
    int param_den_degree() const;
    const ParamFraction* param_fraction() const;

    /// Canonical text form per the scalar literal grammar.
    std::string to_string() const;
    /// True when the printed form is a top-level sum, i.e. must be
    /// parenthesized when used as a factor.
    bool prints_as_sum() const;

    const BigRat& rat() const { return std::get<BigRat>(v_); }
    std::int64_t residue() const { return std::get<std::int64_t>(v_); }

private:
    Scalar(FieldPtr f, std::variant<BigRat, std::int64_t, ParamFraction> v)
        : field_(std::move(f)), v_(std::move(v)) {}

    FieldPtr field_;
    std::variant<BigRat, std::int64_t, ParamFraction> v_;
};

/// Monic gcd of two denominator-free parameter polynomials.
Scalar param_poly_gcd(const Scalar& a, const Scalar& b);

/// Quantum integer (m)_q: 1 + q + ... + q^{m-1} for m >= 0, and
/// -1/q - 1/q^2 - ... - 1/q^{-m} for m < 0 (requires q invertible).
Scalar quantum_integer(std::int64_t m, const Scalar& q);

/// Smallest positive m <= search_bound with (m)_q = 0; 0 when provably no
/// such m exists; nullopt (unknown) when the true value exceeds the bound.
std::optional<std::int64_t> q_characteristic(const Scalar& q, std::int64_t search_bound);

void require_same_field(const Scalar& a, const Scalar& b, const char* op);

} // namespace twc
