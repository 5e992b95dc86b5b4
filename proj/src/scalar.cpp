#include "twistcalc/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "twistcalc/error.hpp"

namespace twc {

namespace {

// ---------------------------------------------------------------------------
// Prime-field residues.

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 in F" + std::to_string(p));
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return mod_reduce(t, p);
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over the base field (coefficients are base
// Scalars, lowest degree first, no trailing zeros).

using UPoly = std::vector<Scalar>;

void up_trim(UPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

bool up_is_zero(const UPoly& a) { return a.empty(); }

UPoly up_add(const UPoly& a, const UPoly& b) {
    UPoly r = a.size() >= b.size() ? a : b;
    const UPoly& s = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
    up_trim(r);
    return r;
}

UPoly up_neg(const UPoly& a) {
    UPoly r = a;
    for (auto& c : r) c = -c;
    return r;
}

UPoly up_mul(const UPoly& a, const UPoly& b, const FieldPtr& base) {
    if (up_is_zero(a) || up_is_zero(b)) return {};
    UPoly r(a.size() + b.size() - 1, Scalar::zero(base));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    up_trim(r);
    return r;
}

UPoly up_scale(const UPoly& a, const Scalar& c) {
    if (c.is_zero()) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

// Remainder of a by b (b nonzero); quotient discarded.
UPoly up_rem(UPoly a, const UPoly& b) {
    const Scalar lcinv = b.back().inv();
    while (a.size() >= b.size() && !up_is_zero(a)) {
        Scalar f = a.back() * lcinv;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        up_trim(a);
    }
    return a;
}

UPoly up_monic(UPoly a) {
    if (!up_is_zero(a) && !a.back().is_one()) a = up_scale(a, a.back().inv());
    return a;
}

// Rescale by lcm(denominators)/gcd(numerators) so Euclid's coefficients stay
// integer-primitive over the rationals; a unit change only.
UPoly up_strip_numeric(UPoly a) {
    if (a.empty() || a[0].field()->kind != FieldKind::Rational) return a;
    BigInt g = 0, l = 1;
    for (const auto& c : a) {
        g = boost::multiprecision::gcd(g, BigInt(numerator(c.rat())));
        l = boost::multiprecision::lcm(l, BigInt(denominator(c.rat())));
    }
    if (g == 0) return a;
    return up_scale(std::move(a), Scalar::from_rational(a[0].field(), BigRat(l, g)));
}

UPoly up_gcd(UPoly a, UPoly b) {
    a = up_strip_numeric(std::move(a));
    b = up_strip_numeric(std::move(b));
    while (!up_is_zero(b)) {
        UPoly r = up_strip_numeric(up_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return up_monic(std::move(a));
}

// Exact division (precondition: b divides a).
UPoly up_div_exact(UPoly a, const UPoly& b, const FieldPtr& base) {
    if (up_is_zero(a)) return {};
    UPoly q(a.size() - b.size() + 1, Scalar::zero(base));
    const Scalar lcinv = b.back().inv();
    while (a.size() >= b.size() && !up_is_zero(a)) {
        Scalar f = a.back() * lcinv;
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        up_trim(a);
    }
    if (!up_is_zero(a)) fail(Errc::NonExactDivision, "parameter polynomial division not exact");
    return q;
}

FieldPtr base_field_of(const FieldPtr& f) {
    return f->base == FieldKind::Prime ? prime_field(f->p) : rational_field();
}

bool up_is_one(const UPoly& a) { return a.size() == 1 && a[0].is_one(); }

ParamFraction pf_normalize(const FieldPtr& f, UPoly num, UPoly den) {
    up_trim(num);
    up_trim(den);
    if (up_is_zero(den)) fail(Errc::DivisionByZero, "zero denominator in " + f->description());
    const FieldPtr base = base_field_of(f);
    if (up_is_zero(num)) return {UPoly{}, UPoly{Scalar::one(base)}};
    if (up_is_one(den)) return {std::move(num), std::move(den)};
    UPoly g = up_gcd(num, den);
    if (g.size() > 1 || !g.back().is_one()) {
        num = up_div_exact(std::move(num), g, base);
        den = up_div_exact(std::move(den), g, base);
    }
    if (!den.back().is_one()) {
        Scalar lcinv = den.back().inv();
        num = up_scale(num, lcinv);
        den = up_scale(den, lcinv);
        den.back() = Scalar::one(base);  // exactly one, not a computed quotient
    }
    return {std::move(num), std::move(den)};
}

std::string up_to_string(const UPoly& a, const std::string& param, FieldKind basekind);

} // namespace

void require_same_field(const Scalar& a, const Scalar& b, const char* op) {
    if (!same_field(a.field(), b.field()))
        fail(Errc::FieldMismatch, std::string(op) + " between " + a.field()->description() +
                                      " and " + b.field()->description());
}

// ---------------------------------------------------------------------------
// Construction.

Scalar Scalar::zero(const FieldPtr& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldPtr& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldPtr& f, std::int64_t n) {
    switch (f->kind) {
    case FieldKind::Rational: return Scalar(f, BigRat(n));
    case FieldKind::Prime: return Scalar(f, mod_reduce(n, f->p));
    case FieldKind::RatFunc: return constant(f, from_int(base_field_of(f), n));
    }
    fail(Errc::InvalidArgument, "bad field kind");
}

Scalar Scalar::from_fraction(const FieldPtr& f, std::int64_t num, std::int64_t den) {
    return from_int(f, num) / from_int(f, den);
}

Scalar Scalar::from_rational(const FieldPtr& f, const BigRat& r) {
    switch (f->kind) {
    case FieldKind::Rational: return Scalar(f, r);
    case FieldKind::Prime: {
        std::int64_t n = static_cast<std::int64_t>(numerator(r) % f->p);
        std::int64_t d = static_cast<std::int64_t>(denominator(r) % f->p);
        if (d == 0) fail(Errc::DivisionByZero, "denominator divisible by p");
        return Scalar(f, mod_mul(mod_reduce(n, f->p), mod_inv(mod_reduce(d, f->p), f->p), f->p));
    }
    case FieldKind::RatFunc: return constant(f, from_rational(base_field_of(f), r));
    }
    fail(Errc::InvalidArgument, "bad field kind");
}

Scalar Scalar::parameter(const FieldPtr& f) {
    if (f->kind != FieldKind::RatFunc)
        fail(Errc::InvalidArgument, "field " + f->description() + " has no parameter");
    const FieldPtr base = base_field_of(f);
    ParamFraction pf{UPoly{Scalar::zero(base), Scalar::one(base)}, UPoly{Scalar::one(base)}};
    return Scalar(f, std::move(pf));
}

Scalar Scalar::constant(const FieldPtr& f, const Scalar& base_value) {
    if (f->kind != FieldKind::RatFunc)
        fail(Errc::InvalidArgument, "field " + f->description() + " has no parameter");
    if (!same_field(base_value.field(), base_field_of(f)))
        fail(Errc::FieldMismatch, "constant not in the base field of " + f->description());
    const FieldPtr base = base_value.field();
    ParamFraction pf;
    if (!base_value.is_zero()) pf.num = UPoly{base_value};
    pf.den = UPoly{Scalar::one(base)};
    return Scalar(f, std::move(pf));
}

Scalar Scalar::from_param_fraction(const FieldPtr& f, std::vector<Scalar> num,
                                   std::vector<Scalar> den) {
    if (f->kind != FieldKind::RatFunc)
        fail(Errc::InvalidArgument, "field " + f->description() + " has no parameter");
    return Scalar(f, pf_normalize(f, std::move(num), std::move(den)));
}

// ---------------------------------------------------------------------------
// Arithmetic.

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(*this, o, "+");
    switch (field_->kind) {
    case FieldKind::Rational: return Scalar(field_, rat() + o.rat());
    case FieldKind::Prime: return Scalar(field_, mod_reduce(residue() + o.residue(), field_->p));
    case FieldKind::RatFunc: {
        const auto& a = std::get<ParamFraction>(v_);
        const auto& b = std::get<ParamFraction>(o.v_);
        const FieldPtr base = base_field_of(field_);
        if (up_is_one(a.den) && up_is_one(b.den)) {
            UPoly num = up_add(a.num, b.num);
            if (up_is_zero(num)) return zero(field_);
            return Scalar(field_, ParamFraction{std::move(num), a.den});
        }
        UPoly num = up_add(up_mul(a.num, b.den, base), up_mul(b.num, a.den, base));
        UPoly den = up_mul(a.den, b.den, base);
        return Scalar(field_, pf_normalize(field_, std::move(num), std::move(den)));
    }
    }
    fail(Errc::InvalidArgument, "bad field kind");
}

Scalar Scalar::operator-() const {
    switch (field_->kind) {
    case FieldKind::Rational: return Scalar(field_, -rat());
    case FieldKind::Prime: return Scalar(field_, mod_reduce(-residue(), field_->p));
    case FieldKind::RatFunc: {
        const auto& a = std::get<ParamFraction>(v_);
        return Scalar(field_, ParamFraction{up_neg(a.num), a.den});
    }
    }
    fail(Errc::InvalidArgument, "bad field kind");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(*this, o, "*");
    switch (field_->kind) {
    case FieldKind::Rational: return Scalar(field_, rat() * o.rat());
    case FieldKind::Prime: return Scalar(field_, mod_mul(residue(), o.residue(), field_->p));
    case FieldKind::RatFunc: {
        const auto& a = std::get<ParamFraction>(v_);
        const auto& b = std::get<ParamFraction>(o.v_);
        const FieldPtr base = base_field_of(field_);
        if (up_is_one(a.den) && up_is_one(b.den)) {
            UPoly num = up_mul(a.num, b.num, base);
            if (up_is_zero(num)) return zero(field_);
            return Scalar(field_, ParamFraction{std::move(num), a.den});
        }
        return Scalar(field_, pf_normalize(field_, up_mul(a.num, b.num, base),
                                           up_mul(a.den, b.den, base)));
    }
    }
    fail(Errc::InvalidArgument, "bad field kind");
}

Scalar Scalar::inv() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of 0 in " + field_->description());
    switch (field_->kind) {
    case FieldKind::Rational: return Scalar(field_, BigRat(1) / rat());
    case FieldKind::Prime: return Scalar(field_, mod_inv(residue(), field_->p));
    case FieldKind::RatFunc: {
        const auto& a = std::get<ParamFraction>(v_);
        return Scalar(field_, pf_normalize(field_, a.den, a.num));
    }
    }
    fail(Errc::InvalidArgument, "bad field kind");
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(*this, o, "/");
    return *this * o.inv();
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc = one(field_);
    Scalar base = *this;
    for (std::int64_t k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        if (k > 1) base *= base;
    }
    return acc;
}

bool Scalar::is_zero() const {
    switch (field_->kind) {
    case FieldKind::Rational: return rat() == 0;
    case FieldKind::Prime: return residue() == 0;
    case FieldKind::RatFunc: return up_is_zero(std::get<ParamFraction>(v_).num);
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_->kind) {
    case FieldKind::Rational: return rat() == 1;
    case FieldKind::Prime: return residue() == 1;
    case FieldKind::RatFunc: {
        const auto& a = std::get<ParamFraction>(v_);
        return a.num.size() == 1 && a.den.size() == 1 && a.num[0].is_one();
    }
    }
    return false;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!same_field(field_, o.field_)) return false;
    switch (field_->kind) {
    case FieldKind::Rational: return rat() == o.rat();
    case FieldKind::Prime: return residue() == o.residue();
    case FieldKind::RatFunc: {
        const auto& a = std::get<ParamFraction>(v_);
        const auto& b = std::get<ParamFraction>(o.v_);
        return a.num == b.num && a.den == b.den;
    }
    }
    return false;
}

bool Scalar::is_param_constant() const {
    if (field_->kind != FieldKind::RatFunc) return true;
    const auto& a = std::get<ParamFraction>(v_);
    return a.num.size() <= 1 && a.den.size() == 1;
}

Scalar Scalar::param_constant_value() const {
    if (field_->kind != FieldKind::RatFunc) return *this;
    const auto& a = std::get<ParamFraction>(v_);
    if (!is_param_constant()) fail(Errc::InvalidArgument, "value is not a parameter constant");
    return a.num.empty() ? Scalar::zero(base_field_of(field_)) : a.num[0];
}

int Scalar::param_den_degree() const {
    if (field_->kind != FieldKind::RatFunc) return 0;
    return static_cast<int>(std::get<ParamFraction>(v_).den.size()) - 1;
}

const ParamFraction* Scalar::param_fraction() const {
    return std::get_if<ParamFraction>(&v_);
}

// ---------------------------------------------------------------------------
// Printing.

namespace {

std::string rat_to_string(const BigRat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

// One monomial c*param^k of a parameter polynomial; sign handled by caller
// for rational base coefficients.
std::string up_term_string(const Scalar& coeff, std::size_t k, const std::string& param) {
    std::string cs = coeff.to_string();
    std::string xs;
    if (k == 1)
        xs = param;
    else if (k > 1)
        xs = param + "^" + std::to_string(k);
    if (xs.empty()) return cs;
    if (cs == "1") return xs;
    if (cs == "-1") return "-" + xs;
    return cs + "*" + xs;
}

std::string up_to_string(const UPoly& a, const std::string& param, FieldKind basekind) {
    if (up_is_zero(a)) return "0";
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i].is_zero()) continue;
        Scalar c = a[i];
        bool neg = false;
        if (basekind == FieldKind::Rational && c.rat() < 0) {
            neg = true;
            c = -c;
        }
        std::string term = up_term_string(c, i, param);
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

bool up_is_sum(const UPoly& a) {
    std::size_t nonzero = 0;
    for (const auto& c : a) nonzero += !c.is_zero();
    return nonzero >= 2;
}

} // namespace

std::string Scalar::to_string() const {
    switch (field_->kind) {
    case FieldKind::Rational: return rat_to_string(rat());
    case FieldKind::Prime: return std::to_string(residue());
    case FieldKind::RatFunc: {
        const auto& a = std::get<ParamFraction>(v_);
        std::string ns = up_to_string(a.num, field_->param, field_->base);
        if (a.den.size() == 1) return ns;  // denominator is exactly 1
        if (up_is_sum(a.num)) ns = "(" + ns + ")";
        std::string ds = up_to_string(a.den, field_->param, field_->base);
        if (up_is_sum(a.den)) ds = "(" + ds + ")";
        return ns + "/" + ds;
    }
    }
    return "?";
}

bool Scalar::prints_as_sum() const {
    if (field_->kind != FieldKind::RatFunc) return false;
    const auto& a = std::get<ParamFraction>(v_);
    return a.den.size() == 1 && up_is_sum(a.num);
}

Scalar param_poly_gcd(const Scalar& a, const Scalar& b) {
    const FieldPtr& f = a.field();
    if (f->kind != FieldKind::RatFunc) fail(Errc::InvalidArgument, "not a parameter field value");
    require_same_field(a, b, "gcd");
    const auto* pa = a.param_fraction();
    const auto* pb = b.param_fraction();
    if (pa->den.size() != 1 || pb->den.size() != 1)
        fail(Errc::InvalidArgument, "gcd needs denominator-free values");
    return Scalar::from_param_fraction(f, up_gcd(pa->num, pb->num),
                                       UPoly{Scalar::one(base_field_of(f))});
}

// ---------------------------------------------------------------------------
// Quantum combinatorics.

Scalar quantum_integer(std::int64_t m, const Scalar& q) {
    const FieldPtr& f = q.field();
    Scalar acc = Scalar::zero(f);
    if (m >= 0) {
        Scalar pw = Scalar::one(f);
        for (std::int64_t i = 0; i < m; ++i) {
            acc += pw;
            pw *= q;
        }
        return acc;
    }
    if (q.is_zero())
        fail(Errc::NegativeIndexNeedsUnit, "(m)_q with m < 0 requires q to be a unit");
    const Scalar qi = q.inv();
    Scalar pw = Scalar::one(f);
    for (std::int64_t i = 0; i < -m; ++i) {
        pw *= qi;
        acc -= pw;
    }
    return acc;
}

namespace {

// Exact q-characteristic over the supported fields: 0 when no positive m has
// (m)_q = 0, otherwise the smallest such m. Decidable because the only roots
// of unity in Q are +-1, and nonconstant rational functions are never roots
// of unity.
std::int64_t q_char_exact(const Scalar& q) {
    const FieldPtr& f = q.field();
    switch (f->kind) {
    case FieldKind::Rational: {
        if (q.rat() == 1) return 0;   // (m)_1 = m, nonzero in characteristic 0
        if (q.rat() == -1) return 2;  // 1 + (-1) = 0
        return 0;                     // |q^m| != 1, so q^m - 1 never vanishes
    }
    case FieldKind::Prime: {
        if (q.is_zero()) return 0;  // (m)_0 = 1 for all m >= 1
        if (q.is_one()) return f->p;
        // (m)_q = (q^m - 1)/(q - 1): the smallest zero is the multiplicative order.
        Scalar pw = q;
        for (std::int64_t m = 1; m < f->p; ++m) {
            if (pw.is_one()) return m;
            pw *= q;
        }
        return 0;  // unreachable for nonzero residues
    }
    case FieldKind::RatFunc: {
        if (!q.is_param_constant()) return 0;  // nonconstant, never a root of unity
        return q_char_exact(q.param_constant_value());
    }
    }
    return 0;
}

} // namespace

std::optional<std::int64_t> q_characteristic(const Scalar& q, std::int64_t search_bound) {
    if (search_bound < 1) fail(Errc::InvalidArgument, "search bound must be >= 1");
    std::int64_t exact = q_char_exact(q);
    if (exact == 0) return 0;
    if (exact <= search_bound) return exact;
    return std::nullopt;
}

} // namespace twc
