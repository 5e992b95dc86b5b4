#include "twistcalc/coeff.hpp"

#include <algorithm>
#include <set>

#include "twistcalc/error.hpp"

namespace twc {

std::string coeff_mode_name(CoeffMode m) {
    switch (m) {
    case CoeffMode::Poly: return "poly";
    case CoeffMode::Laurent: return "laurent";
    case CoeffMode::RatFunc: return "ratfunc";
    }
    return "?";
}

std::string CoeffAlgebra::description() const {
    std::string s = field->description();
    s += mode == CoeffMode::RatFunc ? "(" : "[";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s += ",";
        s += names[i];
        if (mode == CoeffMode::Laurent) s += "^+-";
    }
    s += mode == CoeffMode::RatFunc ? ")" : "]";
    return s;
}

AlgebraPtr make_algebra(const FieldPtr& field, std::vector<std::string> names, CoeffMode mode) {
    if (!field) fail(Errc::InvalidArgument, "null field");
    if (names.empty()) fail(Errc::InvalidArgument, "need at least one generator");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!is_identifier(n))
            fail(Errc::InvalidArgument, "generator name '" + n + "' is not an identifier");
        if (!seen.insert(n).second)
            fail(Errc::InvalidArgument, "duplicate generator name '" + n + "'");
        if (field->kind == FieldKind::RatFunc && n == field->param)
            fail(Errc::InvalidArgument, "generator '" + n + "' clashes with the field parameter");
    }
    CoeffAlgebra a;
    a.field = field;
    a.names = std::move(names);
    a.mode = mode;
    return std::make_shared<const CoeffAlgebra>(std::move(a));
}

// ---------------------------------------------------------------------------
// Term-map arithmetic.

namespace tm {

bool is_zero(const TermMap& a) { return a.empty(); }

void add_term(TermMap& a, const Exps& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = a.find(e);
    if (it == a.end()) {
        a.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

TermMap add(const TermMap& a, const TermMap& b) {
    TermMap r = a;
    for (const auto& [e, c] : b) add_term(r, e, c);
    return r;
}

TermMap neg(TermMap a) {
    for (auto& [e, c] : a) c = -c;
    return a;
}

TermMap sub(const TermMap& a, const TermMap& b) { return add(a, neg(b)); }

TermMap mul(const TermMap& a, const TermMap& b) {
    TermMap r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            add_term(r, e, ca * cb);
        }
    return r;
}

TermMap scale(TermMap a, const Scalar& c) {
    if (c.is_zero()) return {};
    for (auto& [e, v] : a) v *= c;
    return a;
}

TermMap one(const FieldPtr& f, int nvars) {
    TermMap r;
    r.emplace(Exps(nvars, 0), Scalar::one(f));
    return r;
}

std::optional<TermMap> div_exact(const TermMap& a, const TermMap& b, const FieldPtr&) {
    if (b.empty()) fail(Errc::DivisionByZero, "division by zero polynomial");
    TermMap q, r = a;
    const auto& [eb, cb] = *b.rbegin();  // grlex-leading term of the divisor
    const Scalar cbinv = cb.inv();
    while (!r.empty()) {
        const auto& [er, cr] = *r.rbegin();
        Exps eq = er;
        for (std::size_t i = 0; i < eq.size(); ++i) {
            eq[i] -= eb[i];
            if (eq[i] < 0) return std::nullopt;
        }
        Scalar cq = cr * cbinv;
        q.emplace(eq, cq);
        for (const auto& [e2, c2] : b) {
            Exps e = eq;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            add_term(r, e, -(cq * c2));
        }
    }
    return q;
}

namespace {

int deg_in(const TermMap& a, int v) {
    int d = -1;
    for (const auto& [e, c] : a) d = std::max(d, e[v]);
    return d;
}

// Remove the numeric content (gcd of numerators over lcm of denominators) so
// coefficient sizes stay bounded along the PRS. Over a prime field sizes do
// not grow and the map is returned untouched.
TermMap strip_numeric_content(TermMap a, const FieldPtr& f) {
    if (f->kind != FieldKind::Rational || a.empty()) return a;
    BigInt g = 0, l = 1;
    for (const auto& [e, c] : a) {
        g = boost::multiprecision::gcd(g, BigInt(numerator(c.rat())));
        l = boost::multiprecision::lcm(l, BigInt(denominator(c.rat())));
    }
    if (g == 0) return a;
    Scalar m = Scalar::from_rational(f, BigRat(l, g));
    return scale(std::move(a), m);
}

// Coefficient of v^k, as a term map with the v-exponent zeroed.
TermMap coeff_of(const TermMap& a, int v, int k) {
    TermMap r;
    for (const auto& [e, c] : a)
        if (e[v] == k) {
            Exps e2 = e;
            e2[v] = 0;
            r.emplace(e2, c);
        }
    return r;
}

TermMap shift_var(const TermMap& a, int v, int k) {
    TermMap r;
    for (const auto& [e, c] : a) {
        Exps e2 = e;
        e2[v] += k;
        r.emplace(e2, c);
    }
    return r;
}

TermMap monic(TermMap a) {
    if (a.empty()) return a;
    const Scalar lc = a.rbegin()->second;
    if (lc.is_one()) return a;
    return scale(std::move(a), lc.inv());
}

// gcd of all v-coefficients.
TermMap content_in(const TermMap& a, int v, const FieldPtr& f, int nvars) {
    TermMap g;
    for (int k = 0; k <= deg_in(a, v); ++k) {
        TermMap c = coeff_of(a, v, k);
        if (c.empty()) continue;
        g = g.empty() ? strip_numeric_content(std::move(c), f) : gcd(g, c, f, nvars);
        if (g.size() == 1 && total_degree(g.begin()->first) == 0) break;  // already 1
    }
    return g;
}

FieldPtr base_field_of(const FieldPtr& f) {
    return f->base == FieldKind::Prime ? prime_field(f->p) : rational_field();
}

// Parameter-field gcd by lifting the parameter to an extra variable: clear
// the scalar denominators, run the base-field gcd in n+1 variables, strip the
// parameter content (Gauss), and map back.
TermMap gcd_param(const TermMap& a, const TermMap& b, const FieldPtr& f, int nvars) {
    const FieldPtr base = base_field_of(f);
    auto lift = [&](const TermMap& t) {
        Scalar clear = Scalar::one(f);
        for (const auto& [e, s] : t) {
            const ParamFraction* pf = s.param_fraction();
            if (pf->den.size() == 1) continue;
            Scalar d = Scalar::from_param_fraction(
                f, pf->den, std::vector<Scalar>{Scalar::one(base)});
            clear = clear * (d / param_poly_gcd(clear, d));  // lcm
        }
        TermMap out;
        for (const auto& [e, s] : t) {
            const Scalar cleared = s * clear;
            const ParamFraction* pf = cleared.param_fraction();
            for (std::size_t k = 0; k < pf->num.size(); ++k) {
                if (pf->num[k].is_zero()) continue;
                Exps e2 = e;
                e2.push_back(static_cast<int>(k));
                out.emplace(std::move(e2), pf->num[k]);
            }
        }
        return out;
    };
    TermMap g = gcd(lift(a), lift(b), base, nvars + 1);
    // Strip the content over the parameter ring: the gcd of the q-polynomial
    // coefficients attached to each x-monomial (Gauss's lemma).
    std::map<Exps, TermMap, GrlexLess> by_mono;
    for (const auto& [e, c] : g) {
        Exps key(e.begin(), e.end() - 1);
        Exps qonly(nvars + 1, 0);
        qonly[nvars] = e.back();
        by_mono[std::move(key)].emplace(std::move(qonly), c);
    }
    TermMap cq;
    for (auto& [key, qpoly] : by_mono) {
        cq = cq.empty() ? strip_numeric_content(std::move(qpoly), base) : gcd(cq, qpoly, base, nvars + 1);
        if (cq.size() == 1 && total_degree(cq.begin()->first) == 0) break;
    }
    g = *div_exact(g, cq, base);
    // Regroup the parameter exponents into scalar coefficients.
    std::map<Exps, std::vector<Scalar>, GrlexLess> grouped;
    for (const auto& [e, c] : g) {
        Exps e2(e.begin(), e.end() - 1);
        auto& num = grouped[std::move(e2)];
        if (static_cast<int>(num.size()) <= e.back()) num.resize(e.back() + 1, Scalar::zero(base));
        num[e.back()] = c;
    }
    TermMap out;
    for (auto& [e, num] : grouped) {
        Scalar s = Scalar::from_param_fraction(f, std::move(num),
                                               std::vector<Scalar>{Scalar::one(base)});
        if (!s.is_zero()) out.emplace(e, std::move(s));
    }
    return monic(std::move(out));
}

TermMap power(const TermMap& a, int e, const FieldPtr& f, int nvars) {
    TermMap r = one(f, nvars);
    for (int k = 0; k < e; ++k) r = mul(r, a);
    return r;
}

// Classical pseudo-remainder lc(b)^{deg a - deg b + 1} a mod b in the
// variable v (deg_v b >= 1). The full lc power is kept so the subresultant
// divisions below stay exact.
TermMap prem(TermMap a, const TermMap& b, int v, const FieldPtr& f, int nvars) {
    const int db = deg_in(b, v);
    const TermMap lb = coeff_of(b, v, db);
    int da = deg_in(a, v);
    int mults = 0;
    const int needed = da - db + 1;
    while (!a.empty() && da >= db) {
        TermMap la = coeff_of(a, v, da);
        a = sub(mul(lb, a), mul(shift_var(la, v, da - db), b));
        ++mults;
        da = deg_in(a, v);
    }
    if (mults < needed) a = mul(a, power(lb, needed - mults, f, nvars));
    return a;
}

} // namespace

TermMap gcd(const TermMap& a, const TermMap& b, const FieldPtr& f, int nvars) {
    if (a.empty()) return monic(b);
    if (b.empty()) return monic(a);
    if (f->kind == FieldKind::RatFunc) return gcd_param(a, b, f, nvars);
    // Split off the common monomial factor; single-term operands then finish
    // immediately and the PRS below runs on monomial-free inputs.
    auto min_exps = [nvars](const TermMap& t) {
        Exps m = t.begin()->first;
        for (const auto& [e, c] : t)
            for (int i = 0; i < nvars; ++i) m[i] = std::min(m[i], e[i]);
        return m;
    };
    const Exps ma = min_exps(a);
    const Exps mb = min_exps(b);
    Exps mg(nvars, 0);
    bool shifted = false;
    for (int i = 0; i < nvars; ++i) {
        mg[i] = std::min(ma[i], mb[i]);
        shifted = shifted || ma[i] > 0 || mb[i] > 0;
    }
    if (a.size() == 1 || b.size() == 1) {
        TermMap g;
        g.emplace(mg, Scalar::one(f));
        return g;
    }
    if (shifted) {
        auto deflate = [nvars](const TermMap& t, const Exps& m) {
            TermMap r;
            for (const auto& [e, c] : t) {
                Exps e2 = e;
                for (int i = 0; i < nvars; ++i) e2[i] -= m[i];
                r.emplace(std::move(e2), c);
            }
            return r;
        };
        TermMap core = gcd(deflate(a, ma), deflate(b, mb), f, nvars);
        TermMap shift;
        shift.emplace(mg, Scalar::one(f));
        return mul(shift, core);
    }
    // Divisibility shortcuts catch the common fraction-reduction cases.
    if (div_exact(a, b, f)) return monic(b);
    if (div_exact(b, a, f)) return monic(a);
    // First variable occurring in either operand. (Measured better than the
    // min-degree heuristic on the fraction-normalization workload.)
    int v = -1;
    for (int i = 0; i < nvars && v < 0; ++i)
        if (deg_in(a, i) > 0 || deg_in(b, i) > 0) v = i;
    if (v < 0) return one(f, nvars);  // both constants
    if (deg_in(a, v) == 0) {
        // a is free of v, so any common divisor is too; reduce b to its content.
        TermMap cb = content_in(b, v, f, nvars);
        return gcd(a, cb, f, nvars);
    }
    if (deg_in(b, v) == 0) {
        TermMap ca = content_in(a, v, f, nvars);
        return gcd(ca, b, f, nvars);
    }
    TermMap ca = content_in(a, v, f, nvars);
    TermMap cb = content_in(b, v, f, nvars);
    TermMap c = gcd(ca, cb, f, nvars);
    TermMap pa = strip_numeric_content(*div_exact(a, ca, f), f);
    TermMap pb = strip_numeric_content(*div_exact(b, cb, f), f);
    if (deg_in(pa, v) < deg_in(pb, v)) std::swap(pa, pb);
    // Subresultant PRS in v: each pseudo-remainder is divided by the factor
    // g*h^d predicted by the subresultant theorem, so no per-step content
    // computation is needed. Numeric rescaling only changes units.
    TermMap g = one(f, nvars);
    TermMap h = one(f, nvars);
    TermMap pp;
    while (true) {
        const int d = deg_in(pa, v) - deg_in(pb, v);
        TermMap r = prem(pa, pb, v, f, nvars);
        if (r.empty()) {
            pp = std::move(pb);
            break;
        }
        if (deg_in(r, v) == 0) {
            pp = one(f, nvars);  // coprime in v; only the content survives
            break;
        }
        auto qb = div_exact(r, mul(g, power(h, d, f, nvars)), f);
        if (!qb) fail(Errc::InvalidArgument, "internal: subresultant division not exact");
        g = coeff_of(pb, v, deg_in(pb, v));
        pa = std::move(pb);
        pb = strip_numeric_content(std::move(*qb), f);
        if (d > 0) {
            TermMap gn = power(g, d, f, nvars);
            if (d == 1) {
                h = std::move(gn);
            } else {
                auto hq = div_exact(gn, power(h, d - 1, f, nvars), f);
                if (!hq) fail(Errc::InvalidArgument, "internal: subresultant h-update not exact");
                h = std::move(*hq);
            }
        }
    }
    if (!(pp.size() == 1 && total_degree(pp.begin()->first) == 0)) {
        TermMap cpp = content_in(pp, v, f, nvars);
        pp = *div_exact(pp, cpp, f);
    }
    return monic(strip_numeric_content(mul(c, pp), f));
}

} // namespace tm

// ---------------------------------------------------------------------------
// CoeffElem.

namespace {

void check_exponents(const AlgebraPtr& a, const TermMap& t, bool polynomial_part) {
    for (const auto& [e, c] : t) {
        if (static_cast<int>(e.size()) != a->nvars())
            fail(Errc::InvalidArgument, "exponent width mismatch");
        if (polynomial_part || a->mode == CoeffMode::Poly)
            for (int x : e)
                if (x < 0)
                    fail(Errc::InvalidArgument,
                         "negative exponent in " + coeff_mode_name(a->mode) + " mode");
    }
}

} // namespace

CoeffElem CoeffElem::zero(const AlgebraPtr& a) {
    return CoeffElem(a, TermMap{}, tm::one(a->field, a->nvars()));
}

CoeffElem CoeffElem::one(const AlgebraPtr& a) { return from_int(a, 1); }

CoeffElem CoeffElem::from_scalar(const AlgebraPtr& a, const Scalar& c) {
    if (!same_field(c.field(), a->field))
        fail(Errc::FieldMismatch, "scalar not in " + a->field->description());
    TermMap num;
    if (!c.is_zero()) num.emplace(Exps(a->nvars(), 0), c);
    return CoeffElem(a, std::move(num), tm::one(a->field, a->nvars()));
}

CoeffElem CoeffElem::from_int(const AlgebraPtr& a, std::int64_t n) {
    return from_scalar(a, Scalar::from_int(a->field, n));
}

CoeffElem CoeffElem::generator(const AlgebraPtr& a, int var) {
    Exps e(a->nvars(), 0);
    e.at(var) = 1;
    return monomial(a, e, Scalar::one(a->field));
}

CoeffElem CoeffElem::monomial(const AlgebraPtr& a, const Exps& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != a->nvars())
        fail(Errc::InvalidArgument, "exponent width mismatch");
    if (c.is_zero()) return zero(a);
    if (a->mode == CoeffMode::RatFunc) {
        // Split negative exponents into the denominator.
        Exps en(e.size(), 0), ed(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            (e[i] >= 0 ? en[i] : ed[i]) = std::abs(e[i]);
        TermMap num, den;
        num.emplace(en, c);
        den.emplace(ed, Scalar::one(a->field));
        return CoeffElem(a, std::move(num), std::move(den));
    }
    TermMap num;
    num.emplace(e, c);
    check_exponents(a, num, false);
    return CoeffElem(a, std::move(num), tm::one(a->field, a->nvars()));
}

CoeffElem CoeffElem::from_terms(const AlgebraPtr& a, TermMap t) {
    check_exponents(a, t, false);
    for (auto it = t.begin(); it != t.end();)
        it = it->second.is_zero() ? t.erase(it) : std::next(it);
    return CoeffElem(a, std::move(t), tm::one(a->field, a->nvars()));
}

CoeffElem CoeffElem::fraction(const AlgebraPtr& a, TermMap num, TermMap den) {
    if (a->mode != CoeffMode::RatFunc)
        fail(Errc::InvalidArgument, "fractions require ratfunc mode");
    check_exponents(a, num, true);
    check_exponents(a, den, true);
    if (den.empty()) fail(Errc::DivisionByZero, "zero denominator");
    if (num.empty()) return zero(a);
    TermMap g = tm::gcd(num, den, a->field, a->nvars());
    if (!(g.size() == 1 && total_degree(g.begin()->first) == 0 && g.begin()->second.is_one())) {
        num = *tm::div_exact(num, g, a->field);
        den = *tm::div_exact(den, g, a->field);
    }
    const Scalar lc = den.rbegin()->second;
    if (!lc.is_one()) {
        num = tm::scale(std::move(num), lc.inv());
        den = tm::scale(std::move(den), lc.inv());
    }
    return CoeffElem(a, std::move(num), std::move(den));
}

namespace {
void require_same_algebra(const CoeffElem& a, const CoeffElem& b, const char* op) {
    if (!same_algebra(a.algebra(), b.algebra()))
        fail(Errc::FieldMismatch, std::string(op) + " between " + a.algebra()->description() +
                                      " and " + b.algebra()->description());
}
} // namespace

CoeffElem CoeffElem::operator+(const CoeffElem& o) const {
    require_same_algebra(*this, o, "+");
    if (alg_->mode != CoeffMode::RatFunc) return from_terms(alg_, tm::add(num_, o.num_));
    TermMap num = tm::add(tm::mul(num_, o.den_), tm::mul(o.num_, den_));
    return fraction(alg_, std::move(num), tm::mul(den_, o.den_));
}

CoeffElem CoeffElem::operator-() const {
    return CoeffElem(alg_, tm::neg(num_), den_);
}

CoeffElem CoeffElem::operator-(const CoeffElem& o) const { return *this + (-o); }

CoeffElem CoeffElem::operator*(const CoeffElem& o) const {
    require_same_algebra(*this, o, "*");
    if (alg_->mode != CoeffMode::RatFunc) return from_terms(alg_, tm::mul(num_, o.num_));
    return fraction(alg_, tm::mul(num_, o.num_), tm::mul(den_, o.den_));
}

CoeffElem CoeffElem::operator*(const Scalar& c) const {
    if (!same_field(c.field(), alg_->field)) fail(Errc::FieldMismatch, "scalar factor");
    return CoeffElem(alg_, c.is_zero() ? TermMap{} : tm::scale(num_, c),
                     c.is_zero() ? tm::one(alg_->field, alg_->nvars()) : den_);
}

CoeffElem CoeffElem::operator/(const CoeffElem& o) const {
    require_same_algebra(*this, o, "/");
    if (o.is_zero()) fail(Errc::DivisionByZero, "division by zero in " + alg_->description());
    if (alg_->mode == CoeffMode::RatFunc)
        return fraction(alg_, tm::mul(num_, o.den_), tm::mul(den_, o.num_));
    if (alg_->mode == CoeffMode::Poly) {
        auto q = tm::div_exact(num_, o.num_, alg_->field);
        if (!q) fail(Errc::NonExactDivision, o.to_string() + " does not divide " + to_string());
        return from_terms(alg_, std::move(*q));
    }
    // Laurent: shift both operands into the polynomial cone; the minimal
    // exponents of a product add up, so exactness transfers.
    if (is_zero()) return zero(alg_);
    const int n = alg_->nvars();
    Exps sa(n, 0), sb(n, 0);
    auto min_exps = [n](const TermMap& t, Exps& s) {
        s.assign(n, INT32_MAX);
        for (const auto& [e, c] : t)
            for (int i = 0; i < n; ++i) s[i] = std::min(s[i], e[i]);
    };
    min_exps(num_, sa);
    min_exps(o.num_, sb);
    auto shifted = [n](const TermMap& t, const Exps& s) {
        TermMap r;
        for (const auto& [e, c] : t) {
            Exps e2 = e;
            for (int i = 0; i < n; ++i) e2[i] -= s[i];
            r.emplace(e2, c);
        }
        return r;
    };
    auto q = tm::div_exact(shifted(num_, sa), shifted(o.num_, sb), alg_->field);
    if (!q) fail(Errc::NonExactDivision, o.to_string() + " does not divide " + to_string());
    Exps shift(n, 0);
    for (int i = 0; i < n; ++i) shift[i] = sa[i] - sb[i];
    TermMap r;
    for (const auto& [e, c] : *q) {
        Exps e2 = e;
        for (int i = 0; i < n; ++i) e2[i] += shift[i];
        r.emplace(e2, c);
    }
    return CoeffElem(alg_, std::move(r), tm::one(alg_->field, n));
}

CoeffElem CoeffElem::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    CoeffElem acc = one(alg_);
    CoeffElem base = *this;
    for (std::int64_t k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        if (k > 1) base *= base;
    }
    return acc;
}

bool CoeffElem::is_zero() const { return num_.empty(); }

bool CoeffElem::is_one() const {
    return num_.size() == 1 && den_.size() == 1 && total_degree(num_.begin()->first) == 0 &&
           total_degree(den_.begin()->first) == 0 && num_.begin()->second.is_one();
}

bool CoeffElem::is_scalar() const {
    if (is_zero()) return true;
    return num_.size() == 1 && den_.size() == 1 && total_degree(den_.begin()->first) == 0 &&
           std::all_of(num_.begin()->first.begin(), num_.begin()->first.end(),
                       [](int e) { return e == 0; });
}

Scalar CoeffElem::scalar_value() const {
    if (is_zero()) return Scalar::zero(alg_->field);
    if (!is_scalar()) fail(Errc::InvalidArgument, "not a scalar: " + to_string());
    return num_.begin()->second;
}

bool CoeffElem::is_unit() const {
    if (is_zero()) return false;
    switch (alg_->mode) {
    case CoeffMode::Poly: return is_scalar();
    case CoeffMode::Laurent: return num_.size() == 1;
    case CoeffMode::RatFunc: return true;
    }
    return false;
}

CoeffElem CoeffElem::inv() const {
    if (!is_unit()) fail(Errc::NotInvertible, to_string() + " is not a unit of " + alg_->description());
    switch (alg_->mode) {
    case CoeffMode::Poly: return from_scalar(alg_, num_.begin()->second.inv());
    case CoeffMode::Laurent: {
        Exps e = num_.begin()->first;
        for (auto& x : e) x = -x;
        return monomial(alg_, e, num_.begin()->second.inv());
    }
    case CoeffMode::RatFunc: return fraction(alg_, den_, num_);
    }
    fail(Errc::InvalidArgument, "bad mode");
}

bool CoeffElem::operator==(const CoeffElem& o) const {
    return same_algebra(alg_, o.alg_) && num_ == o.num_ && den_ == o.den_;
}

bool CoeffElem::has_trivial_denominator() const {
    return den_.size() == 1 && total_degree(den_.begin()->first) == 0;
}

int CoeffElem::degree() const {
    if (num_.empty()) return -1;
    return total_degree(num_.rbegin()->first);
}

// ---------------------------------------------------------------------------
// Printing. Terms are listed in descending grlex order; a denominator is
// appended as /den, parenthesized whenever the re-parse would group wrongly.

namespace {

struct SignSplit {
    bool negative;
    Scalar magnitude;
};

SignSplit sign_split(const Scalar& c) {
    if (c.field()->kind == FieldKind::Rational && c.rat() < 0) return {true, -c};
    if (c.field()->kind == FieldKind::RatFunc && c.field()->base == FieldKind::Rational) {
        // Negative-printing when the leading numerator coefficient is negative.
        const ParamFraction* pf = c.param_fraction();
        if (pf && !pf->num.empty() && pf->num.back().rat() < 0) return {true, -c};
    }
    return {false, c};
}

std::string term_string(const Exps& e, const Scalar& c, const std::vector<std::string>& names) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = c.to_string();
    if (mono.empty()) return cs;
    if (c.is_one()) return mono;
    if (c.prints_as_sum()) cs = "(" + cs + ")";
    return cs + "*" + mono;
}

} // namespace

std::string terms_to_string(const TermMap& t, const std::vector<std::string>& names) {
    if (t.empty()) return "0";
    std::string out;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        SignSplit s = sign_split(it->second);
        std::string term = term_string(it->first, s.magnitude, names);
        // A bare constant term whose scalar is itself a sum would merge with
        // the surrounding terms on re-parse.
        bool constant = std::all_of(it->first.begin(), it->first.end(),
                                    [](int e) { return e == 0; });
        if (constant && s.magnitude.prints_as_sum() && (s.negative || t.size() > 1))
            term = "(" + term + ")";
        if (out.empty())
            out = s.negative ? "-" + term : term;
        else
            out += (s.negative ? " - " : " + ") + term;
    }
    return out;
}

std::string CoeffElem::to_string() const {
    std::string ns = terms_to_string(num_, alg_->names);
    if (has_trivial_denominator()) {
        const Scalar d = den_.begin()->second;
        if (d.is_one()) return ns;
        // Non-monic trivial denominator cannot occur (normalized away).
    }
    bool num_is_sum = num_.size() > 1;
    if (num_.size() == 1) {
        const auto& [e, c] = *num_.begin();
        num_is_sum = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }) &&
                     c.prints_as_sum();
    }
    if (num_is_sum) ns = "(" + ns + ")";
    std::string ds = terms_to_string(den_, alg_->names);
    // A denominator re-parses unambiguously only as a single power of one
    // generator; everything else gets parentheses.
    bool simple = den_.size() == 1;
    if (simple) {
        int nz = 0;
        for (int e : den_.begin()->first) nz += e != 0;
        simple = nz == 1 && den_.begin()->second.is_one();
    }
    if (!simple) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

bool CoeffElem::prints_as_sum() const {
    if (!has_trivial_denominator()) return false;
    if (num_.size() > 1) return true;
    if (num_.size() == 1) {
        // A lone constant whose scalar prints as a sum still needs wrapping.
        const auto& [e, c] = *num_.begin();
        if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }) && c.prints_as_sum())
            return true;
    }
    return false;
}

} // namespace twc
