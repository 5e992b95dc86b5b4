#include "twistcalc/ore.hpp"

#include <algorithm>

#include "twistcalc/error.hpp"
#include "twistcalc/linalg.hpp"

namespace twc {

std::string OreAlgebra::op_symbol(int i) const {
    std::string base = kind == OreKind::Graded ? "T" : "d";
    if (nops() == 1) return base;
    return base + std::to_string(i + 1);
}

std::string OreAlgebra::description() const {
    std::string s = coeffs->description();
    s += kind == OreKind::Graded ? (inversive_vars ? "[T^+-]_sigma" : "[T]_sigma") : "[d]_weyl";
    return s;
}

OrePtr make_ore_algebra(const AlgebraPtr& coeffs, const TwistSpec& twist, OreKind kind,
                        bool inversive_vars) {
    if (!same_algebra(coeffs, twist.algebra()))
        fail(Errc::InvalidArgument, "twist family is not over the coefficient algebra");
    if (kind == OreKind::Weyl) {
        if (inversive_vars) fail(Errc::InvalidArgument, "weyl operators have no negative powers");
        SchwarzReport rep = schwarz_check(twist);
        if (!rep.ok)
            fail(Errc::SchwarzViolated,
                 "weyl algebra needs a Schwarz-type family; pair (" +
                     std::to_string(rep.violations[0].i + 1) + "," +
                     std::to_string(rep.violations[0].j + 1) + ") fails");
    }
    if (inversive_vars)
        for (int i = 0; i < twist.count(); ++i)
            if (twist.twist(i).q.is_zero())
                fail(Errc::NotInvertible, "inversive operator variables need invertible twists");
    OreAlgebra a;
    a.coeffs = coeffs;
    a.twist = twist;
    a.kind = kind;
    a.inversive_vars = inversive_vars;
    return std::make_shared<const OreAlgebra>(std::move(a));
}

OrePtr partner_algebra(const OrePtr& alg) {
    return make_ore_algebra(alg->coeffs, alg->twist,
                            alg->kind == OreKind::Graded ? OreKind::Weyl : OreKind::Graded, false);
}

// ---------------------------------------------------------------------------
// Construction and normal form upkeep.

namespace {
void check_opdeg(const OreAlgebra& a, const Exps& u) {
    if (static_cast<int>(u.size()) != a.nops())
        fail(Errc::InvalidArgument, "operator multidegree width mismatch");
    if (a.kind == OreKind::Weyl || !a.inversive_vars)
        for (int e : u)
            if (e < 0) fail(Errc::InvalidArgument, "negative operator exponent");
}
} // namespace

OreOperator OreOperator::zero(const OrePtr& a) { return OreOperator(a, {}); }

OreOperator OreOperator::one(const OrePtr& a) { return from_coeff(a, CoeffElem::one(a->coeffs)); }

OreOperator OreOperator::from_coeff(const OrePtr& a, const CoeffElem& c) {
    return term(a, Exps(a->nops(), 0), c);
}

OreOperator OreOperator::generator(const OrePtr& a, int i, int power) {
    Exps u(a->nops(), 0);
    u.at(i) = power;
    return term(a, u, CoeffElem::one(a->coeffs));
}

OreOperator OreOperator::term(const OrePtr& a, const Exps& opdeg, const CoeffElem& c) {
    check_opdeg(*a, opdeg);
    if (!same_algebra(c.algebra(), a->coeffs))
        fail(Errc::FieldMismatch, "coefficient not in " + a->coeffs->description());
    std::map<Exps, CoeffElem, GrlexLess> t;
    if (!c.is_zero()) t.emplace(opdeg, c);
    return OreOperator(a, std::move(t));
}

OreOperator OreOperator::from_terms(const OrePtr& a, std::map<Exps, CoeffElem, GrlexLess> t) {
    for (auto it = t.begin(); it != t.end();) {
        check_opdeg(*a, it->first);
        it = it->second.is_zero() ? t.erase(it) : std::next(it);
    }
    return OreOperator(a, std::move(t));
}

namespace {
void require_same_ore(const OreOperator& a, const OreOperator& b) {
    if (!same_ore_algebra(a.algebra(), b.algebra()))
        fail(Errc::FieldMismatch, "operators from different algebras");
}

void add_to(std::map<Exps, CoeffElem, GrlexLess>& t, const Exps& u, const CoeffElem& c) {
    if (c.is_zero()) return;
    auto it = t.find(u);
    if (it == t.end()) {
        t.emplace(u, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}
} // namespace

OreOperator OreOperator::operator+(const OreOperator& o) const {
    require_same_ore(*this, o);
    auto t = terms_;
    for (const auto& [u, c] : o.terms_) add_to(t, u, c);
    return OreOperator(alg_, std::move(t));
}

OreOperator OreOperator::operator-() const {
    auto t = terms_;
    for (auto& [u, c] : t) c = -c;
    return OreOperator(alg_, std::move(t));
}

OreOperator OreOperator::operator-(const OreOperator& o) const { return *this + (-o); }

// ---------------------------------------------------------------------------
// Multiplication.

namespace {

// Composite endomorphism sigma^u (entries of u may be negative).
CoeffElem apply_endo_power(const TwistSpec& tw, const Exps& u, const CoeffElem& g) {
    CoeffElem r = g;
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (int k = 0; k < u[i]; ++k) r = tw.apply_endo(static_cast<int>(i), r);
        for (int k = 0; k > u[i]; --k) r = tw.apply_endo_inverse(static_cast<int>(i), r);
    }
    return r;
}

// Normal form of d^u * g in the Weyl algebra, one d_i push at a time:
// d_i c = d_i(c) + sigma_i(c) d_i.
std::map<Exps, CoeffElem, GrlexLess> weyl_push(const TwistSpec& tw, const Exps& u,
                                               const CoeffElem& g) {
    std::map<Exps, CoeffElem, GrlexLess> cur;
    cur.emplace(Exps(u.size(), 0), g);
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (int k = 0; k < u[i]; ++k) {
            std::map<Exps, CoeffElem, GrlexLess> next;
            for (const auto& [w, c] : cur) {
                add_to(next, w, tw.apply_derivation(static_cast<int>(i), c));
                Exps w2 = w;
                ++w2[i];
                add_to(next, w2, tw.apply_endo(static_cast<int>(i), c));
            }
            cur = std::move(next);
        }
    }
    return cur;
}

} // namespace

OreOperator OreOperator::operator*(const OreOperator& o) const {
    require_same_ore(*this, o);
    const int m = alg_->nops();
    std::map<Exps, CoeffElem, GrlexLess> t;
    for (const auto& [u, f] : terms_) {
        for (const auto& [v, g] : o.terms_) {
            if (alg_->kind == OreKind::Graded) {
                Exps w = u;
                for (int i = 0; i < m; ++i) w[i] += v[i];
                add_to(t, w, f * apply_endo_power(alg_->twist, u, g));
            } else {
                for (const auto& [w, c] : weyl_push(alg_->twist, u, g)) {
                    Exps w2 = w;
                    for (int i = 0; i < m; ++i) w2[i] += v[i];
                    add_to(t, w2, f * c);
                }
            }
        }
    }
    return OreOperator(alg_, std::move(t));
}

OreOperator OreOperator::pow(std::int64_t e) const {
    if (e < 0) {
        // Only single-term operators with unit coefficient invert, and a
        // nonzero multidegree needs inversive variables:
        // (f T^u)^{-1} = sigma^{-u}(f^{-1}) T^{-u}.
        if (terms_.size() != 1)
            fail(Errc::NotInvertible, "operator has no inverse in this algebra");
        const auto& [u, f] = *terms_.begin();
        const bool pure_coeff = std::all_of(u.begin(), u.end(), [](int x) { return x == 0; });
        if (!pure_coeff && (alg_->kind != OreKind::Graded || !alg_->inversive_vars))
            fail(Errc::NotInvertible, "operator has no inverse in this algebra");
        Exps nu = u;
        for (auto& x : nu) x = -x;
        CoeffElem c = apply_endo_power(alg_->twist, nu, f.inv());
        return term(alg_, nu, c).pow(-e);
    }
    OreOperator acc = one(alg_);
    OreOperator base = *this;
    for (std::int64_t k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        if (k > 1) base *= base;
    }
    return acc;
}

CoeffElem OreOperator::apply(const CoeffElem& f) const {
    if (!same_algebra(f.algebra(), alg_->coeffs))
        fail(Errc::FieldMismatch, "operand not in " + alg_->coeffs->description());
    CoeffElem acc = CoeffElem::zero(alg_->coeffs);
    for (const auto& [u, c] : terms_) {
        CoeffElem v = f;
        if (alg_->kind == OreKind::Graded) {
            v = apply_endo_power(alg_->twist, u, v);
        } else {
            for (std::size_t i = 0; i < u.size(); ++i)
                for (int k = 0; k < u[i]; ++k) v = alg_->twist.apply_derivation(static_cast<int>(i), v);
        }
        acc += c * v;
    }
    return acc;
}

int OreOperator::degree() const {
    int d = -1;
    for (const auto& [u, c] : terms_) d = std::max(d, total_degree(u));
    return d;
}

bool OreOperator::operator==(const OreOperator& o) const {
    return same_ore_algebra(alg_, o.alg_) && terms_ == o.terms_;
}

OreOperator commutator(const OreOperator& p, const OreOperator& q) { return p * q - q * p; }

OreOperator sigma_as_operator(const OrePtr& weyl, int i) {
    if (weyl->kind != OreKind::Weyl) fail(Errc::InvalidArgument, "sigma operator lives in the Weyl algebra");
    Exps u(weyl->nops(), 0);
    u.at(i) = 1;
    return OreOperator::one(weyl) + OreOperator::term(weyl, u, -weyl->twist.y(i));
}

// ---------------------------------------------------------------------------
// Presentation changes.

OreOperator convert_T_to_d(const OreOperator& p, const OrePtr& weyl) {
    const OrePtr& src = p.algebra();
    if (src->kind != OreKind::Graded || weyl->kind != OreKind::Weyl)
        fail(Errc::InvalidArgument, "convert_T_to_d maps Graded to Weyl");
    if (!same_algebra(src->coeffs, weyl->coeffs) || !(src->twist == weyl->twist))
        fail(Errc::InvalidArgument, "algebras do not share coefficients and twists");
    OreOperator out = OreOperator::zero(weyl);
    for (const auto& [u, f] : p.terms()) {
        OreOperator factor = OreOperator::from_coeff(weyl, f);
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] < 0)
                fail(Errc::NotInvertible, "negative T powers have no Weyl image");
            for (int k = 0; k < u[i]; ++k) factor *= sigma_as_operator(weyl, static_cast<int>(i));
        }
        out += factor;
    }
    return out;
}

OreOperator convert_d_to_T(const OreOperator& p, const OrePtr& graded) {
    const OrePtr& src = p.algebra();
    if (src->kind != OreKind::Weyl || graded->kind != OreKind::Graded)
        fail(Errc::InvalidArgument, "convert_d_to_T maps Weyl to Graded");
    if (!same_algebra(src->coeffs, graded->coeffs) || !(src->twist == graded->twist))
        fail(Errc::InvalidArgument, "algebras do not share coefficients and twists");
    const TwistSpec& tw = graded->twist;
    if (!tw.is_strong())
        fail(Errc::NotStrong, "d -> T needs strong twists (every y_i a unit)");
    OreOperator out = OreOperator::zero(graded);
    for (const auto& [u, f] : p.terms()) {
        OreOperator factor = OreOperator::from_coeff(graded, f);
        for (std::size_t i = 0; i < u.size(); ++i) {
            const CoeffElem yi = tw.y(static_cast<int>(i)).inv();
            Exps ei(graded->nops(), 0);
            ei[i] = 1;
            // (1/y_i)(1 - T_i)
            OreOperator img = OreOperator::from_coeff(graded, yi) + OreOperator::term(graded, ei, -yi);
            for (int k = 0; k < u[i]; ++k) factor *= img;
        }
        out += factor;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Degree-bounded centralizer and center.

std::vector<OreOperator> centralizer_basis(const OrePtr& alg, CentralizeMode mode, int x_bound,
                                           int op_bound) {
    if (alg->kind != OreKind::Graded)
        fail(Errc::InvalidArgument, "centralizer solver is for the Graded kind");
    if (alg->coeffs->mode == CoeffMode::RatFunc)
        fail(Errc::InvalidArgument, "centralizer solver needs poly or laurent coefficients");
    if (x_bound < 0 || op_bound < 0) fail(Errc::InvalidArgument, "negative bound");
    const AlgebraPtr& ca = alg->coeffs;
    const FieldPtr& f = ca->field;
    const int m = alg->nops();

    // Operator multidegrees: total degree <= op_bound (the |e| <= op_bound box
    // when inversive).
    std::vector<Exps> opdegs;
    Exps cur(m, 0);
    auto rec = [&](auto&& self, int var, int budget) -> void {
        if (var == m) {
            opdegs.push_back(cur);
            return;
        }
        const int lo = alg->inversive_vars ? -op_bound : 0;
        const int hi = alg->inversive_vars ? op_bound : budget;
        for (int e = lo; e <= hi; ++e) {
            cur[var] = e;
            self(self, var + 1, alg->inversive_vars ? budget : budget - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, op_bound);
    std::sort(opdegs.begin(), opdegs.end(), GrlexLess{});
    const std::vector<Exps> monos = bounded_monomials(ca, x_bound);

    // Column space: pairs (operator multidegree, coefficient monomial).
    struct Coord {
        int constraint;
        Exps op;
        Exps mono;
        bool operator<(const Coord& o) const {
            if (constraint != o.constraint) return constraint < o.constraint;
            GrlexLess less;
            if (less(op, o.op)) return true;
            if (less(o.op, op)) return false;
            return less(mono, o.mono);
        }
    };
    std::vector<std::pair<Exps, Exps>> columns;
    for (const auto& u : opdegs)
        for (const auto& e : monos) columns.emplace_back(u, e);
    const int ncols = static_cast<int>(columns.size());

    // Constraint operators: commutators with each generator, plus each T_j in
    // FullCenter mode. Each constraint contributes its own block of rows.
    std::vector<OreOperator> constraints;
    for (int g = 0; g < ca->nvars(); ++g)
        constraints.push_back(OreOperator::from_coeff(alg, CoeffElem::generator(ca, g)));
    if (mode == CentralizeMode::FullCenter)
        for (int j = 0; j < m; ++j) constraints.push_back(OreOperator::generator(alg, j));

    std::map<Coord, int> row_index;
    std::vector<std::vector<std::pair<Coord, Scalar>>> images(columns.size());
    for (int col = 0; col < ncols; ++col) {
        OreOperator b = OreOperator::term(alg, columns[col].first,
                                          CoeffElem::monomial(ca, columns[col].second, Scalar::one(f)));
        for (std::size_t k = 0; k < constraints.size(); ++k) {
            OreOperator c = commutator(b, constraints[k]);
            for (const auto& [u, coeff] : c.terms())
                for (const auto& [e, s] : coeff.numer_terms()) {
                    Coord key{static_cast<int>(k), u, e};
                    row_index.emplace(key, 0);
                    images[col].emplace_back(key, s);
                }
        }
    }
    int nrows = 0;
    for (auto& [k, idx] : row_index) idx = nrows++;
    std::vector<ScalarRow> mrows(nrows, ScalarRow(ncols, Scalar::zero(f)));
    for (int col = 0; col < ncols; ++col)
        for (const auto& [key, s] : images[col]) mrows[row_index.at(key)][col] += s;

    std::vector<ScalarRow> ker = kernel_basis(mrows, ncols, f);
    std::vector<ScalarRow> flipped;
    flipped.reserve(ker.size());
    for (const auto& v : ker) flipped.emplace_back(v.rbegin(), v.rend());
    rref(flipped, f);
    std::vector<OreOperator> basis;
    for (auto it = flipped.rbegin(); it != flipped.rend(); ++it) {
        std::map<Exps, CoeffElem, GrlexLess> terms;
        std::map<Exps, TermMap, GrlexLess> raw;
        for (int c = 0; c < ncols; ++c) {
            const Scalar& s = (*it)[c];
            if (s.is_zero()) continue;
            const auto& [u, e] = columns[ncols - 1 - c];
            raw[u].emplace(e, s);
        }
        for (auto& [u, t] : raw) terms.emplace(u, CoeffElem::from_terms(ca, std::move(t)));
        basis.push_back(OreOperator::from_terms(alg, std::move(terms)));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Printing.

namespace {

// Pull a clean minus sign out of single-term coefficients over Q-like scalars.
bool coeff_sign_split(const CoeffElem& c, CoeffElem& magnitude) {
    const auto& t = c.numer_terms();
    if (t.size() != 1 || !c.has_trivial_denominator()) return false;
    const Scalar& s = t.begin()->second;
    if (s.field()->kind == FieldKind::Rational && s.rat() < 0) {
        magnitude = -c;
        return true;
    }
    return false;
}

} // namespace

std::string OreOperator::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [u, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += alg_->op_symbol(static_cast<int>(i));
            if (u[i] != 1) mono += "^" + std::to_string(u[i]);
        }
        CoeffElem mag = c;
        bool neg = coeff_sign_split(c, mag);
        std::string cs;
        if (mono.empty()) {
            cs = mag.to_string();
            if (mag.prints_as_sum() && (neg || terms_.size() > 1)) cs = "(" + cs + ")";
        } else if (mag.is_one()) {
            cs = mono;
        } else {
            cs = mag.to_string();
            if (mag.prints_as_sum()) cs = "(" + cs + ")";
            cs += "*" + mono;
        }
        if (out.empty())
            out = neg ? "-" + cs : cs;
        else
            out += (neg ? " - " : " + ") + cs;
    }
    return out;
}

} // namespace twc
