#include "twistcalc/twist.hpp"

#include <algorithm>

#include "twistcalc/error.hpp"
#include "twistcalc/linalg.hpp"

namespace twc {

namespace {

// Substitute x_var -> q*x_var + h in a term map. Laurent maps require h = 0
// (checked by the TwistSpec invariants before we ever get here).
TermMap subst_affine(const TermMap& t, const AlgebraPtr& alg, int var, const Scalar& q,
                     const Scalar& h) {
    const FieldPtr& f = alg->field;
    const int n = alg->nvars();
    if (h.is_zero()) {
        TermMap r;
        for (const auto& [e, c] : t) tm::add_term(r, e, c * q.pow(e[var]));
        return r;
    }
    int maxk = 0;
    for (const auto& [e, c] : t) {
        if (e[var] < 0) fail(Errc::InvalidArgument, "affine substitution on a negative power");
        maxk = std::max(maxk, e[var]);
    }
    // Powers of the affine image q*x + h.
    TermMap ax;
    Exps ex(n, 0);
    ex[var] = 1;
    tm::add_term(ax, ex, q);
    tm::add_term(ax, Exps(n, 0), h);
    std::vector<TermMap> pw(maxk + 1);
    pw[0] = tm::one(f, n);
    for (int k = 1; k <= maxk; ++k) pw[k] = tm::mul(pw[k - 1], ax);
    TermMap r;
    for (const auto& [e, c] : t) {
        Exps rest = e;
        rest[var] = 0;
        for (const auto& [pe, pc] : pw[e[var]]) {
            Exps img = pe;
            for (int i = 0; i < n; ++i) img[i] += rest[i];
            tm::add_term(r, img, c * pc);
        }
    }
    return r;
}

// d(x^k) as a univariate-in-x_var term map, by the sigma-power sum
// sum_{i+j+1=k} x^i sigma(x)^j. Laurent negatives use (k)_q x^{k-1}.
TermMap derivation_of_power(const AlgebraPtr& alg, int var, const Scalar& q, const Scalar& h,
                            int k) {
    const FieldPtr& f = alg->field;
    const int n = alg->nvars();
    TermMap r;
    if (k == 0) return r;
    if (h.is_zero()) {
        Exps e(n, 0);
        e[var] = k - 1;
        tm::add_term(r, e, quantum_integer(k, q));
        return r;
    }
    if (k < 0) fail(Errc::InvalidArgument, "negative power needs h = 0");
    TermMap ax;
    Exps ex(n, 0);
    ex[var] = 1;
    tm::add_term(ax, ex, q);
    tm::add_term(ax, Exps(n, 0), h);
    TermMap spow = tm::one(f, n);  // sigma(x)^j, j ascending
    for (int j = 0; j <= k - 1; ++j) {
        const int i = k - 1 - j;
        for (const auto& [pe, pc] : spow) {
            Exps e = pe;
            e[var] += i;
            tm::add_term(r, e, pc);
        }
        if (j < k - 1) spow = tm::mul(spow, ax);
    }
    return r;
}

TermMap derive_terms(const TermMap& t, const AlgebraPtr& alg, int var, const Scalar& q,
                     const Scalar& h) {
    TermMap r;
    for (const auto& [e, c] : t) {
        if (e[var] == 0) continue;
        TermMap d = derivation_of_power(alg, var, q, h, e[var]);
        Exps rest = e;
        rest[var] = 0;
        for (const auto& [de, dc] : d) {
            Exps img = de;
            for (std::size_t i = 0; i < img.size(); ++i) img[i] += rest[i];
            tm::add_term(r, img, c * dc);
        }
    }
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// Construction.

TwistSpec TwistSpec::diagonal(const AlgebraPtr& alg,
                              std::vector<std::pair<Scalar, Scalar>> qh) {
    if (static_cast<int>(qh.size()) != alg->nvars())
        fail(Errc::InvalidTwist, "diagonal twists need one (q,h) per generator");
    std::vector<Twist> tw;
    tw.reserve(qh.size());
    for (std::size_t i = 0; i < qh.size(); ++i)
        tw.push_back(Twist{static_cast<int>(i), std::move(qh[i].first), std::move(qh[i].second)});
    return family(alg, std::move(tw));
}

TwistSpec TwistSpec::family(const AlgebraPtr& alg, std::vector<Twist> twists) {
    if (twists.empty()) fail(Errc::InvalidTwist, "empty twist family");
    TwistSpec t;
    t.alg_ = alg;
    for (auto& tw : twists) {
        if (tw.target < 0 || tw.target >= alg->nvars())
            fail(Errc::InvalidTwist, "twist target out of range");
        if (!same_field(tw.q.field(), alg->field) || !same_field(tw.h.field(), alg->field))
            fail(Errc::FieldMismatch, "twist parameters not in " + alg->field->description());
        if (alg->mode == CoeffMode::Laurent) {
            if (!tw.h.is_zero())
                fail(Errc::InvalidTwist, "laurent mode requires h = 0 (sigma must map the unit "
                                         "generator to a unit)");
            if (tw.q.is_zero()) fail(Errc::InvalidTwist, "laurent mode requires q != 0");
        }
        if (alg->mode == CoeffMode::RatFunc && tw.q.is_zero())
            fail(Errc::InvalidTwist, "ratfunc mode requires q != 0 (sigma must be injective)");
    }
    // Same-target twists must commute: sigma_s sigma_t (x) = q_s q_t x + q_s h_t + h_s.
    for (std::size_t s = 0; s < twists.size(); ++s)
        for (std::size_t u = s + 1; u < twists.size(); ++u) {
            if (twists[s].target != twists[u].target) continue;
            const Scalar lhs = twists[s].q * twists[u].h + twists[s].h;
            const Scalar rhs = twists[u].q * twists[s].h + twists[u].h;
            if (!(lhs == rhs))
                fail(Errc::InvalidTwist, "twists " + std::to_string(s) + " and " +
                                             std::to_string(u) + " do not commute");
        }
    t.diagonal_ = static_cast<int>(twists.size()) == alg->nvars();
    for (std::size_t i = 0; i < twists.size() && t.diagonal_; ++i)
        if (twists[i].target != static_cast<int>(i)) t.diagonal_ = false;
    t.twists_ = std::move(twists);
    t.strong_ = true;
    const Scalar one = Scalar::one(alg->field);
    for (const auto& tw : t.twists_) {
        CoeffElem x = CoeffElem::generator(alg, tw.target);
        CoeffElem y = x * (one - tw.q) - CoeffElem::from_scalar(alg, tw.h);
        t.strong_ = t.strong_ && y.is_unit();
        t.y_.push_back(std::move(y));
    }
    return t;
}

bool TwistSpec::operator==(const TwistSpec& o) const {
    if (!same_algebra(alg_, o.alg_) || twists_.size() != o.twists_.size()) return false;
    for (std::size_t i = 0; i < twists_.size(); ++i)
        if (twists_[i].target != o.twists_[i].target || !(twists_[i].q == o.twists_[i].q) ||
            !(twists_[i].h == o.twists_[i].h))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Endomorphisms and derivations.

CoeffElem TwistSpec::apply_endo(int i, const CoeffElem& f) const {
    const Twist& tw = twists_.at(i);
    if (!same_algebra(f.algebra(), alg_)) fail(Errc::FieldMismatch, "element not in the twisted algebra");
    if (alg_->mode != CoeffMode::RatFunc)
        return CoeffElem::from_terms(alg_, subst_affine(f.numer_terms(), alg_, tw.target, tw.q, tw.h));
    return CoeffElem::fraction(alg_, subst_affine(f.numer_terms(), alg_, tw.target, tw.q, tw.h),
                               subst_affine(f.denom_terms(), alg_, tw.target, tw.q, tw.h));
}

CoeffElem TwistSpec::apply_endo_inverse(int i, const CoeffElem& f) const {
    const Twist& tw = twists_.at(i);
    if (tw.q.is_zero())
        fail(Errc::NotInvertible, "sigma_" + std::to_string(i + 1) + " has q = 0");
    const Scalar qi = tw.q.inv();
    const Scalar hi = -(tw.h * qi);
    if (!same_algebra(f.algebra(), alg_)) fail(Errc::FieldMismatch, "element not in the twisted algebra");
    if (alg_->mode != CoeffMode::RatFunc)
        return CoeffElem::from_terms(alg_, subst_affine(f.numer_terms(), alg_, tw.target, qi, hi));
    return CoeffElem::fraction(alg_, subst_affine(f.numer_terms(), alg_, tw.target, qi, hi),
                               subst_affine(f.denom_terms(), alg_, tw.target, qi, hi));
}

CoeffElem TwistSpec::apply_endo_word(std::span<const int> word, const CoeffElem& f) const {
    CoeffElem r = f;
    for (std::size_t k = word.size(); k-- > 0;) {
        int w = word[k];
        if (w == 0 || std::abs(w) > count())
            fail(Errc::InvalidArgument, "word letter out of range");
        r = w > 0 ? apply_endo(w - 1, r) : apply_endo_inverse(-w - 1, r);
    }
    return r;
}

CoeffElem TwistSpec::apply_derivation(int i, const CoeffElem& f) const {
    const Twist& tw = twists_.at(i);
    if (!same_algebra(f.algebra(), alg_)) fail(Errc::FieldMismatch, "element not in the twisted algebra");
    if (alg_->mode != CoeffMode::RatFunc)
        return CoeffElem::from_terms(alg_, derive_terms(f.numer_terms(), alg_, tw.target, tw.q, tw.h));
    // d(n/z) = (d(n) z - n d(z)) / (z sigma(z)); sigma(z) != 0 since q != 0.
    const TermMap& n = f.numer_terms();
    const TermMap& z = f.denom_terms();
    TermMap dn = derive_terms(n, alg_, tw.target, tw.q, tw.h);
    TermMap dz = derive_terms(z, alg_, tw.target, tw.q, tw.h);
    TermMap num = tm::sub(tm::mul(dn, z), tm::mul(n, dz));
    TermMap den = tm::mul(z, subst_affine(z, alg_, tw.target, tw.q, tw.h));
    return CoeffElem::fraction(alg_, std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------
// Checks.

SchwarzReport schwarz_check(const TwistSpec& t) {
    SchwarzReport rep;
    const AlgebraPtr& alg = t.algebra();
    const int m = t.count();
    for (int g = 0; g < alg->nvars(); ++g) {
        const CoeffElem xg = CoeffElem::generator(alg, g);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (j < i) {
                    const CoeffElem dd1 = t.apply_derivation(i, t.apply_derivation(j, xg));
                    const CoeffElem dd2 = t.apply_derivation(j, t.apply_derivation(i, xg));
                    if (!(dd1 == dd2)) rep.violations.push_back({j, i, 1});
                }
                if (i != j) {
                    const CoeffElem sd = t.apply_endo(i, t.apply_derivation(j, xg));
                    const CoeffElem ds = t.apply_derivation(j, t.apply_endo(i, xg));
                    if (!(sd == ds)) rep.violations.push_back({i, j, 2});
                }
            }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

bool derivation_power_formula_check(const TwistSpec& t, int i, int k) {
    const AlgebraPtr& alg = t.algebra();
    if (alg->mode != CoeffMode::Poly)
        fail(Errc::InvalidArgument, "power formula check is for poly mode");
    if (k < 1) fail(Errc::InvalidArgument, "k must be positive");
    const Twist& tw = t.twist(i);
    const FieldPtr& f = alg->field;
    const CoeffElem x = CoeffElem::generator(alg, tw.target);
    const CoeffElem sx = t.apply_endo(i, x);

    // Route 1: sum_{j=0}^{k-1} x^j sigma(x)^{k-1-j}.
    CoeffElem r1 = CoeffElem::zero(alg);
    for (int j = 0; j <= k - 1; ++j) r1 += x.pow(j) * sx.pow(k - 1 - j);

    // Route 2: sum_{j=0}^{k-1} C(k,j) (-y)^{k-1-j} x^j.
    const CoeffElem y = x - sx;
    std::vector<Scalar> binom(k + 1, Scalar::zero(f));  // C(k, j) in the field
    binom[0] = Scalar::one(f);
    for (int row = 1; row <= k; ++row)
        for (int j = row; j >= 1; --j) binom[j] += binom[j - 1];
    CoeffElem r2 = CoeffElem::zero(alg);
    for (int j = 0; j <= k - 1; ++j) r2 += (-y).pow(k - 1 - j) * x.pow(j) * binom[j];

    // Route 3: the Leibniz recursion d(x^m) = x^{m-1} + sigma(x) d(x^{m-1}).
    CoeffElem r3 = CoeffElem::zero(alg);
    for (int m = 1; m <= k; ++m) r3 = x.pow(m - 1) + sx * r3;

    return r1 == r2 && r2 == r3;
}

// ---------------------------------------------------------------------------
// Degree-bounded solvers.

std::vector<Exps> bounded_monomials(const AlgebraPtr& alg, int degree_bound) {
    if (degree_bound < 0) fail(Errc::InvalidArgument, "negative degree bound");
    const int n = alg->nvars();
    const bool laurent = alg->mode == CoeffMode::Laurent;
    std::vector<Exps> out;
    Exps cur(n, 0);
    // Poly: total degree <= bound; Laurent: the box |e_i| <= bound.
    auto rec = [&](auto&& self, int var, int budget) -> void {
        if (var == n) {
            out.push_back(cur);
            return;
        }
        const int lo = laurent ? -degree_bound : 0;
        const int hi = laurent ? degree_bound : budget;
        for (int e = lo; e <= hi; ++e) {
            cur[var] = e;
            self(self, var + 1, laurent ? budget : budget - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, degree_bound);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

std::vector<CoeffElem> bounded_joint_kernel(
    const AlgebraPtr& alg, const std::vector<Exps>& monomials,
    const std::vector<std::function<CoeffElem(const CoeffElem&)>>& ops) {
    const FieldPtr& f = alg->field;
    // Images of every basis monomial under every operator.
    std::vector<std::vector<TermMap>> images(ops.size());
    std::map<Exps, int, GrlexLess> image_index;
    for (std::size_t k = 0; k < ops.size(); ++k) {
        images[k].reserve(monomials.size());
        for (const auto& e : monomials) {
            CoeffElem img = ops[k](CoeffElem::monomial(alg, e, Scalar::one(f)));
            if (!img.has_trivial_denominator())
                fail(Errc::InvalidArgument, "operator image leaves the polynomial span");
            for (const auto& [ie, ic] : img.numer_terms()) image_index.emplace(ie, 0);
            images[k].push_back(img.numer_terms());
        }
    }
    int nrows = 0;
    for (auto& [e, idx] : image_index) idx = nrows++;
    // Constraint matrix: one row per (operator, image monomial), one column
    // per basis monomial.
    const int ncols = static_cast<int>(monomials.size());
    std::vector<ScalarRow> m(nrows * ops.size(), ScalarRow(ncols, Scalar::zero(f)));
    for (std::size_t k = 0; k < ops.size(); ++k)
        for (int col = 0; col < ncols; ++col)
            for (const auto& [ie, ic] : images[k][col])
                m[k * nrows + image_index.at(ie)][col] = ic;
    std::vector<ScalarRow> ker = kernel_basis(m, ncols, f);
    // Canonical presentation: echelonize against descending-grlex columns so
    // each basis vector is monic in its grlex-leading monomial.
    std::vector<ScalarRow> flipped;
    flipped.reserve(ker.size());
    for (const auto& v : ker) flipped.emplace_back(v.rbegin(), v.rend());
    rref(flipped, f);
    std::vector<CoeffElem> basis;
    for (auto it = flipped.rbegin(); it != flipped.rend(); ++it) {
        TermMap terms;
        for (int c = 0; c < ncols; ++c)
            if (!(*it)[c].is_zero()) terms.emplace(monomials[ncols - 1 - c], (*it)[c]);
        basis.push_back(CoeffElem::from_terms(alg, std::move(terms)));
    }
    return basis;
}

namespace {

std::vector<CoeffElem> solve_basis(const TwistSpec& t, int degree_bound, bool derivations) {
    const AlgebraPtr& alg = t.algebra();
    if (alg->mode == CoeffMode::RatFunc)
        fail(Errc::InvalidArgument, "degree-bounded solvers need poly or laurent mode");
    std::vector<std::function<CoeffElem(const CoeffElem&)>> ops;
    for (int i = 0; i < t.count(); ++i) {
        if (derivations)
            ops.emplace_back([&t, i](const CoeffElem& g) { return t.apply_derivation(i, g); });
        else
            ops.emplace_back([&t, i](const CoeffElem& g) { return g - t.apply_endo(i, g); });
    }
    return bounded_joint_kernel(alg, bounded_monomials(alg, degree_bound), ops);
}

} // namespace

std::vector<CoeffElem> invariants_basis(const TwistSpec& t, int degree_bound) {
    return solve_basis(t, degree_bound, false);
}

std::vector<CoeffElem> constants_basis(const TwistSpec& t, int degree_bound) {
    return solve_basis(t, degree_bound, true);
}

} // namespace twc
