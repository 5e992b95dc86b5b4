#pragma once

#include <functional>
#include <span>
#include <vector>

#include "twistcalc/coeff.hpp"

namespace twc {

/// One affine twist sigma(x_target) = q*x_target + h, fixing every other
/// generator. A TwistSpec is a finite family of these; the diagonal case
/// (twist i targets generator i) is the coordinate frame used by the Weyl
/// and module layers.
struct Twist {
    int target = 0;
    Scalar q;
    Scalar h;
};

class TwistSpec {
public:
    TwistSpec() = default;  // empty; assign before use

    /// The diagonal family: one twist per generator, twist i on x_i.
    static TwistSpec diagonal(const AlgebraPtr& alg, std::vector<std::pair<Scalar, Scalar>> qh);
    /// A general family of affine twists with explicit targets; pairwise
    /// commutation is verified at construction.
    static TwistSpec family(const AlgebraPtr& alg, std::vector<Twist> twists);

    const AlgebraPtr& algebra() const { return alg_; }
    int count() const { return static_cast<int>(twists_.size()); }
    const Twist& twist(int i) const { return twists_.at(i); }
    bool is_diagonal() const { return diagonal_; }

    /// y_i = x_{target(i)} - sigma_i(x_{target(i)}) = (1-q_i) x - h_i.
    const CoeffElem& y(int i) const { return y_.at(i); }
    const std::vector<CoeffElem>& y_all() const { return y_; }
    /// True when every y_i is a unit of the coefficient algebra.
    bool is_strong() const { return strong_; }

    CoeffElem apply_endo(int i, const CoeffElem& f) const;
    CoeffElem apply_endo_inverse(int i, const CoeffElem& f) const;
    /// Composite endomorphism over a word of 1-based signed indices
    /// (negative w means sigma_{|w|}^{-1}); letters apply right to left.
    CoeffElem apply_endo_word(std::span<const int> word, const CoeffElem& f) const;
    /// The sigma_i-derivation with d_i(x_{target(i)}) = 1 and 0 on the other
    /// generators, extended by the twisted Leibniz rule and, in Laurent and
    /// rational-function mode, by the localization quotient formula.
    CoeffElem apply_derivation(int i, const CoeffElem& f) const;

    bool operator==(const TwistSpec& o) const;

private:
    AlgebraPtr alg_;
    std::vector<Twist> twists_;
    std::vector<CoeffElem> y_;
    bool diagonal_ = false;
    bool strong_ = false;
};

struct SchwarzViolation {
    int i = 0;
    int j = 0;
    /// 1: derivations fail to commute; 2: sigma_i fails to commute with d_j.
    int condition = 0;
};

struct SchwarzReport {
    bool ok = true;
    std::vector<SchwarzViolation> violations;
};

/// Checks both Schwarz conditions on all pairs, evaluated on the generators.
/// This is sufficient: each composite obeys a twisted product rule determined
/// by the (commuting) twists alone, and two maps obeying the same rule that
/// agree on generators and kill scalars agree everywhere (docs/notes.md).
SchwarzReport schwarz_check(const TwistSpec& t);

/// True iff both closed-form expansions of d(x^k) (the sigma-power sum and
/// the binomial (-y)-sum) agree with the Leibniz recursion. Poly mode only.
bool derivation_power_formula_check(const TwistSpec& t, int i, int k);

/// Echelonized basis of { f : deg f <= bound, sigma_i(f) = f for all i }.
std::vector<CoeffElem> invariants_basis(const TwistSpec& t, int degree_bound);
/// Echelonized basis of { f : deg f <= bound, d_i(f) = 0 for all i }.
std::vector<CoeffElem> constants_basis(const TwistSpec& t, int degree_bound);

/// Monomial exponents spanning the bounded slice used by the solvers:
/// total degree <= bound in Poly mode, the |e_i| <= bound box in Laurent
/// mode. Grlex-ascending.
std::vector<Exps> bounded_monomials(const AlgebraPtr& alg, int degree_bound);

/// Echelonized kernel of a family of linear operators on the span of the
/// given monomials. Operators may map outside the span; every image
/// coordinate is constrained to zero.
std::vector<CoeffElem> bounded_joint_kernel(
    const AlgebraPtr& alg, const std::vector<Exps>& monomials,
    const std::vector<std::function<CoeffElem(const CoeffElem&)>>& ops);

} // namespace twc
