#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "twistcalc/twist.hpp"

namespace twc {

/// Graded: the twisted polynomial ring A[T_1..T_m] with T_i x = sigma_i(x) T_i
/// (exponents in Z^m when inversive_vars). Weyl: the twisted Weyl algebra with
/// d_i x = d_i(x) + sigma_i(x) d_i, exponents in N^m.
enum class OreKind { Graded, Weyl };

struct OreAlgebra {
    AlgebraPtr coeffs;
    TwistSpec twist;
    OreKind kind = OreKind::Graded;
    bool inversive_vars = false;

    int nops() const { return twist.count(); }
    std::string op_symbol(int i) const;
    std::string description() const;

    bool operator==(const OreAlgebra& o) const {
        return same_algebra(coeffs, o.coeffs) && twist == o.twist && kind == o.kind &&
               inversive_vars == o.inversive_vars;
    }
};

using OrePtr = std::shared_ptr<const OreAlgebra>;

OrePtr make_ore_algebra(const AlgebraPtr& coeffs, const TwistSpec& twist, OreKind kind,
                        bool inversive_vars = false);
/// The algebra with the same coefficients and twists but the other kind.
OrePtr partner_algebra(const OrePtr& alg);

inline bool same_ore_algebra(const OrePtr& a, const OrePtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Normal-form element: sparse map from operator multidegree to a left
/// coefficient, no zero coefficients stored.
class OreOperator {
public:
    static OreOperator zero(const OrePtr& a);
    static OreOperator one(const OrePtr& a);
    static OreOperator from_coeff(const OrePtr& a, const CoeffElem& c);
    /// c * (T_i or d_i)^power.
    static OreOperator generator(const OrePtr& a, int i, int power = 1);
    static OreOperator term(const OrePtr& a, const Exps& opdeg, const CoeffElem& c);
    static OreOperator from_terms(const OrePtr& a, std::map<Exps, CoeffElem, GrlexLess> t);

    const OrePtr& algebra() const { return alg_; }
    const std::map<Exps, CoeffElem, GrlexLess>& terms() const { return terms_; }

    OreOperator operator+(const OreOperator& o) const;
    OreOperator operator-(const OreOperator& o) const;
    OreOperator operator-() const;
    /// Normal form of the noncommutative product.
    OreOperator operator*(const OreOperator& o) const;
    OreOperator& operator+=(const OreOperator& o) { return *this = *this + o; }
    OreOperator& operator-=(const OreOperator& o) { return *this = *this - o; }
    OreOperator& operator*=(const OreOperator& o) { return *this = *this * o; }

    /// Nonnegative powers always; negative powers only for invertible
    /// single-term Graded operators.
    OreOperator pow(std::int64_t e) const;

    /// Image of f under the canonical representation on A: T^u acts as
    /// sigma^u, d^u as the composite derivation, coefficients multiply.
    CoeffElem apply(const CoeffElem& f) const;

    bool is_zero() const { return terms_.empty(); }
    /// Total operator degree (filtration degree); -1 for zero.
    int degree() const;

    bool operator==(const OreOperator& o) const;
    bool operator!=(const OreOperator& o) const { return !(*this == o); }

    /// Canonical text: terms ascending in grlex operator multidegree,
    /// coefficients on the left.
    std::string to_string() const;

private:
    OreOperator(OrePtr a, std::map<Exps, CoeffElem, GrlexLess> t)
        : alg_(std::move(a)), terms_(std::move(t)) {}

    OrePtr alg_;
    std::map<Exps, CoeffElem, GrlexLess> terms_;
};

OreOperator commutator(const OreOperator& p, const OreOperator& q);

/// The element 1 - y_i d_i of the Weyl algebra; acts on A as sigma_i.
OreOperator sigma_as_operator(const OrePtr& weyl, int i);

/// Rewrite a Graded operator through T_i -> 1 - y_i d_i.
OreOperator convert_T_to_d(const OreOperator& p, const OrePtr& weyl);
/// Rewrite a Weyl operator through d_i -> (1/y_i)(1 - T_i); requires strong.
OreOperator convert_d_to_T(const OreOperator& p, const OrePtr& graded);

enum class CentralizeMode { CoeffsOnly, FullCenter };

/// Echelonized basis of the operators with coefficient degree <= x_bound and
/// operator degree <= op_bound commuting with every generator of A
/// (CoeffsOnly) or with the generators and every T_i (FullCenter).
std::vector<OreOperator> centralizer_basis(const OrePtr& alg, CentralizeMode mode, int x_bound,
                                           int op_bound);

} // namespace twc
