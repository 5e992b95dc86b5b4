#pragma once

#include <utility>
#include <vector>

#include "twistcalc/twist.hpp"

namespace twc {

/// Dense matrix of coefficient-algebra entries.
class CoeffMatrix {
public:
    CoeffMatrix(const AlgebraPtr& alg, int rows, int cols)
        : alg_(alg), rows_(rows), cols_(cols), e_(rows * cols, CoeffElem::zero(alg)) {}

    static CoeffMatrix identity(const AlgebraPtr& alg, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const AlgebraPtr& algebra() const { return alg_; }

    CoeffElem& at(int i, int j) { return e_.at(i * cols_ + j); }
    const CoeffElem& at(int i, int j) const { return e_.at(i * cols_ + j); }

    CoeffMatrix operator+(const CoeffMatrix& o) const;
    CoeffMatrix operator-(const CoeffMatrix& o) const;
    CoeffMatrix operator*(const CoeffMatrix& o) const;
    CoeffMatrix scaled(const CoeffElem& c) const;
    /// Entrywise image under a map of the coefficient algebra.
    CoeffMatrix map(const std::function<CoeffElem(const CoeffElem&)>& f) const;
    std::vector<CoeffElem> mul_vec(const std::vector<CoeffElem>& v) const;

    bool operator==(const CoeffMatrix& o) const;
    bool operator!=(const CoeffMatrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    AlgebraPtr alg_;
    int rows_, cols_;
    std::vector<CoeffElem> e_;
};

/// Finite free module with semilinear actions sigma_{M,i}(v) = S_i * sigma_i(v),
/// sigma_i applied entrywise.
struct SigmaModule {
    TwistSpec twist;
    int rank = 0;
    std::vector<CoeffMatrix> S;
};

/// Finite free module with twisted derivations D_{M,i}(v) = d_i(v) + N_i * sigma_i(v).
struct DiffModule {
    TwistSpec twist;
    int rank = 0;
    std::vector<CoeffMatrix> N;
};

SigmaModule make_sigma_module(const TwistSpec& twist, std::vector<CoeffMatrix> S);
DiffModule make_diff_module(const TwistSpec& twist, std::vector<CoeffMatrix> N);

// TODO: internal tensor product and Hom of sigma-modules (Hom needs the
// inversive hypothesis on the first argument).

struct CompatReport {
    bool ok = true;
    std::pair<int, int> violating_pair{-1, -1};
};

/// S_i sigma_i(S_j) = S_j sigma_j(S_i) for all pairs.
CompatReport check_sigma_compat(const SigmaModule& m);
/// Commutation of the module derivations, verified on basis vectors:
/// d_i(N_j) + N_i sigma_i(N_j) symmetric in (i,j). Requires the ambient
/// family to be of Schwarz type (SchwarzViolated otherwise); under that
/// hypothesis the commutator is semilinear, so a basis check suffices.
CompatReport check_integrability(const DiffModule& m);

/// N_i = (I - S_i) y_i^{-1}; requires strong twists.
DiffModule sigma_to_diff(const SigmaModule& m);
/// S_i = I - y_i N_i; no strongness needed.
SigmaModule diff_to_sigma(const DiffModule& m);

std::vector<CoeffElem> module_apply(const SigmaModule& m, int i, const std::vector<CoeffElem>& v);
std::vector<CoeffElem> module_apply(const DiffModule& m, int i, const std::vector<CoeffElem>& v);

struct KernelReport {
    int degree_bound = 0;
    std::vector<std::vector<CoeffElem>> basis;
    int dimension = 0;
    /// Dimension unchanged between bounds d-1 and d.
    bool stable = false;
    /// Set on cokernel reports whose degree truncation is not provably exact.
    bool truncated = false;
};

/// Degree-bounded joint kernel of all D_{M,i} (Poly or Laurent coefficients).
KernelReport horizontal_sections(const DiffModule& m, int degree_bound);

/// Degree-bounded kernel of v - S_i sigma_i(v) over all i (used by tests and
/// the horizontal/invariant comparisons).
KernelReport sigma_fixed_points(const SigmaModule& m, int degree_bound);

/// H0 and H1 of the two-term complex M --(1 - sigma_{M,i})--> M, truncated at
/// the degree bound. H0 is the exact bounded kernel; H1 is the bounded
/// echelon complement of the image, flagged truncated unless the operator is
/// graded (h_i = 0, polynomial mode).
std::pair<KernelReport, KernelReport> sigma_cohomology(const SigmaModule& m, int i,
                                                       int degree_bound);

} // namespace twc
