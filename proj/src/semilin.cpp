#include "twistcalc/semilin.hpp"

#include <algorithm>

#include "twistcalc/error.hpp"
#include "twistcalc/linalg.hpp"

namespace twc {

// ---------------------------------------------------------------------------
// CoeffMatrix.

CoeffMatrix CoeffMatrix::identity(const AlgebraPtr& alg, int n) {
    CoeffMatrix m(alg, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CoeffElem::one(alg);
    return m;
}

CoeffMatrix CoeffMatrix::operator+(const CoeffMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::RankMismatch, "matrix shape mismatch");
    CoeffMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
}

CoeffMatrix CoeffMatrix::operator-(const CoeffMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::RankMismatch, "matrix shape mismatch");
    CoeffMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
    return r;
}

CoeffMatrix CoeffMatrix::operator*(const CoeffMatrix& o) const {
    if (cols_ != o.rows_) fail(Errc::RankMismatch, "matrix shape mismatch");
    CoeffMatrix r(alg_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            CoeffElem s = CoeffElem::zero(alg_);
            for (int k = 0; k < cols_; ++k) s += at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(s);
        }
    return r;
}

CoeffMatrix CoeffMatrix::scaled(const CoeffElem& c) const {
    CoeffMatrix r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

CoeffMatrix CoeffMatrix::map(const std::function<CoeffElem(const CoeffElem&)>& f) const {
    CoeffMatrix r = *this;
    for (auto& x : r.e_) x = f(x);
    return r;
}

std::vector<CoeffElem> CoeffMatrix::mul_vec(const std::vector<CoeffElem>& v) const {
    if (static_cast<int>(v.size()) != cols_) fail(Errc::RankMismatch, "vector length mismatch");
    std::vector<CoeffElem> r(rows_, CoeffElem::zero(alg_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

bool CoeffMatrix::operator==(const CoeffMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::string CoeffMatrix::to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) s += ", ";
        s += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += at(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Module construction.

namespace {
void check_matrices(const TwistSpec& twist, const std::vector<CoeffMatrix>& mats, int& rank) {
    if (static_cast<int>(mats.size()) != twist.count())
        fail(Errc::RankMismatch, "need one matrix per twist");
    rank = mats.empty() ? 0 : mats[0].rows();
    for (const auto& m : mats) {
        if (m.rows() != rank || m.cols() != rank)
            fail(Errc::RankMismatch, "matrices must be square of equal rank");
        if (!same_algebra(m.algebra(), twist.algebra()))
            fail(Errc::FieldMismatch, "matrix entries not in the twisted algebra");
    }
}
} // namespace

SigmaModule make_sigma_module(const TwistSpec& twist, std::vector<CoeffMatrix> S) {
    SigmaModule m{twist, 0, std::move(S)};
    check_matrices(twist, m.S, m.rank);
    return m;
}

DiffModule make_diff_module(const TwistSpec& twist, std::vector<CoeffMatrix> N) {
    DiffModule m{twist, 0, std::move(N)};
    check_matrices(twist, m.N, m.rank);
    return m;
}

// ---------------------------------------------------------------------------
// Compatibility checks.

CompatReport check_sigma_compat(const SigmaModule& m) {
    const TwistSpec& t = m.twist;
    for (int i = 0; i < t.count(); ++i)
        for (int j = i + 1; j < t.count(); ++j) {
            auto si = [&](const CoeffElem& c) { return t.apply_endo(i, c); };
            auto sj = [&](const CoeffElem& c) { return t.apply_endo(j, c); };
            if (m.S[i] * m.S[j].map(si) != m.S[j] * m.S[i].map(sj)) return {false, {i, j}};
        }
    return {};
}

CompatReport check_integrability(const DiffModule& m) {
    const TwistSpec& t = m.twist;
    SchwarzReport ambient = schwarz_check(t);
    if (!ambient.ok)
        fail(Errc::SchwarzViolated, "ambient twists are not of Schwarz type; pair (" +
                                        std::to_string(ambient.violations[0].i + 1) + "," +
                                        std::to_string(ambient.violations[0].j + 1) + ")");
    // On a basis vector e_k: D_i(D_j(e_k)) = (d_i(N_j) + N_i sigma_i(N_j)) e_k.
    for (int i = 0; i < t.count(); ++i)
        for (int j = i + 1; j < t.count(); ++j) {
            auto di = [&](const CoeffElem& c) { return t.apply_derivation(i, c); };
            auto dj = [&](const CoeffElem& c) { return t.apply_derivation(j, c); };
            auto si = [&](const CoeffElem& c) { return t.apply_endo(i, c); };
            auto sj = [&](const CoeffElem& c) { return t.apply_endo(j, c); };
            CoeffMatrix lhs = m.N[j].map(di) + m.N[i] * m.N[j].map(si);
            CoeffMatrix rhs = m.N[i].map(dj) + m.N[j] * m.N[i].map(sj);
            if (lhs != rhs) return {false, {i, j}};
        }
    return {};
}

// ---------------------------------------------------------------------------
// The module translation of Cor. corr.

DiffModule sigma_to_diff(const SigmaModule& m) {
    const TwistSpec& t = m.twist;
    if (!t.is_strong()) fail(Errc::NotStrong, "sigma -> diff needs strong twists");
    std::vector<CoeffMatrix> N;
    const CoeffMatrix id = CoeffMatrix::identity(t.algebra(), m.rank);
    for (int i = 0; i < t.count(); ++i) N.push_back((id - m.S[i]).scaled(t.y(i).inv()));
    return make_diff_module(t, std::move(N));
}

SigmaModule diff_to_sigma(const DiffModule& m) {
    const TwistSpec& t = m.twist;
    std::vector<CoeffMatrix> S;
    const CoeffMatrix id = CoeffMatrix::identity(t.algebra(), m.rank);
    for (int i = 0; i < t.count(); ++i) S.push_back(id - m.N[i].scaled(t.y(i)));
    return make_sigma_module(t, std::move(S));
}

std::vector<CoeffElem> module_apply(const SigmaModule& m, int i, const std::vector<CoeffElem>& v) {
    if (static_cast<int>(v.size()) != m.rank) fail(Errc::RankMismatch, "vector length != rank");
    std::vector<CoeffElem> sv;
    sv.reserve(v.size());
    for (const auto& x : v) sv.push_back(m.twist.apply_endo(i, x));
    return m.S.at(i).mul_vec(sv);
}

std::vector<CoeffElem> module_apply(const DiffModule& m, int i, const std::vector<CoeffElem>& v) {
    if (static_cast<int>(v.size()) != m.rank) fail(Errc::RankMismatch, "vector length != rank");
    std::vector<CoeffElem> sv, dv;
    sv.reserve(v.size());
    dv.reserve(v.size());
    for (const auto& x : v) {
        sv.push_back(m.twist.apply_endo(i, x));
        dv.push_back(m.twist.apply_derivation(i, x));
    }
    std::vector<CoeffElem> r = m.N.at(i).mul_vec(sv);
    for (int k = 0; k < m.rank; ++k) r[k] += dv[k];
    return r;
}

// ---------------------------------------------------------------------------
// Degree-bounded kernels and cohomology.

namespace {

using VecOp = std::function<std::vector<CoeffElem>(const std::vector<CoeffElem>&)>;

struct VecCoord {
    Exps mono;
    int comp;
    bool operator<(const VecCoord& o) const {
        GrlexLess less;
        if (less(mono, o.mono)) return true;
        if (less(o.mono, mono)) return false;
        return comp < o.comp;
    }
};

struct BoundedSpace {
    std::vector<VecCoord> coords;  // ascending
    AlgebraPtr alg;
    int rank;
};

BoundedSpace make_space(const AlgebraPtr& alg, int rank, int bound) {
    BoundedSpace sp{{}, alg, rank};
    for (const auto& e : bounded_monomials(alg, bound))
        for (int j = 0; j < rank; ++j) sp.coords.push_back({e, j});
    return sp;
}

std::vector<CoeffElem> unit_vector(const BoundedSpace& sp, const VecCoord& c) {
    std::vector<CoeffElem> v(sp.rank, CoeffElem::zero(sp.alg));
    v[c.comp] = CoeffElem::monomial(sp.alg, c.mono, Scalar::one(sp.alg->field));
    return v;
}

// Sparse image of a basis vector, as coordinate/value pairs.
std::vector<std::pair<VecCoord, Scalar>> flatten(const std::vector<CoeffElem>& v) {
    std::vector<std::pair<VecCoord, Scalar>> out;
    for (int j = 0; j < static_cast<int>(v.size()); ++j) {
        if (!v[j].has_trivial_denominator())
            fail(Errc::InvalidArgument, "module image leaves the polynomial span");
        for (const auto& [e, c] : v[j].numer_terms()) out.push_back({{e, j}, c});
    }
    return out;
}

struct KernelCore {
    std::vector<std::vector<CoeffElem>> basis;
    int dimension = 0;
};

KernelCore bounded_vec_kernel(const BoundedSpace& sp, const std::vector<VecOp>& ops) {
    const FieldPtr& f = sp.alg->field;
    const int ncols = static_cast<int>(sp.coords.size());
    std::vector<std::vector<std::vector<std::pair<VecCoord, Scalar>>>> images(ops.size());
    std::map<VecCoord, int> row_index;
    for (std::size_t k = 0; k < ops.size(); ++k) {
        images[k].reserve(ncols);
        for (const auto& c : sp.coords) {
            auto img = flatten(ops[k](unit_vector(sp, c)));
            for (const auto& [key, s] : img) row_index.emplace(key, 0);
            images[k].push_back(std::move(img));
        }
    }
    int nrows = 0;
    for (auto& [k, idx] : row_index) idx = nrows++;
    std::vector<ScalarRow> m(nrows * ops.size(), ScalarRow(ncols, Scalar::zero(f)));
    for (std::size_t k = 0; k < ops.size(); ++k)
        for (int col = 0; col < ncols; ++col)
            for (const auto& [key, s] : images[k][col])
                m[k * nrows + row_index.at(key)][col] += s;
    std::vector<ScalarRow> ker = kernel_basis(m, ncols, f);
    std::vector<ScalarRow> flipped;
    flipped.reserve(ker.size());
    for (const auto& v : ker) flipped.emplace_back(v.rbegin(), v.rend());
    rref(flipped, f);
    KernelCore out;
    for (auto it = flipped.rbegin(); it != flipped.rend(); ++it) {
        std::vector<TermMap> comp(sp.rank);
        for (int c = 0; c < ncols; ++c)
            if (!(*it)[c].is_zero()) {
                const VecCoord& vc = sp.coords[ncols - 1 - c];
                comp[vc.comp].emplace(vc.mono, (*it)[c]);
            }
        std::vector<CoeffElem> v;
        v.reserve(sp.rank);
        for (auto& t : comp) v.push_back(CoeffElem::from_terms(sp.alg, std::move(t)));
        out.basis.push_back(std::move(v));
    }
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

KernelReport kernel_report(const BoundedSpace& sp, const std::vector<VecOp>& ops, int bound,
                           const std::function<KernelCore(int)>& at_bound) {
    KernelCore cur = bounded_vec_kernel(sp, ops);
    int prev_dim = bound > 0 ? at_bound(bound - 1).dimension : 0;
    KernelReport rep;
    rep.degree_bound = bound;
    rep.basis = std::move(cur.basis);
    rep.dimension = cur.dimension;
    rep.stable = rep.dimension == prev_dim;
    return rep;
}

} // namespace

KernelReport horizontal_sections(const DiffModule& m, int degree_bound) {
    if (m.twist.algebra()->mode == CoeffMode::RatFunc)
        fail(Errc::InvalidArgument, "horizontal sections need poly or laurent coefficients");
    if (degree_bound < 0) fail(Errc::InvalidArgument, "negative degree bound");
    std::vector<VecOp> ops;
    for (int i = 0; i < m.twist.count(); ++i)
        ops.emplace_back([&m, i](const std::vector<CoeffElem>& v) { return module_apply(m, i, v); });
    std::function<KernelCore(int)> at = [&](int b) {
        return bounded_vec_kernel(make_space(m.twist.algebra(), m.rank, b), ops);
    };
    return kernel_report(make_space(m.twist.algebra(), m.rank, degree_bound), ops, degree_bound, at);
}

KernelReport sigma_fixed_points(const SigmaModule& m, int degree_bound) {
    if (m.twist.algebra()->mode == CoeffMode::RatFunc)
        fail(Errc::InvalidArgument, "fixed points need poly or laurent coefficients");
    if (degree_bound < 0) fail(Errc::InvalidArgument, "negative degree bound");
    std::vector<VecOp> ops;
    for (int i = 0; i < m.twist.count(); ++i)
        ops.emplace_back([&m, i](const std::vector<CoeffElem>& v) {
            std::vector<CoeffElem> w = module_apply(m, i, v);
            for (int k = 0; k < m.rank; ++k) w[k] = v[k] - w[k];
            return w;
        });
    std::function<KernelCore(int)> at = [&](int b) {
        return bounded_vec_kernel(make_space(m.twist.algebra(), m.rank, b), ops);
    };
    return kernel_report(make_space(m.twist.algebra(), m.rank, degree_bound), ops, degree_bound, at);
}

namespace {

struct CokernelCore {
    std::vector<std::vector<CoeffElem>> basis;
    int dimension = 0;
};

// Bounded cokernel of L on the space: quotient basis = monomial coordinates
// of the bounded space that are not pivots of the echelonized intersection
// im(L|bounded) with the bounded space. Image coordinates outside the space
// are ordered in front so their pivot rows can be discarded.
CokernelCore bounded_cokernel(const BoundedSpace& sp, const VecOp& op) {
    const FieldPtr& f = sp.alg->field;
    const int nin = static_cast<int>(sp.coords.size());
    std::map<VecCoord, int> inside;
    for (int c = 0; c < nin; ++c) inside.emplace(sp.coords[c], c);
    std::vector<std::vector<std::pair<VecCoord, Scalar>>> images;
    std::map<VecCoord, int> outside;
    for (const auto& c : sp.coords) {
        auto img = flatten(op(unit_vector(sp, c)));
        for (const auto& [key, s] : img)
            if (!inside.count(key)) outside.emplace(key, 0);
        images.push_back(std::move(img));
    }
    int nout = 0;
    for (auto& [k, idx] : outside) idx = nout++;
    // Row vectors: [outside coords | inside coords, descending grlex].
    const int ncols = nout + nin;
    std::vector<ScalarRow> rows;
    for (const auto& img : images) {
        ScalarRow r(ncols, Scalar::zero(f));
        bool nonzero = false;
        for (const auto& [key, s] : img) {
            auto it = inside.find(key);
            int col = it != inside.end() ? nout + (nin - 1 - it->second) : outside.at(key);
            r[col] += s;
            nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(r));
    }
    std::vector<int> pivots = rref(rows, f);
    std::vector<bool> hit(nin, false);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] >= nout) hit[nin - 1 - (pivots[r] - nout)] = true;
    CokernelCore out;
    for (int c = 0; c < nin; ++c)
        if (!hit[c]) out.basis.push_back(unit_vector(sp, sp.coords[c]));
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

} // namespace

std::pair<KernelReport, KernelReport> sigma_cohomology(const SigmaModule& m, int i,
                                                       int degree_bound) {
    const AlgebraPtr& alg = m.twist.algebra();
    if (alg->mode == CoeffMode::RatFunc)
        fail(Errc::InvalidArgument, "sigma cohomology needs poly or laurent coefficients");
    if (degree_bound < 0) fail(Errc::InvalidArgument, "negative degree bound");
    if (i < 0 || i >= m.twist.count()) fail(Errc::InvalidArgument, "twist index out of range");
    VecOp L = [&m, i](const std::vector<CoeffElem>& v) {
        std::vector<CoeffElem> w = module_apply(m, i, v);
        for (int k = 0; k < m.rank; ++k) w[k] = v[k] - w[k];
        return w;
    };
    std::vector<VecOp> ops{L};
    std::function<KernelCore(int)> at = [&](int b) {
        return bounded_vec_kernel(make_space(alg, m.rank, b), ops);
    };
    KernelReport h0 =
        kernel_report(make_space(alg, m.rank, degree_bound), ops, degree_bound, at);

    CokernelCore c1 = bounded_cokernel(make_space(alg, m.rank, degree_bound), L);
    int prev = degree_bound > 0
                   ? bounded_cokernel(make_space(alg, m.rank, degree_bound - 1), L).dimension
                   : 0;
    KernelReport h1;
    h1.degree_bound = degree_bound;
    h1.basis = std::move(c1.basis);
    h1.dimension = c1.dimension;
    h1.stable = h1.dimension == prev;
    // Exactness of the truncation is only claimed for the graded case.
    h1.truncated = !(m.twist.twist(i).h.is_zero() && alg->mode == CoeffMode::Poly);
    return {std::move(h0), std::move(h1)};
}

} // namespace twc
