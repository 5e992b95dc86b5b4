#include "twistcalc/linalg.hpp"

#include <algorithm>

#include "twistcalc/error.hpp"

namespace twc {

std::vector<int> rref(std::vector<ScalarRow>& rows, const FieldPtr&) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int ncols = static_cast<int>(rows[0].size());
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Scalar inv = rows[r][c].inv();
        for (int j = c; j < ncols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Scalar factor = rows[i][c];
            for (int j = c; j < ncols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::vector<ScalarRow> kernel_basis(const std::vector<ScalarRow>& m, int ncols, const FieldPtr& f) {
    std::vector<ScalarRow> rows = m;
    for (auto& row : rows)
        if (static_cast<int>(row.size()) != ncols) fail(Errc::InvalidArgument, "ragged matrix");
    (void)f;
    std::vector<int> pivots = rref(rows, f);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<ScalarRow> basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        ScalarRow v(ncols, Scalar::zero(f));
        v[c] = Scalar::one(f);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][c];
        basis.push_back(std::move(v));
    }
    rref(basis, f);
    return basis;
}

int rank_of(std::vector<ScalarRow> rows, const FieldPtr& f) {
    return static_cast<int>(rref(rows, f).size());
}

bool same_row_span(const std::vector<ScalarRow>& a, const std::vector<ScalarRow>& b,
                   const FieldPtr& f) {
    const int ra = rank_of(a, f);
    const int rb = rank_of(b, f);
    if (ra != rb) return false;
    std::vector<ScalarRow> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank_of(std::move(both), f) == ra;
}

} // namespace twc
