#pragma once

#include <vector>

#include "twistcalc/scalar.hpp"

namespace twc {

using ScalarRow = std::vector<Scalar>;

/// Reduced row echelon form computed in place over the scalar field;
/// pivot entries are normalized to 1, zero rows dropped. Returns the pivot
/// column of each remaining row (strictly increasing).
std::vector<int> rref(std::vector<ScalarRow>& rows, const FieldPtr& f);

/// Basis of { v : M v = 0 }, echelonized; each vector has ncols entries.
std::vector<ScalarRow> kernel_basis(const std::vector<ScalarRow>& m, int ncols, const FieldPtr& f);

int rank_of(std::vector<ScalarRow> rows, const FieldPtr& f);

/// Exact span equality of the two row sets.
bool same_row_span(const std::vector<ScalarRow>& a, const std::vector<ScalarRow>& b,
                   const FieldPtr& f);

} // namespace twc
