#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "specht/field.hpp"

namespace specht {

template <class T>
using SparseRow = std::vector<std::pair<int, T>>;  // sorted by column

// Nullspace of the matrix whose rows are given. Basis vectors are dense, one per
// free column in increasing order. Over Q the vectors are primitive integral
// with positive leading entry.
std::vector<std::vector<mpq_class>> nullspace(const RationalCtx& ctx, const std::vector<SparseRow<mpq_class>>& rows,
                                              int ncols);
std::vector<std::vector<uint32_t>> nullspace(const ModPCtx& ctx, const std::vector<SparseRow<uint32_t>>& rows,
                                             int ncols);
std::vector<std::vector<int64_t>> nullspace(const Int64Ctx& ctx, const std::vector<SparseRow<int64_t>>& rows,
                                            int ncols);

// rank over the context's field
int matrix_rank(const RationalCtx& ctx, const std::vector<SparseRow<mpq_class>>& rows);
int matrix_rank(const ModPCtx& ctx, const std::vector<SparseRow<uint32_t>>& rows);

}  // namespace specht
