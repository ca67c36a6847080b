#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bhrank/graph.hpp"

namespace bhrank {

/// Compressed-column matrix. Storage is exactly nnz values, nnz row indices
/// and n_cols + 1 column pointers; entries within a column are sorted by row.
/// The column layout makes y = A^T x a single sequential pass over the
/// stored arrays, which is the product the power iteration needs.
class SparseMatrix {
public:
    /// Builds from (row, col, value) triplets. Triplets may arrive in any
    /// order; duplicates are not merged and must not occur.
    static SparseMatrix from_triplets(std::size_t n_rows, std::size_t n_cols,
                                      std::span<const Arc> triplets);

    std::size_t rows() const { return n_rows_; }
    std::size_t cols() const { return n_cols_; }
    std::size_t nnz() const { return values_.size(); }

    std::span<const double> values() const { return values_; }
    std::span<const NodeId> row_indices() const { return row_idx_; }
    std::span<const std::size_t> col_pointers() const { return col_ptr_; }

    /// y = A x (scatter over columns).
    std::vector<double> apply(std::span<const double> x) const;

    /// y = A^T x; y[j] is the dot product of column j with x.
    std::vector<double> transpose_apply(std::span<const double> x) const;
    void transpose_apply(std::span<const double> x, std::vector<double>& y) const;

    /// Row-major dense copy, for small-matrix checks.
    std::vector<double> to_dense() const;

private:
    std::size_t n_rows_ = 0;
    std::size_t n_cols_ = 0;
    std::vector<double> values_;
    std::vector<NodeId> row_idx_;
    std::vector<std::size_t> col_ptr_;
};

} // namespace bhrank
