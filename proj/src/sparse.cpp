#include "bhrank/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace bhrank {

SparseMatrix SparseMatrix::from_triplets(std::size_t n_rows, std::size_t n_cols,
                                         std::span<const Arc> triplets) {
    SparseMatrix m;
    m.n_rows_ = n_rows;
    m.n_cols_ = n_cols;
    m.col_ptr_.assign(n_cols + 1, 0);

    for (const Arc& t : triplets) {
        assert(t.src < n_rows && t.dst < n_cols);
        ++m.col_ptr_[t.dst + 1];
    }
    for (std::size_t c = 0; c < n_cols; ++c) m.col_ptr_[c + 1] += m.col_ptr_[c];

    m.values_.resize(triplets.size());
    m.row_idx_.resize(triplets.size());
    std::vector<std::size_t> next(m.col_ptr_.begin(), m.col_ptr_.end() - 1);
    for (const Arc& t : triplets) {
        const std::size_t slot = next[t.dst]++;
        m.values_[slot] = t.weight;
        m.row_idx_[slot] = t.src;
    }
    // Rows within a column may be unsorted if triplets arrive out of row
    // order; sort each column range.
    for (std::size_t c = 0; c < n_cols; ++c) {
        const std::size_t lo = m.col_ptr_[c], hi = m.col_ptr_[c + 1];
        bool sorted = true;
        for (std::size_t k = lo + 1; k < hi; ++k)
            if (m.row_idx_[k - 1] > m.row_idx_[k]) { sorted = false; break; }
        if (sorted) continue;
        std::vector<std::pair<NodeId, double>> col;
        col.reserve(hi - lo);
        for (std::size_t k = lo; k < hi; ++k) col.emplace_back(m.row_idx_[k], m.values_[k]);
        std::sort(col.begin(), col.end());
        for (std::size_t k = lo; k < hi; ++k) {
            m.row_idx_[k] = col[k - lo].first;
            m.values_[k] = col[k - lo].second;
        }
    }
    return m;
}

std::vector<double> SparseMatrix::apply(std::span<const double> x) const {
    assert(x.size() == n_cols_);
    std::vector<double> y(n_rows_, 0.0);
    for (std::size_t c = 0; c < n_cols_; ++c) {
        const double xc = x[c];
        if (xc == 0.0) continue;
        for (std::size_t k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k)
            y[row_idx_[k]] += values_[k] * xc;
    }
    return y;
}

std::vector<double> SparseMatrix::transpose_apply(std::span<const double> x) const {
    std::vector<double> y;
    transpose_apply(x, y);
    return y;
}

void SparseMatrix::transpose_apply(std::span<const double> x, std::vector<double>& y) const {
    assert(x.size() == n_rows_);
    y.assign(n_cols_, 0.0);
    for (std::size_t c = 0; c < n_cols_; ++c) {
        double acc = 0.0;
        for (std::size_t k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k)
            acc += values_[k] * x[row_idx_[k]];
        y[c] = acc;
    }
}

std::vector<double> SparseMatrix::to_dense() const {
    std::vector<double> d(n_rows_ * n_cols_, 0.0);
    for (std::size_t c = 0; c < n_cols_; ++c)
        for (std::size_t k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k)
            d[row_idx_[k] * n_cols_ + c] = values_[k];
    return d;
}

} // namespace bhrank
