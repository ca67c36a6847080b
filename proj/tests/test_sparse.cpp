#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bhrank/rng.hpp"
#include "bhrank/sparse.hpp"

using namespace bhrank;

namespace {

// Plain dense reference products, independent of the CSC layout.
std::vector<double> dense_apply(const std::vector<double>& m, std::size_t rows,
                                std::size_t cols, const std::vector<double>& x) {
    std::vector<double> y(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) y[i] += m[i * cols + j] * x[j];
    return y;
}

std::vector<double> dense_transpose_apply(const std::vector<double>& m, std::size_t rows,
                                          std::size_t cols, const std::vector<double>& x) {
    std::vector<double> y(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) y[j] += m[i * cols + j] * x[i];
    return y;
}

} // namespace

TEST_CASE("products match dense reference on random matrices") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng.uniform_below(50);
        const std::size_t cols = 1 + rng.uniform_below(50);
        std::vector<Arc> triplets;
        std::vector<double> dense(rows * cols, 0.0);
        for (NodeId i = 0; i < rows; ++i)
            for (NodeId j = 0; j < cols; ++j) {
                if (rng.uniform01() > 0.3) continue;
                const double v = rng.uniform01() * 4.0 - 2.0;
                triplets.push_back({i, j, v});
                dense[i * cols + j] = v;
            }
        const auto m = SparseMatrix::from_triplets(rows, cols, triplets);

        std::vector<double> x(cols), xt(rows);
        for (auto& v : x) v = rng.uniform01();
        for (auto& v : xt) v = rng.uniform01();

        const auto y = m.apply(x);
        const auto y_ref = dense_apply(dense, rows, cols, x);
        const auto z = m.transpose_apply(xt);
        const auto z_ref = dense_transpose_apply(dense, rows, cols, xt);
        for (std::size_t i = 0; i < rows; ++i)
            CHECK(std::abs(y[i] - y_ref[i]) < 1e-12);
        for (std::size_t j = 0; j < cols; ++j)
            CHECK(std::abs(z[j] - z_ref[j]) < 1e-12);
    }
}

TEST_CASE("storage arrays have exact lengths") {
    Rng rng(5);
    std::vector<Arc> triplets;
    for (int k = 0; k < 30; ++k) {
        NodeId i = static_cast<NodeId>(rng.uniform_below(10));
        NodeId j = static_cast<NodeId>(rng.uniform_below(10));
        bool dup = false;
        for (const Arc& t : triplets)
            if (t.src == i && t.dst == j) { dup = true; break; }
        if (!dup) triplets.push_back({i, j, 1.0});
    }
    const auto m = SparseMatrix::from_triplets(10, 10, triplets);
    CHECK(m.nnz() == triplets.size());
    CHECK(m.values().size() == triplets.size());
    CHECK(m.row_indices().size() == triplets.size());
    CHECK(m.col_pointers().size() == 11);
}

TEST_CASE("column pointers are monotone and rows sorted within columns") {
    std::vector<Arc> triplets{{3, 1, 1.0}, {0, 1, 2.0}, {2, 0, 3.0}, {1, 1, 4.0}};
    const auto m = SparseMatrix::from_triplets(4, 2, triplets);
    const auto ptr = m.col_pointers();
    for (std::size_t c = 0; c + 1 < ptr.size(); ++c) CHECK(ptr[c] <= ptr[c + 1]);
    const auto rows = m.row_indices();
    for (std::size_t c = 0; c + 1 < ptr.size(); ++c)
        for (std::size_t k = ptr[c] + 1; k < ptr[c + 1]; ++k)
            CHECK(rows[k - 1] < rows[k]);
    // to_dense reproduces the triplets
    const auto d = m.to_dense();
    CHECK(d[3 * 2 + 1] == 1.0);
    CHECK(d[0 * 2 + 1] == 2.0);
    CHECK(d[2 * 2 + 0] == 3.0);
    CHECK(d[1 * 2 + 1] == 4.0);
}
