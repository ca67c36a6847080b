#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bhrank/generators.hpp"
#include "bhrank/pagerank.hpp"
#include "fixtures.hpp"

using namespace bhrank;

namespace {

// Reference solver: assembles the dense transition matrix
// M = d (A + S V) + (1 - d) T V and power-iterates it, with no shortcuts.
// Kept independent of the sparse implementation it checks.
std::vector<double> dense_pagerank(const WeightedDigraph& g, const PageRankConfig& cfg) {
    const std::size_t n = g.node_count();
    const std::vector<double> v = personalization_vector(cfg, n);
    const auto sinks = sink_vector(g);

    std::vector<double> a(n * n, 0.0);
    for (const Arc& arc : g.arcs())
        a[arc.src * n + arc.dst] = arc.weight / g.out_strength(arc.src);

    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double sink_term = sinks.is_sink(static_cast<NodeId>(i)) ? v[j] : 0.0;
            m[i * n + j] = cfg.d * (a[i * n + j] + sink_term) + (1.0 - cfg.d) * v[j];
        }

    std::vector<double> p = v, next(n);
    for (std::size_t it = 0; it < cfg.max_iters; ++it) {
        double resid = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) acc += m[i * n + j] * p[i];
            resid += std::abs(acc - p[j]);
            next[j] = acc;
        }
        p.swap(next);
        if (resid < cfg.tol) break;
    }
    return p;
}

} // namespace

TEST_CASE("toy network normalizes to rows of one half") {
    const auto g = testing::toy_network();
    const auto a = normalize_weights(g);
    const auto dense = a.to_dense();
    const std::size_t n = 6;
    auto at = [&](std::size_t i, std::size_t j) { return dense[i * n + j]; };
    CHECK(at(1, 0) == 0.5);
    CHECK(at(1, 2) == 0.5);
    CHECK(at(2, 1) == 0.5);
    CHECK(at(2, 5) == 0.5);
    CHECK(at(3, 0) == 0.5);
    CHECK(at(3, 4) == 0.5);
    CHECK(at(4, 3) == 0.5);
    CHECK(at(4, 5) == 0.5);
    // sink rows stay empty
    for (std::size_t j = 0; j < n; ++j) {
        CHECK(at(0, j) == 0.0);
        CHECK(at(5, j) == 0.0);
    }
}

TEST_CASE("normalization follows the weight proportions") {
    const auto g = build_graph(
        4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 5}, {1, 0, 7}}, WeightBounds::global(0, 10));
    const auto dense = normalize_weights(g).to_dense();
    CHECK(dense[0 * 4 + 1] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(dense[0 * 4 + 2] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(dense[0 * 4 + 3] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dense[1 * 4 + 0] == 1.0); // single outlink
    // every non-sink row sums to 1
    for (std::size_t i = 0; i < 2; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < 4; ++j) sum += dense[i * 4 + j];
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("zero out-strength is rejected with the node id") {
    const auto g = build_graph(2, {{0, 1, 0}}, WeightBounds::global(0, 10));
    CHECK_THROWS_WITH_AS(normalize_weights(g), doctest::Contains("node 0"),
                         ZeroOutStrength);
}

TEST_CASE("toy network PageRank matches the published values") {
    const auto r = pagerank(testing::toy_network(), {});
    REQUIRE(r.converged);
    CHECK(std::abs(r.p[0] - 0.208) < 0.001);
    CHECK(std::abs(r.p[1] - 0.146) < 0.001);
    CHECK(std::abs(r.p[2] - 0.146) < 0.001);
    CHECK(std::abs(r.p[3] - 0.146) < 0.001);
    CHECK(std::abs(r.p[4] - 0.146) < 0.001);
    CHECK(std::abs(r.p[5] - 0.208) < 0.001);
}

TEST_CASE("single sink node gets all probability") {
    const auto g = build_graph(1, {}, WeightBounds::global(0, 1));
    const auto r = pagerank(g, {});
    REQUIRE(r.converged);
    CHECK(r.p[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("scaling all weights leaves PageRank unchanged") {
    PageRankConfig cfg;
    const auto g = testing::toy_network();
    const auto scaled = scale_weights(g, 99.0 / 49.0, WeightBounds::global(0, 21));
    const auto r1 = pagerank(g, cfg);
    const auto r2 = pagerank(scaled, cfg);
    for (std::size_t i = 0; i < r1.p.size(); ++i)
        CHECK(std::abs(r1.p[i] - r2.p[i]) < 10 * cfg.tol);
}

TEST_CASE("iterates stay stochastic") {
    Rng rng(314);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = testing::random_graph(rng);
        PowerIterationTrace trace;
        pagerank(g, {}, &trace);
        for (double mass : trace.mass) CHECK(std::abs(mass - 1.0) < 1e-12);
    }
}

TEST_CASE("sparse iteration matches the dense transition matrix") {
    Rng rng(1618);
    PageRankConfig cfg;
    for (int trial = 0; trial < 25; ++trial) {
        const auto g = testing::random_graph(rng);
        const auto sparse = pagerank(g, cfg);
        const auto dense = dense_pagerank(g, cfg);
        REQUIRE(sparse.p.size() == dense.size());
        for (std::size_t i = 0; i < dense.size(); ++i)
            CHECK(std::abs(sparse.p[i] - dense[i]) < 1e-10);
    }
}

TEST_CASE("iteration budget exhaustion is flagged, not thrown") {
    PageRankConfig cfg;
    cfg.max_iters = 2;
    const auto r = pagerank(testing::toy_network(), cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 2);
    CHECK(r.residual > 0.0);
    double sum = 0.0;
    for (double x : r.p) sum += x;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("config contract is validated") {
    const auto g = testing::toy_network();
    PageRankConfig cfg;
    cfg.d = 0.0;
    CHECK_THROWS_AS(pagerank(g, cfg), InvalidConfig);
    cfg.d = 1.0;
    CHECK_THROWS_AS(pagerank(g, cfg), InvalidConfig);
    cfg.d = 0.85;
    cfg.personalization = std::vector<double>{0.5, 0.5};
    CHECK_THROWS_AS(pagerank(g, cfg), InvalidConfig); // wrong length
    cfg.personalization = std::vector<double>(6, 0.5);
    CHECK_THROWS_AS(pagerank(g, cfg), InvalidConfig); // does not sum to 1
}

TEST_CASE("explicit personalization steers the teleport mass") {
    const auto g = testing::toy_network();
    PageRankConfig cfg;
    cfg.personalization = std::vector<double>{1, 0, 0, 0, 0, 0};
    const auto r = pagerank(g, cfg);
    REQUIRE(r.converged);
    CHECK(r.p[0] > r.p[5]);
    double sum = 0.0;
    for (double x : r.p) sum += x;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}
