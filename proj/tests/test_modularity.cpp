#include <doctest.h>

#include <cmath>
#include <random>

#include "modfilter/modularity.hpp"

using namespace modfilter;

namespace {

// Two vertices joined by one edge of weight w.
ModularityMatrix two_vertex_graph(double w = 1.0) {
    SquareMatrix raw(2);
    raw.set_edge(0, 1, w);
    return normalize(raw);
}

// Flat 3x3 window: the king-graph on 9 vertices, all edge weights 1.
// Vertex order is row-major; index 4 is the center.
ModularityMatrix flat_window_graph() {
    SquareMatrix raw(9);
    for (int i = 0; i < 9; ++i) {
        for (int j = i + 1; j < 9; ++j) {
            const int xi = i % 3, yi = i / 3, xj = j % 3, yj = j / 3;
            if (std::abs(xi - xj) <= 1 && std::abs(yi - yj) <= 1) raw.set_edge(i, j, 1.0);
        }
    }
    return normalize(raw);
}

ModularityMatrix random_graph(std::mt19937& rng, int max_n = 12) {
    std::uniform_int_distribution<int> size_dist(2, max_n);
    std::uniform_real_distribution<double> weight_dist(0.0, 1.0);
    std::bernoulli_distribution sparse(0.35);
    for (;;) {
        const int n = size_dist(rng);
        SquareMatrix raw(n);
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double w = sparse(rng) ? 0.0 : weight_dist(rng);
                raw.set_edge(i, j, w);
                total += w;
            }
        }
        if (total > 0.0) return normalize(raw);
    }
}

} // namespace

TEST_CASE("normalize: single edge forces e = 1/2") {
    const ModularityMatrix m = two_vertex_graph(3.7);
    CHECK(m.e(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.e(1, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.strength(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.strength(1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.raw_total() == doctest::Approx(7.4));
}

TEST_CASE("normalize: flat 3x3 king-graph strengths") {
    const ModularityMatrix m = flat_window_graph();
    CHECK(m.size() == 9);
    CHECK(m.raw_total() == doctest::Approx(40.0));
    CHECK(m.e(4, 0) == doctest::Approx(1.0 / 40.0));
    CHECK(m.strength(4) == doctest::Approx(0.2).epsilon(1e-12));   // center
    CHECK(m.strength(0) == doctest::Approx(0.075).epsilon(1e-12)); // corner
    CHECK(m.strength(1) == doctest::Approx(0.125).epsilon(1e-12)); // side middle
    CHECK(m.total() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normalize: degenerate graph") {
    SquareMatrix raw(3);
    CHECK_THROWS_AS(normalize(raw), DegenerateGraphError);
}

TEST_CASE("normalize: input validation") {
    SquareMatrix raw(2);
    raw(0, 1) = 0.5; // asymmetric on purpose
    CHECK_THROWS_AS(normalize(raw), std::invalid_argument);

    SquareMatrix negative(2);
    negative.set_edge(0, 1, -1.0);
    CHECK_THROWS_AS(normalize(negative), std::invalid_argument);

    SquareMatrix diag(2);
    diag(0, 0) = 1.0;
    diag(1, 1) = 1.0;
    CHECK_THROWS_AS(normalize(diag), std::invalid_argument);
}

TEST_CASE("modularity of singleton partitions") {
    CHECK(modularity(two_vertex_graph()) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(modularity(flat_window_graph()) == doctest::Approx(-0.125).epsilon(1e-12));
}

TEST_CASE("screed: merging both vertices gives the trivial graph") {
    const ModularityMatrix merged = screed(two_vertex_graph(), std::vector<int>{0, 1});
    CHECK(merged.size() == 1);
    CHECK(merged.e(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(merged.strength(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(modularity(merged) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("screed: singleton subset is the identity") {
    const ModularityMatrix m = flat_window_graph();
    const ModularityMatrix same = screed(m, std::vector<int>{4});
    REQUIRE(same.size() == m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) CHECK(same.e(i, j) == m.e(i, j));
}

TEST_CASE("screed: adjacent pair in the flat window") {
    const ModularityMatrix m = flat_window_graph();
    const ModularityMatrix merged = screed(m, std::vector<int>{4, 0});
    CHECK(merged.size() == 8);
    // merged vertex sits at slot 0, self-weight e04 + e40 = 2/40
    CHECK(merged.e(0, 0) == doctest::Approx(2.0 / 40.0).epsilon(1e-12));
    CHECK(merged.strength(0) ==
          doctest::Approx(m.strength(0) + m.strength(4)).epsilon(1e-12));
}

TEST_CASE("screed: bounds and empty subset") {
    const ModularityMatrix m = two_vertex_graph();
    CHECK_THROWS_AS(screed(m, std::vector<int>{2}), std::out_of_range);
    CHECK_THROWS_AS(screed(m, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("delta_q examples") {
    CHECK(delta_q(two_vertex_graph(), 0, 1) == doctest::Approx(0.5).epsilon(1e-12));

    const ModularityMatrix m = flat_window_graph();
    CHECK(delta_q(m, 4, 0) == doctest::Approx(0.02).epsilon(1e-9)); // center vs corner
    CHECK(std::abs(delta_q(m, 4, 1)) <= 1e-15);                     // center vs side middle
}

TEST_CASE("delta_q rejects i == j") {
    const ModularityMatrix m = two_vertex_graph();
    CHECK_THROWS_AS(delta_q(m, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(delta_q_direct(m, 1, 1), std::invalid_argument);
}

TEST_CASE("delta_q agrees with the direct merge delta") {
    CHECK(std::abs(delta_q(two_vertex_graph(), 0, 1) - delta_q_direct(two_vertex_graph(), 0, 1)) <=
          1e-9);

    std::mt19937 rng(20250809);
    for (int trial = 0; trial < 300; ++trial) {
        const ModularityMatrix m = random_graph(rng);
        for (int i = 0; i < m.size(); ++i)
            for (int j = i + 1; j < m.size(); ++j)
                CHECK(std::abs(delta_q(m, i, j) - delta_q_direct(m, i, j)) <= 1e-9);
    }
}

TEST_CASE("delta_q of non-adjacent vertices is -2*a_i*a_j") {
    SquareMatrix raw(3);
    raw.set_edge(0, 1, 1.0);
    raw.set_edge(1, 2, 1.0);
    const ModularityMatrix m = normalize(raw);
    CHECK(m.e(0, 2) == 0.0);
    CHECK(delta_q(m, 0, 2) ==
          doctest::Approx(-2.0 * m.strength(0) * m.strength(2)).epsilon(1e-12));
    CHECK(std::abs(delta_q(m, 0, 2) - delta_q_direct(m, 0, 2)) <= 1e-9);
    CHECK(delta_q(m, 0, 2) <= 0.0);
}

TEST_CASE("delta_q is symmetric in its vertices") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const ModularityMatrix m = random_graph(rng);
        for (int i = 0; i < m.size(); ++i)
            for (int j = i + 1; j < m.size(); ++j) CHECK(delta_q(m, i, j) == delta_q(m, j, i));
    }
}

TEST_CASE("screed preserves total weight and strength") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const ModularityMatrix m = random_graph(rng);
        std::vector<int> subset;
        for (int v = 0; v < m.size(); ++v)
            if (pick(rng) < 0.4) subset.push_back(v);
        if (subset.empty()) subset.push_back(0);

        const ModularityMatrix merged = screed(m, subset);
        CHECK(merged.total() == doctest::Approx(1.0).epsilon(1e-12));

        double a_before = 0.0;
        double a_after = 0.0;
        for (int i = 0; i < m.size(); ++i) a_before += m.strength(i);
        for (int i = 0; i < merged.size(); ++i) a_after += merged.strength(i);
        CHECK(a_after == doctest::Approx(a_before).epsilon(1e-12));

        // Q never exceeds the diagonal mass.
        double diag = 0.0;
        for (int i = 0; i < merged.size(); ++i) diag += merged.e(i, i);
        CHECK(modularity(merged) <= diag + 1e-15);
    }
}
