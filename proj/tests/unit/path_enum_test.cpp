#include <doctest.h>

#include <random>

#include "algpath/errors.hpp"
#include "algpath/path_enum.hpp"
#include "support/grids.hpp"
#include "support/oracles.hpp"

using namespace algpath;

namespace {

path_set paths(std::initializer_list<vertex_string> list) {
    return path_set(list);
}

}  // namespace

TEST_CASE("trimmed product joins at the shared endpoint") {
    CHECK(trimmed_product(paths({{0, 1}}), paths({{1, 2}})) ==
          paths({{0, 1, 2}}));
    // Revisiting the start vertex is trimmed away...
    CHECK(trimmed_product(paths({{0, 1}}), paths({{1, 0}})).empty());
    // ...and so is any repeated interior vertex.
    CHECK(trimmed_product(paths({{0, 2, 1}}), paths({{1, 2, 3}})).empty());

    const path_set left = paths({{0, 1}, {0, 2, 1}});
    const path_set right = paths({{1, 3}, {1, 2, 3}});
    CHECK(trimmed_product(left, right) ==
          paths({{0, 1, 3}, {0, 1, 2, 3}, {0, 2, 1, 3}}));

    CHECK(trimmed_product({}, right).empty());
    CHECK(trimmed_product(left, {}).empty());
}

TEST_CASE("five-vertex enumeration golden") {
    const relation_matrix g = grids::arcs(
        5, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {2, 0}, {3, 2}, {3, 4}});
    const path_set_matrix w = enumerate_paths(g);

    CHECK(w(0, 1) == paths({{0, 1}}));
    CHECK(w(0, 2) == paths({{0, 2}, {0, 1, 2}}));
    CHECK(w(0, 4) == paths({{0, 4}}));
    CHECK(w(1, 0) == paths({{1, 2, 0}}));
    CHECK(w(1, 2) == paths({{1, 2}}));
    CHECK(w(1, 4) == paths({{1, 2, 0, 4}}));
    CHECK(w(2, 0) == paths({{2, 0}}));
    CHECK(w(2, 1) == paths({{2, 0, 1}}));
    CHECK(w(2, 4) == paths({{2, 0, 4}}));
    CHECK(w(3, 0) == paths({{3, 2, 0}}));
    CHECK(w(3, 1) == paths({{3, 2, 0, 1}}));
    CHECK(w(3, 2) == paths({{3, 2}}));
    CHECK(w(3, 4) == paths({{3, 4}, {3, 2, 0, 4}}));

    // The cycle 0 -> 2 -> 0 creates no diagonal entries: every listed
    // path has pairwise distinct vertices.
    for (std::size_t i = 0; i < 5; ++i) CHECK(w(i, i).empty());
    for (std::size_t j = 0; j < 5; ++j) CHECK(w(4, j).empty());
    CHECK(w(0, 3).empty());
    CHECK(w(1, 3).empty());
    CHECK(w(2, 3).empty());
}

TEST_CASE("self-loops are rejected") {
    try {
        enumerate_paths(grids::arcs(2, {{0, 0}, {0, 1}}));
        FAIL("expected self_loop");
    } catch (const error& e) {
        CHECK(e.code() == errc::self_loop);
    }
}

TEST_CASE("per-cell limit guards the factorial blowup") {
    relation_matrix complete(5, 0);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            if (i != j) complete(i, j) = 1;
    enum_limits limits;
    limits.max_paths_per_cell = 3;
    try {
        enumerate_paths(complete, limits);
        FAIL("expected path_limit_exceeded");
    } catch (const error& e) {
        CHECK(e.code() == errc::path_limit_exceeded);
    }
    // The default limit is far above the 16 paths per cell of K5.
    CHECK(enumerate_paths(complete)(0, 1).size() == 16);
}

TEST_CASE("enumeration matches DFS on random digraphs") {
    std::mt19937 rng(31337);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 1 + rng() % 7;
        const relation_matrix a = oracles::random_digraph(rng, n, 0.35);
        CHECK(enumerate_paths(a) == oracles::enumerate_by_dfs(a));
    }
}

TEST_CASE("enumeration is a fixpoint of the kernel") {
    std::mt19937 rng(31338);
    const path_set_semiring s;
    for (int round = 0; round < 10; ++round) {
        const std::size_t n = 2 + rng() % 5;
        const relation_matrix a = oracles::random_digraph(rng, n, 0.4);
        const path_set_matrix once = enumerate_paths(a);
        path_set_matrix again = once;
        closure_in_place(again, s);
        CHECK(again == once);
    }
}
