#include <doctest.h>

#include "oracles.hpp"

using schubkit::Partition;

TEST_CASE("GT character dimension matches hook content formula") {
    // dim V_(2,1) for GL_3 is 8, dim V_(2) for GL_2 is 3.
    std::int64_t dim = 0;
    for (const auto& [w, m] : oracle::gl_character({2, 1}, 3))
        dim += m;
    CHECK(dim == 8);
    dim = 0;
    for (const auto& [w, m] : oracle::gl_character({2}, 2))
        dim += m;
    CHECK(dim == 3);
}

TEST_CASE("character oracle reproduces small tensor decompositions") {
    CHECK(oracle::lr_by_characters(Partition{1}, Partition{1}, Partition{2}, 2) == 1);
    CHECK(oracle::lr_by_characters(Partition{1}, Partition{1}, Partition{1, 1}, 2) == 1);
    CHECK(oracle::lr_by_characters(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}, 3) == 2);
    CHECK(oracle::lr_by_characters(Partition{1}, Partition{1}, Partition{3}, 2) == 0);
}

TEST_CASE("Clebsch-Gordan oracle") {
    CHECK(oracle::sl2_invariants({1, 1}) == 1);
    CHECK(oracle::sl2_invariants({1, 1, 1, 1}) == 2);
    CHECK(oracle::sl2_invariants({1, 1, 0}) == 1);
    CHECK(oracle::sl2_invariants({2, 2, 2, 2}) == 3);
    CHECK(oracle::sl2_invariants({1, 1, 1}) == 0);
}

TEST_CASE("subspace listing counts Grassmannian points") {
    CHECK(oracle::count_subspaces(2, 3, 1) == 7);
    CHECK(oracle::count_subspaces(2, 4, 2) == 35);
    CHECK(oracle::count_subspaces(3, 3, 1) == 13);
    CHECK(oracle::count_subspace_pairs(2, 3, 2, 1) == 42);
}
