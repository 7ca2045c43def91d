#include <doctest.h>

#include "schubkit/flags.hpp"

using namespace schubkit;

namespace {

PrimeMatrix span_of(const PrimeField& k, int m, std::vector<int> unit_indices) {
    PrimeMatrix R(k, m, static_cast<int>(unit_indices.size()));
    for (int j = 0; j < R.cols(); ++j)
        R.set(unit_indices[j] - 1, j, 1);
    return R;
}

}  // namespace

TEST_CASE("field and matrices") {
    CHECK_THROWS_AS(PrimeField(1'000'001), InvalidInput);
    CHECK_THROWS_AS(PrimeField(1), InvalidInput);
    const PrimeField k(7);
    CHECK(k.mul(k.inv(3), 3) == 1);
    CHECK(k.reduce(-1) == 6);
    const PrimeMatrix A(k, 2, 3, {1, 2, 3, 2, 4, 6});
    CHECK(A.rank() == 1);
    const auto N = A.nullspace();
    CHECK(N.cols() == 2);
    CHECK((A * N).rank() == 0);
    const PrimeMatrix B(k, 2, 2, {1, 2, 3, 4});
    CHECK(B * B.inverse() == PrimeMatrix::identity(k, 2));
    CHECK_THROWS_AS(PrimeMatrix(k, 2, 2, {1, 2, 2, 4}).inverse(), InvalidInput);
    std::vector<int> piv;
    A.rref(&piv);
    CHECK(piv == std::vector<int>{0});
}

TEST_CASE("seeded sampling is reproducible") {
    const PrimeField k;
    CHECK(random_flag(k, 4, 99).basis() == random_flag(k, 4, 99).basis());
    CHECK_FALSE(random_flag(k, 4, 99).basis() == random_flag(k, 4, 100).basis());
    const auto one = random_flag(k, 1, 5);
    CHECK(one.basis().at(0, 0) != 0);
    CHECK(one.step(1).rank() == 1);
    const PrimeField small(5);
    for (std::uint64_t seed = 0; seed < 1000; ++seed)
        CHECK(random_flag(small, 4, seed).basis().rank() == 4);
    SeededRng a(3), b(3);
    for (int i = 0; i < 10; ++i)
        CHECK(a.element(k) == b.element(k));
    CHECK(derive_seed(1, 2) == derive_seed(1, 2));
    CHECK(derive_seed(1, 2) != derive_seed(1, 3));
}

TEST_CASE("subspace positions") {
    const PrimeField k;
    const auto F = PrimeFlag::standard(k, 3);
    CHECK(subspace_position(span_of(k, 3, {2}), F) == IndexSet({2}, 3));
    CHECK(subspace_position(F.step(2), F) == IndexSet({1, 2}, 3));
    const auto G = random_flag(k, 5, 17);
    int generic = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SeededRng rng(seed + 1000);
        const auto R = PrimeMatrix::random(k, 5, 2, rng);
        generic += subspace_position(R, G) == IndexSet({4, 5}, 5);
    }
    CHECK(generic == 20);
    PrimeMatrix dep(k, 3, 2);
    dep.set(0, 0, 1);
    dep.set(0, 1, 2);
    CHECK_THROWS_AS(subspace_position(dep, F), InvalidInput);
}

TEST_CASE("positions are invariant under base change of R and position-preserving flag changes") {
    const PrimeField k;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SeededRng rng(seed + 1000);
        const auto F = random_flag(k, 4, seed + 100);
        // R meets the flag specially: it contains F_1.
        const auto R = hstack(F.step(1), PrimeMatrix::random(k, 4, 1, rng));
        const auto pos = subspace_position(R, F);
        CHECK(pos(1) == 1);
        const auto g = PrimeMatrix::random_invertible(k, 2, rng);
        CHECK(subspace_position(R * g, F) == pos);
        const PrimeFlag F2(F.basis() * PrimeMatrix::random_upper_triangular(k, 4, rng));
        CHECK(subspace_position(R, F2) == pos);
        const auto dims = intersection_dims(R, F);
        for (int a = 1; a <= 4; ++a) {
            CHECK(dims[a] - dims[a - 1] >= 0);
            CHECK(dims[a] - dims[a - 1] <= 1);
            CHECK((dims[a] > dims[a - 1]) == pos.contains(a));
        }
    }
}

TEST_CASE("induced flags on subspaces") {
    const PrimeField k;
    const auto F = random_flag(k, 4, 3);
    const auto whole = induced_flag_on_subspace(F, PrimeMatrix::identity(k, 4));
    for (int a = 0; a <= 4; ++a)
        CHECK(same_span(whole.step(a), F.step(a)));
    const auto prefix = induced_flag_on_subspace(F, F.step(2));
    for (int b = 0; b <= 2; ++b)
        CHECK(same_span(F.step(2) * prefix.step(b), F.step(b)));
}

TEST_CASE("prefix subspaces over F_5 give initial segments, exhaustively for m <= 4") {
    const PrimeField k(5);
    for (int m = 1; m <= 4; ++m)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto F = random_flag(k, m, seed);
            for (int e = 0; e <= m; ++e) {
                const auto S = F.step(e);
                const auto FS = induced_flag_on_subspace(F, S);
                for (int a = 0; a <= m; ++a) {
                    // S cap F_a sits in S as a step of the induced flag.
                    const auto inter = intersect_spans(S, F.step(a));
                    const int d = inter.cols();
                    CHECK(same_span(S * FS.step(d), inter));
                }
            }
        }
}

TEST_CASE("induced flag steps are the intersections with F_{H_b}") {
    const PrimeField k;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SeededRng rng(seed + 1000);
        const auto F = random_flag(k, 5, seed + 7);
        const auto S = hstack(F.step(2).columns(1, 1), PrimeMatrix::random(k, 5, 2, rng));
        const auto H = subspace_position(S, F);
        const auto FS = induced_flag_on_subspace(F, S);
        for (int b = 1; b <= S.cols(); ++b)
            CHECK(same_span(S * FS.step(b), intersect_spans(S, F.step(H(b)))));
    }
}

TEST_CASE("induced flags on quotients") {
    const PrimeField k;
    const auto F = random_flag(k, 4, 8);
    const auto Q0 = induced_flag_on_quotient(F, PrimeMatrix(k, 4, 0));
    for (int a = 0; a <= 4; ++a)
        CHECK(same_span(Q0.step(a), F.step(a)));
    CHECK(induced_flag_on_quotient(F, PrimeMatrix::identity(k, 4)).dim() == 0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SeededRng rng(seed + 1000);
        const auto S = hstack(F.step(1), PrimeMatrix::random(k, 4, 1, rng));
        const QuotientModel model(S);
        CHECK(model.dim() == 2);
        CHECK(model.project(S).rank() == 0);
        const auto dims = intersection_dims(S, F);
        const auto FQ = induced_flag_on_quotient(F, S);
        for (int a = 0; a <= 4; ++a) {
            const int image = model.project(F.step(a)).rank();
            CHECK(image == a - dims[a]);
            CHECK(same_span(FQ.step(image), model.project(F.step(a))));
        }
    }
}

TEST_CASE("flags sampled with a prescribed position") {
    const PrimeField k;
    SeededRng rng(1);
    const auto T = PrimeMatrix::random(k, 4, 2, rng);
    const IndexTuple N{IndexSet({1, 3}, 4), IndexSet({2, 4}, 4), IndexSet({1, 2}, 4)};
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto flags = sample_flag_with_position(k, 4, T, N, seed);
        REQUIRE(flags.size() == 3);
        for (int p = 0; p < 3; ++p)
            CHECK(subspace_position(T, flags[p]) == N[p]);
    }
    const auto prefix = sample_flag_with_position(k, 4, T, {IndexSet({1, 2}, 4)}, 5);
    CHECK(same_span(prefix[0].step(2), T));
    const auto free = sample_flag_with_position(k, 3, PrimeMatrix(k, 3, 0),
                                                IndexTuple(3, IndexSet({}, 3)), 9);
    CHECK(free.size() == 3);
    CHECK_THROWS_AS(sample_flag_with_position(k, 1, T, N, 0), InvalidInput);
    CHECK(sample_flag_with_position(k, 4, T, N, 42)[1].basis() ==
          sample_flag_with_position(k, 4, T, N, 42)[1].basis());
}
