#include <doctest.h>

#include "schubkit/complexes.hpp"

using namespace schubkit;

namespace {

IndexTuple same(const IndexSet& I, int s) { return IndexTuple(static_cast<std::size_t>(s), I); }

}  // namespace

TEST_CASE("step profiles") {
    const auto t = theta_from_index(same(IndexSet({2, 4}, 4), 3));
    CHECK(t.m == 2);
    CHECK(t.q == 2);
    CHECK(t.theta[0] == std::vector<int>{1, 2});
    CHECK(theta_from_index(same(IndexSet::initial(3, 5), 3)).theta[1] == std::vector<int>{0, 0, 0});
    CHECK(theta_from_index(same(IndexSet::final(3, 5), 3)).theta[2] == std::vector<int>{2, 2, 2});
    const std::vector<int> a{1, 2}, z{0, 0, 0}, c{4, 4, 4};
    CHECK(p_theta_dim(a) == 3);
    CHECK(p_theta_dim(z) == 0);
    CHECK(p_theta_dim(c) == 12);
    CHECK_THROWS_AS(StepProfile(2, 2, {{2, 1}}), InvalidInput);
    CHECK_THROWS_AS(StepProfile(2, 2, {{0, 3}}), InvalidInput);
}

TEST_CASE("two-step reports") {
    const PrimeField k;
    const auto F1 = random_flags(k, 1, 3, 1), G1 = random_flags(k, 1, 3, 2);
    const auto r = two_step_report(F1, G1, StepProfile(1, 1, {{0}, {0}, {0}}));
    CHECK(r.h0 == 0);
    CHECK(r.h1 == 2);
    CHECK(r.chi == -2);

    const auto F = random_flags(k, 2, 3, 5), G = random_flags(k, 3, 3, 6);
    const auto free = two_step_report(F, G, theta_from_index(same(IndexSet::final(2, 5), 3)));
    CHECK(free.h0 == 6);
    CHECK(free.h1 == 0);
    CHECK(free.chi == 6);

    const auto F2 = random_flags(k, 2, 3, 11), G2 = random_flags(k, 2, 3, 12);
    const auto H = same(IndexSet({2, 4}, 4), 3);
    const auto one = two_step_report(F2, G2, theta_from_index(H));
    CHECK(one.h0 == 1);
    CHECK(one.h1 == 0);
    CHECK(one.chi == 1);
    CHECK(one.rank + one.h0 == 4);
    CHECK_THROWS_AS(two_step_report(F2, G, theta_from_index(H)), InvalidInput);
}

TEST_CASE("Hom spaces") {
    const PrimeField k;
    const auto F = random_flags(k, 2, 3, 21), G = random_flags(k, 2, 3, 22);
    CHECK(hom_space_dim(F, G, same(IndexSet({2, 4}, 4), 3)) == 1);
    CHECK(hom_space_dim(F, G, same(IndexSet({1, 3}, 4), 3)) == 0);
    CHECK(hom_space_dim(F, G, same(IndexSet({3, 4}, 4), 3)) == 4);
    CHECK(theta_section_vanishes(F, G, same(IndexSet({3, 4}, 4), 3)));
    CHECK(theta_section_vanishes(F, G, same(IndexSet({2, 4}, 4), 3)));
    CHECK_FALSE(theta_section_vanishes(F, G, same(IndexSet({1, 3}, 4), 3)));

    // Every basis element satisfies the constraints phi(F_a) in G_{H_a - a}.
    const auto H = same(IndexSet({2, 4}, 4), 3);
    for (const auto& phi : hom_space_basis(F, G, H))
        for (int p = 0; p < 3; ++p)
            for (int a = 1; a <= 2; ++a) {
                const auto image = phi * F[p].step(a);
                const auto target = G[p].step(H[p](a) - a);
                CHECK(hstack(target, image).rank() == target.rank());
            }
}

TEST_CASE("Hom data") {
    const PrimeField k;
    const auto F1 = random_flags(k, 1, 3, 31), G2 = random_flags(k, 2, 3, 32);
    const auto zero = hom_data(F1, G2, same(IndexSet({1}, 3), 3), 8, 1);
    CHECK(zero.D == 0);
    CHECK(zero.e == 1);
    CHECK(format_index_tuple(zero.E) == "1:1:1");
    const auto inj = hom_data(F1, G2, same(IndexSet({3}, 3), 3), 8, 1);
    CHECK(inj.D == 2);
    CHECK(inj.e == 0);
    CHECK(inj.E.size() == 3);
    CHECK(inj.E[0].size() == 0);

    const auto F = random_flags(k, 2, 3, 33), G = random_flags(k, 2, 3, 34);
    const auto none = hom_data(F, G, same(IndexSet({1, 3}, 4), 3), 8, 2);
    CHECK(none.D == 0);
    CHECK(none.e == 2);
    CHECK(format_index_tuple(none.E) == "1,2:1,2:1,2");

    // The one-dimensional Hom space of three generic lines in a plane is
    // spanned by an isomorphism.
    const auto iso = hom_data(F, G, same(IndexSet({2, 4}, 4), 3), 8, 3);
    CHECK(iso.D == 1);
    CHECK(iso.e == 0);

    const auto H = same(IndexSet({2, 5}, 5), 3);
    const auto F3 = random_flags(k, 2, 3, 40), G3 = random_flags(k, 3, 3, 41);
    const auto a = hom_data(F3, G3, H, 8, 77), b = hom_data(F3, G3, H, 8, 77);
    CHECK(a.D == b.D);
    CHECK(a.e == b.e);
    CHECK(a.E == b.E);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto c = hom_data(F3, G3, H, 8, seed);
        CHECK(c.D == a.D);
        CHECK(c.e == a.e);
        CHECK(c.E == a.E);
    }
    CHECK_THROWS_AS(hom_data(F3, G3, H, 0, 1), InvalidInput);
}

TEST_CASE("paired Hom data diagnostic") {
    const PrimeField k;
    const auto F = random_flags(k, 3, 3, 50);
    const auto G1 = random_flags(k, 2, 3, 51), G2 = random_flags(k, 2, 3, 52);
    const auto H = same(IndexSet({3, 4, 5}, 5), 3);
    const auto d = hom_prime_data(F, G1, G2, H, 8, 9);
    CHECK(d.first.D == 6);
    CHECK(d.first.e == 1);
    CHECK(d.second.e == 1);
    CHECK(d.t == 0);
    CHECK(d.T.size() == 3);
}

TEST_CASE("sampled Hom dimensions against the Horn decision") {
    const PrimeField k;
    const auto nonzero = prop11_check(k, same(IndexSet({2, 4}, 4), 3), 10, 5);
    CHECK(nonzero.horn_nonzero);
    CHECK(nonzero.expected == 1);
    CHECK(nonzero.passed_first() == 10);
    for (const auto& x : nonzero.instances)
        CHECK(x.sampled == 1);

    const auto zero = prop11_check(k, same(IndexSet({1, 3}, 4), 3), 10, 5);
    CHECK_FALSE(zero.horn_nonzero);
    CHECK(zero.expected == -5);
    CHECK(zero.passed() == 10);
    for (const auto& x : zero.instances)
        CHECK(x.sampled == 0);

    const auto free = prop11_check(k, same(IndexSet({3, 4}, 4), 3), 5, 5);
    CHECK(free.expected == 4);
    for (const auto& x : free.instances)
        CHECK(x.sampled == 4);
    CHECK(free.chi_identity_everywhere());
}

TEST_CASE("Hom dimension never drops below the expected value") {
    const PrimeField k(101);
    std::uint64_t seed = 0;
    for (int m = 1; m <= 3; ++m)
        for (int q = 1; q <= 3; ++q) {
            const auto sets = all_index_sets(m, q + m);
            for (std::size_t i = 0; i < sets.size(); i += 2)
                for (std::size_t j = i; j < sets.size(); j += 3) {
                    const IndexTuple H{sets[i], sets[j], sets[(i + j) % sets.size()]};
                    const auto F = random_flags(k, m, 3, ++seed), G = random_flags(k, q, 3, ++seed);
                    const auto r = two_step_report(F, G, theta_from_index(H));
                    CHECK(r.h0 >= std::max<Count>(0, expected_hom_dim(H, m, q)));
                    CHECK(r.h0 - r.h1 == expected_hom_dim(H, m, q));
                }
        }
}

TEST_CASE("h1 transfers to the kernel of a general map") {
    const PrimeField k;
    const auto F = random_flags(k, 2, 3, 60), G = random_flags(k, 2, 3, 61);
    const auto one = h1_transfer_check(F, G, same(IndexSet({2, 4}, 4), 3), 8, 1);
    CHECK(one.kernel_zero);
    CHECK(one.h1_full == 0);
    CHECK(one.equal);

    const auto free = h1_transfer_check(F, G, same(IndexSet({3, 4}, 4), 3), 8, 1);
    CHECK(free.h1_full == 0);
    CHECK(free.equal);

    // A rank-one map: kernel is a line in special position.
    const auto F3 = random_flags(k, 3, 3, 70), G1 = random_flags(k, 1, 3, 71);
    const IndexTuple H{IndexSet({1, 3, 4}, 4), IndexSet({2, 3, 4}, 4), IndexSet({2, 3, 4}, 4)};
    const auto r = h1_transfer_check(F3, G1, H, 8, 2);
    CHECK(r.e >= 1);
    CHECK(r.Y.size() == 3);
    CHECK(r.equal);

    int equal = 0, total = 0;
    std::uint64_t seed = 100;
    for (int m = 1; m <= 3; ++m)
        for (int q = 1; q <= 3; ++q)
            for (const auto& A : all_index_sets(m, q + m)) {
                const IndexTuple HH{A, IndexSet::final(m, q + m), A};
                const auto FF = random_flags(k, m, 3, ++seed), GG = random_flags(k, q, 3, ++seed);
                equal += h1_transfer_check(FF, GG, HH, 8, ++seed).equal;
                ++total;
            }
    CHECK(equal == total);
}

TEST_CASE("h1 vanishes on constrained flags when every subspace inequality holds") {
    const PrimeField k;
    CHECK(subspace_inequalities_hold_for_all_positions(
        IndexTuple{IndexSet({2, 4}, 4), IndexSet({3, 4}, 4), IndexSet({3, 4}, 4)}));
    CHECK_FALSE(subspace_inequalities_hold_for_all_positions(same(IndexSet({2, 4}, 4), 3)));
    CHECK_FALSE(subspace_inequalities_hold_for_all_positions(same(IndexSet({1, 3}, 4), 3)));
    CHECK(subspace_inequalities_hold_for_all_positions(same(IndexSet({3, 4}, 4), 3)));

    SeededRng rng(5);
    int checked = 0;
    for (int f = 1; f <= 3; ++f)
        for (int q = 1; q <= 3; ++q) {
            const auto sets = all_index_sets(f, q + f);
            for (const auto& a : sets)
                for (const auto& b : sets)
                    for (const auto& c : sets) {
                        const IndexTuple It{a, b, c};
                        if (!subspace_inequalities_hold_for_all_positions(It))
                            continue;
                        for (int g = 0; g <= f; ++g) {
                            auto T = PrimeMatrix::random(k, f, g, rng);
                            if (T.rank() < g)
                                continue;
                            const auto Ns = all_index_sets(g, f);
                            IndexTuple N;
                            for (int p = 0; p < 3; ++p)
                                N.push_back(Ns[rng.next() % Ns.size()]);
                            const auto FS = sample_flag_with_position(k, f, T, N, rng.next());
                            const auto G = random_flags(k, q, 3, rng.next());
                            CHECK(two_step_report(FS, G, theta_from_index(It)).h1 == 0);
                            ++checked;
                        }
                    }
        }
    CHECK(checked > 1000);
}
