#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "schubkit/harness.hpp"

using namespace schubkit;

namespace {

int failed = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << name << ": " << detail << "\n";
    failed += !ok;
}

int count_failures(const VerificationReport& r, const std::string& check) {
    return static_cast<int>(std::count_if(r.failures.begin(), r.failures.end(),
                                          [&](const Failure& f) { return f.check == check; }));
}

}  // namespace

int main() {
    VerificationReport corpus;
    for (int n : {3, 4, 5})
        for (int s : {3, 4})
            corpus.merge(ktt_scan(2, n, s, 6));
    for (int n : {4, 5, 6})
        corpus.merge(ktt_scan(3, n, 3, 6));
    const int twos = corpus.counts_by_value[2];
    const int ones = corpus.counts_by_value[1];
    int nonzero = 0;
    for (const auto& [value, count] : corpus.counts_by_value)
        nonzero += value >= 1 ? count : 0;

    const int ktt_bad = count_failures(corpus, "ktt");
    report(1, "stretching of intersection number 2", ktt_bad == 0 && twos > 0,
           std::to_string(twos) + " problems, " + std::to_string(ktt_bad) + " mismatches for N <= 6");

    const int fulton_bad = count_failures(corpus, "fulton");
    report(2, "stretching of intersection number 1", fulton_bad == 0 && ones > 0,
           std::to_string(ones) + " problems, " + std::to_string(fulton_bad) + " mismatches for N <= 6");

    {
        bool ok = lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2;
        for (int N = 1; N <= 10; ++N) {
            const Count c = lr_coefficient({2 * N, N}, {2 * N, N}, {3 * N, 2 * N, N});
            ok = ok && c == N + 1;
            if (N <= 3)
                ok = ok && oracle::lr_by_characters({2 * N, N}, {2 * N, N}, {3 * N, 2 * N, N}, 3) == c;
        }
        const std::vector<Partition> four{{1}, {1}, {1}, {1}};
        const auto st = stretch_sequence(four, 2, 5);
        ok = ok && st.values == std::vector<Count>{2, 3, 4, 5, 6};
        for (int N = 1; N <= 5; ++N)
            ok = ok && oracle::sl2_invariants({N, N, N, N}) == st.values[static_cast<std::size_t>(N - 1)];
        report(3, "classic coefficient and four points on a line", ok,
               "c = 2, N + 1 for N <= 10, SL2 stretch 2 3 4 5 6");
    }

    {
        const auto ex = horn_vs_oracle_scan(3, 7, 3);
        const auto rnd = horn_random_scan(500, 3, 7, 4, 1);
        std::size_t total = 0;
        for (const auto& [value, count] : ex.counts_by_value)
            total += static_cast<std::size_t>(count);
        report(4, "Horn recursion against the product", ex.passed() && rnd.passed(),
               std::to_string(total) + " exhaustive, 500 random, " +
                   std::to_string(ex.failures.size() + rnd.failures.size()) + " mismatches");
    }

    const PrimeField k(kDefaultPrime);
    CampaignTotals prop;
    prop11_campaign(k, 100, 4, 4, 3, 1, 3, &prop);
    report(5, "sampled Hom dimension", prop.passed_first >= 99 && prop.passed == 100,
           std::to_string(prop.passed_first) + "/100 first seed, " + std::to_string(prop.passed) +
               "/100 within 3 retries");
    report(6, "Euler characteristic of the two-step complex", prop.chi_identity,
           "every sampled complex of the campaign");

    CampaignTotals h1;
    h1_campaign(k, 200, 3, 3, 3, 8, 1, 3, &h1);
    report(7, "h1 transfer to the kernel", h1.passed_first >= 198 && h1.passed == 200,
           std::to_string(h1.passed_first) + "/200 first seed, " + std::to_string(h1.passed) +
               "/200 within 3 retries");

    {
        int cases = 0, bad = 0;
        for (int rho = 1; rho <= 8; ++rho)
            for (int kk = 0; kk <= rho; ++kk)
                for (const auto& L : all_index_sets(kk, rho)) {
                    ++cases;
                    bad += !filtration_codim_identity(rho, L);
                }
        report(8, "filtration codimension identity", bad == 0,
               std::to_string(cases) + " cases, " + std::to_string(bad) + " false");
    }

    {
        int cases = 0, bad = 0;
        for (int q : {2, 3})
            for (int r = 0; r <= 4; ++r)
                for (int f = 0; f <= r; ++f)
                    for (int g = 0; g <= f; ++g) {
                        ++cases;
                        const auto poly = triple_count_polynomial(r, f, g);
                        const auto count = oracle::count_subspace_pairs(q, r, f, g);
                        bool ok = evaluate_polynomial(poly, q) == count;
                        if (count > 0)
                            ok = ok && static_cast<Count>(poly.size()) - 1 == triple_space_dim(r, f, g);
                        bad += !ok;
                    }
        const auto special = oracle::count_subspace_pairs(2, 3, 2, 1);
        report(9, "point counts of subspace triples", bad == 0 && special == 42,
               std::to_string(cases) + " cases, " + std::to_string(bad) +
                   " mismatches, r=3 f=2 g=1 over F_2: " + std::to_string(special));
    }

    const int bridge_bad = count_failures(corpus, "semistable");
    report(10, "semistability of nonzero problems", bridge_bad == 0 && nonzero > 0,
           std::to_string(nonzero) + " problems, " + std::to_string(bridge_bad) + " exceptions");

    return failed == 0 ? 0 : 1;
}
