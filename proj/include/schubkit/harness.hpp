#pragma once

// Corpus enumeration and the verification scans run by the command line.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "schubkit/complexes.hpp"
#include "schubkit/horn.hpp"
#include "schubkit/lr_engine.hpp"

namespace schubkit {

/// All s-tuples of r-subsets of [n] with total codimension r(n - r), one
/// per multiset: index sequences into all_index_sets(r, n) that are
/// nondecreasing, in lexicographic order.
std::vector<SchubertProblem> enumerate_codim_problems(int r, int n, int s);

/// Same, without the codimension condition.
std::vector<SchubertProblem> enumerate_problems(int r, int n, int s);

struct Failure {
    std::string check;
    std::string problem;
    int N = 0;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string kind;
    nlohmann::json corpus;
    std::map<Count, int> counts_by_value;
    nlohmann::json instances = nlohmann::json::array();
    std::vector<Failure> failures;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
    /// Concatenates instances and failures, sums counts.
    void merge(const VerificationReport& other);
};

/// Problem text "n=4 r=2 2,4:2,4:2,4".
std::string describe(const SchubertProblem& P);

/// For every problem in the codimension corpus: an intersection number of 1
/// must stretch to all ones, 2 must stretch to N + 1 for N <= n_max, and
/// any nonzero instance must have generically semistable weights lambda(I).
VerificationReport ktt_scan(int r, int n, int s, int n_max);

/// horn_nonzero against product_nonzero_oracle on every problem with
/// 1 <= r <= r_max, r < n <= n_max.
VerificationReport horn_vs_oracle_scan(int r_max, int n_max, int s);

/// Same comparison on `count` seeded random problems.
VerificationReport horn_random_scan(int count, int r_max, int n_max, int s, std::uint64_t seed);

struct CampaignTotals {
    int instances = 0;
    int passed_first = 0;
    int passed = 0;
    bool chi_identity = true;
};

/// Random (m, q, H) with 1 <= m <= m_max, 1 <= q <= q_max, one sampled flag
/// pair each, checked as in prop11_check.
VerificationReport prop11_campaign(const PrimeField& k, int count, int m_max, int q_max, int s,
                                   std::uint64_t seed, int retries, CampaignTotals* totals);

/// Random (m, q, H, F, G) with h1 transfer checked; a failing instance is
/// redrawn with a fresh G and seed up to `retries` times.
VerificationReport h1_campaign(const PrimeField& k, int count, int m_max, int q_max, int s,
                               int trials, std::uint64_t seed, int retries,
                               CampaignTotals* totals);

}  // namespace schubkit
