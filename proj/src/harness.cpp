#include "schubkit/harness.hpp"

#include <algorithm>

#include "schubkit/parabolic.hpp"

namespace schubkit {

namespace {

template <typename Keep>
std::vector<SchubertProblem> enumerate_multisets(int r, int n, int s, Keep&& keep) {
    if (r < 0 || n < r || s < 3)
        throw InvalidInput("enumerate: need 0 <= r <= n and s >= 3");
    const auto sets = all_index_sets(r, n);
    std::vector<Count> codim;
    for (const auto& I : sets)
        codim.push_back(codimension(I));
    std::vector<SchubertProblem> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
    while (true) {
        Count total = 0;
        for (auto i : idx)
            total += codim[i];
        if (keep(total)) {
            IndexTuple tuple;
            for (auto i : idx)
                tuple.push_back(sets[i]);
            out.emplace_back(n, r, std::move(tuple));
        }
        int p = s - 1;
        while (p >= 0 && idx[p] + 1 == sets.size())
            --p;
        if (p < 0)
            break;
        ++idx[p];
        for (int t = p + 1; t < s; ++t)
            idx[t] = idx[p];
    }
    return out;
}

nlohmann::json counts_json(const std::map<Count, int>& counts) {
    auto j = nlohmann::json::object();
    for (const auto& [value, n] : counts)
        j[std::to_string(value)] = n;
    return j;
}

IndexTuple random_tuple(int k, int ambient, int s, SeededRng& rng) {
    const auto sets = all_index_sets(k, ambient);
    IndexTuple out;
    for (int p = 0; p < s; ++p)
        out.push_back(sets[rng.next() % sets.size()]);
    return out;
}

}  // namespace

std::vector<SchubertProblem> enumerate_codim_problems(int r, int n, int s) {
    const Count target = static_cast<Count>(r) * (n - r);
    return enumerate_multisets(r, n, s, [&](Count total) { return total == target; });
}

std::vector<SchubertProblem> enumerate_problems(int r, int n, int s) {
    return enumerate_multisets(r, n, s, [](Count) { return true; });
}

std::string describe(const SchubertProblem& P) {
    return "n=" + std::to_string(P.n()) + " r=" + std::to_string(P.r()) + " " +
           format_index_tuple(P.sets());
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["kind"] = kind;
    j["corpus"] = corpus;
    j["counts_by_value"] = counts_json(counts_by_value);
    j["instances"] = instances;
    auto f = nlohmann::json::array();
    for (const auto& x : failures)
        f.push_back({{"check", x.check},
                     {"problem", x.problem},
                     {"N", x.N},
                     {"expected", x.expected},
                     {"actual", x.actual}});
    j["failures"] = f;
    if (prime)
        j["prime"] = prime;
    j["seed"] = seed;
    j["passed"] = passed();
    return j;
}

void VerificationReport::merge(const VerificationReport& other) {
    for (const auto& [value, n] : other.counts_by_value)
        counts_by_value[value] += n;
    for (const auto& x : other.instances)
        instances.push_back(x);
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

VerificationReport ktt_scan(int r, int n, int s, int n_max) {
    VerificationReport report;
    report.kind = "ktt";
    report.corpus = {{"r", r}, {"n", n}, {"s", s}, {"n_max", n_max}};
    for (const auto& P : enumerate_codim_problems(r, n, s)) {
        const Count d1 = intersection_number(P);
        ++report.counts_by_value[d1];
        if (d1 >= 1) {
            const auto W = ParabolicWeights::from_problem(P);
            if (!generic_semistable(W))
                report.failures.push_back({"semistable", describe(P), 1, "true", "false"});
        }
        if (d1 != 1 && d1 != 2)
            continue;
        const auto lambdas = P.partitions();
        const auto stretch = stretch_sequence(lambdas, r, n_max);
        std::vector<Count> expected;
        for (int N = 1; N <= n_max; ++N) {
            expected.push_back(d1 == 1 ? 1 : N + 1);
            const Count actual = stretch.values[static_cast<std::size_t>(N - 1)];
            if (actual != expected.back())
                report.failures.push_back({d1 == 1 ? "fulton" : "ktt", describe(P), N,
                                           std::to_string(expected.back()),
                                           std::to_string(actual)});
        }
        report.instances.push_back({{"problem", describe(P)},
                                    {"intersection_number", d1},
                                    {"stretch", stretch.values},
                                    {"degree", stretch.degree},
                                    {"passed", stretch.values == expected}});
    }
    return report;
}

VerificationReport horn_vs_oracle_scan(int r_max, int n_max, int s) {
    VerificationReport report;
    report.kind = "horn";
    report.corpus = {{"r_max", r_max}, {"n_max", n_max}, {"s", s}};
    for (int r = 1; r <= r_max; ++r)
        for (int n = r + 1; n <= n_max; ++n)
            for (const auto& P : enumerate_problems(r, n, s)) {
                const bool horn = horn_nonzero(P);
                const bool oracle = product_nonzero_oracle(P);
                ++report.counts_by_value[oracle ? 1 : 0];
                if (horn != oracle)
                    report.failures.push_back({"horn", describe(P), 0, oracle ? "nonzero" : "zero",
                                               horn ? "nonzero" : "zero"});
            }
    return report;
}

VerificationReport horn_random_scan(int count, int r_max, int n_max, int s, std::uint64_t seed) {
    VerificationReport report;
    report.kind = "horn-random";
    report.seed = seed;
    report.corpus = {{"count", count}, {"r_max", r_max}, {"n_max", n_max}, {"s", s}};
    for (int i = 0; i < count; ++i) {
        SeededRng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const int r = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(r_max));
        const int n = r + 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n_max - r));
        const SchubertProblem P(n, r, random_tuple(r, n, s, rng));
        const bool horn = horn_nonzero(P);
        const bool oracle = product_nonzero_oracle(P);
        ++report.counts_by_value[oracle ? 1 : 0];
        if (horn != oracle)
            report.failures.push_back({"horn", describe(P), 0, oracle ? "nonzero" : "zero",
                                       horn ? "nonzero" : "zero"});
    }
    return report;
}

VerificationReport prop11_campaign(const PrimeField& k, int count, int m_max, int q_max, int s,
                                   std::uint64_t seed, int retries, CampaignTotals* totals) {
    VerificationReport report;
    report.kind = "prop11";
    report.prime = k.prime();
    report.seed = seed;
    report.corpus = {{"count", count}, {"m_max", m_max}, {"q_max", q_max}, {"s", s}};
    CampaignTotals t;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t inst_seed = derive_seed(seed, static_cast<std::uint64_t>(i));
        SeededRng rng(inst_seed);
        const int m = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(m_max));
        const int q = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(q_max));
        const auto H = random_tuple(m, q + m, s, rng);
        const auto r = prop11_check(k, H, 1, rng.next(), retries);
        const auto& x = r.instances.front();
        ++t.instances;
        t.passed_first += x.passed_first;
        t.passed += x.passed;
        t.chi_identity = t.chi_identity && x.chi_identity;
        ++report.counts_by_value[x.sampled];
        const std::string problem = "m=" + std::to_string(m) + " q=" + std::to_string(q) + " " +
                                    format_index_tuple(H);
        report.instances.push_back({{"problem", problem},
                                    {"seed", x.seed},
                                    {"attempts", x.attempts},
                                    {"horn_nonzero", r.horn_nonzero},
                                    {"expected", r.expected},
                                    {"sampled", x.sampled},
                                    {"passed", x.passed}});
        if (!x.passed)
            report.failures.push_back({"prop11", problem, 0, std::to_string(r.expected),
                                       std::to_string(x.sampled)});
        if (!x.chi_identity)
            report.failures.push_back({"chi", problem, 0, "identity", "mismatch"});
    }
    if (totals)
        *totals = t;
    return report;
}

VerificationReport h1_campaign(const PrimeField& k, int count, int m_max, int q_max, int s,
                               int trials, std::uint64_t seed, int retries,
                               CampaignTotals* totals) {
    VerificationReport report;
    report.kind = "h1";
    report.prime = k.prime();
    report.seed = seed;
    report.corpus = {{"count", count}, {"m_max", m_max}, {"q_max", q_max}, {"s", s}};
    CampaignTotals t;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t inst_seed = derive_seed(seed, static_cast<std::uint64_t>(i));
        SeededRng rng(inst_seed);
        const int m = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(m_max));
        const int q = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(q_max));
        const auto H = random_tuple(m, q + m, s, rng);
        const auto F = random_flags(k, m, s, rng.next());
        const std::uint64_t base = rng.next();
        H1TransferReport r;
        int attempts = 0;
        for (int attempt = 0; attempt <= retries; ++attempt) {
            const std::uint64_t a_seed =
                attempt == 0 ? base : derive_seed(base, static_cast<std::uint64_t>(attempt));
            const auto G = random_flags(k, q, s, derive_seed(a_seed, 0));
            r = h1_transfer_check(F, G, H, trials, derive_seed(a_seed, 1));
            attempts = attempt + 1;
            if (attempt == 0)
                t.passed_first += r.equal;
            if (r.equal)
                break;
        }
        ++t.instances;
        t.passed += r.equal;
        ++report.counts_by_value[r.h1_full];
        const std::string problem = "m=" + std::to_string(m) + " q=" + std::to_string(q) + " " +
                                    format_index_tuple(H);
        report.instances.push_back({{"problem", problem},
                                    {"seed", inst_seed},
                                    {"attempts", attempts},
                                    {"e", r.e},
                                    {"h1", r.h1_full},
                                    {"h1_restricted", r.h1_restricted},
                                    {"passed", r.equal}});
        if (!r.equal)
            report.failures.push_back({"h1", problem, 0, std::to_string(r.h1_full),
                                       std::to_string(r.h1_restricted)});
    }
    if (totals)
        *totals = t;
    return report;
}

}  // namespace schubkit
