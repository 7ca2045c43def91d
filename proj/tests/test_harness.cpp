#include <doctest.h>

#include "oracles.hpp"
#include "schubkit/harness.hpp"

using namespace schubkit;

TEST_CASE("codimension corpus enumeration") {
    const auto tiny = enumerate_codim_problems(1, 2, 3);
    REQUIRE(tiny.size() == 1);
    CHECK(describe(tiny[0]) == "n=2 r=1 1:2:2");

    for (int r = 1; r <= 3; ++r)
        for (int n = r; n <= r + 3; ++n)
            for (int s = 3; s <= 4; ++s)
                CHECK(static_cast<std::int64_t>(enumerate_codim_problems(r, n, s).size()) ==
                      oracle::count_codim_multisets(r, n, s));

    const auto point = enumerate_codim_problems(2, 2, 3);
    REQUIRE(point.size() == 1);
    CHECK(format_index_tuple(point[0].sets()) == "1,2:1,2:1,2");

    const auto a = enumerate_codim_problems(2, 5, 4), b = enumerate_codim_problems(2, 5, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(describe(a[i]) == describe(b[i]));
    for (const auto& P : a) {
        CHECK(P.total_codimension() == 6);
        CHECK(std::is_sorted(P.sets().begin(), P.sets().end()));
    }
}

TEST_CASE("unrestricted enumeration contains the codimension corpus") {
    const auto all = enumerate_problems(2, 4, 3);
    CHECK(all.size() == 56);
    std::size_t codim = 0;
    for (const auto& P : all)
        codim += P.total_codimension() == 4;
    CHECK(codim == enumerate_codim_problems(2, 4, 3).size());
}

TEST_CASE("stretching scans") {
    const auto small = ktt_scan(2, 5, 4, 6);
    CHECK(small.passed());
    CHECK(small.counts_by_value.at(0) == 5);
    CHECK(small.counts_by_value.at(1) == 17);
    CHECK(small.counts_by_value.at(2) == 2);

    const auto three = ktt_scan(3, 6, 3, 6);
    CHECK(three.passed());
    CHECK(three.counts_by_value.at(1) == 45);
    CHECK(three.counts_by_value.at(2) == 1);
    CHECK(three.instances.size() == 46);
}

TEST_CASE("Horn scans") {
    const auto exhaustive = horn_vs_oracle_scan(2, 5, 3);
    CHECK(exhaustive.passed());
    CHECK(exhaustive.counts_by_value.at(0) > 0);
    CHECK(exhaustive.counts_by_value.at(1) > 0);
    const auto random = horn_random_scan(60, 3, 6, 4, 9);
    CHECK(random.passed());
    CHECK(random.seed == 9);
}

TEST_CASE("campaign reports") {
    const PrimeField k;
    CampaignTotals t;
    const auto rep = prop11_campaign(k, 20, 3, 3, 3, 4, 3, &t);
    CHECK(t.instances == 20);
    CHECK(t.passed == 20);
    CHECK(t.chi_identity);
    CHECK(rep.passed());
    CHECK(rep.prime == k.prime());

    CampaignTotals h;
    const auto h1 = h1_campaign(k, 20, 3, 3, 3, 8, 4, 3, &h);
    CHECK(h.instances == 20);
    CHECK(h.passed == 20);
    CHECK(h1.passed());
}

TEST_CASE("report JSON and merging") {
    auto a = ktt_scan(2, 4, 3, 3);
    const auto b = ktt_scan(2, 5, 3, 3);
    const auto j = a.to_json();
    CHECK(j.at("schema") == 1);
    CHECK(j.at("kind") == "ktt");
    CHECK(j.at("passed") == true);
    CHECK(j.at("failures").empty());
    const auto before = a.instances.size();
    const auto ones = a.counts_by_value[1];
    a.merge(b);
    CHECK(a.instances.size() == before + b.instances.size());
    CHECK(a.counts_by_value[1] == ones + b.counts_by_value.at(1));

    VerificationReport bad;
    bad.failures.push_back({"ktt", "n=4 r=2 2,4:2,4:2,4", 3, "4", "5"});
    CHECK_FALSE(bad.passed());
    CHECK(bad.to_json().at("failures")[0].at("N") == 3);
    a.merge(bad);
    CHECK_FALSE(a.passed());
}
