#include "cli.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubkit/complexes.hpp"
#include "schubkit/harness.hpp"
#include "schubkit/lr_cache.hpp"
#include "schubkit/parabolic.hpp"

namespace schubkit {

namespace {

using nlohmann::json;

struct Globals {
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 1;
    int trials = 8;
    int retries = 3;
    bool json = false;
    std::string cache;
};

std::string rational_text(const Rational& x) {
    return x.denominator() == 1 ? std::to_string(x.numerator())
                                : std::to_string(x.numerator()) + "/" +
                                      std::to_string(x.denominator());
}

json tuple_json(std::span<const IndexSet> tuple) { return format_index_tuple(tuple); }

int emit_report(const VerificationReport& report, const Globals& g, std::ostream& out) {
    if (g.json) {
        out << report.to_json().dump(2) << "\n";
    } else {
        for (const auto& [value, n] : report.counts_by_value)
            out << "value " << value << ": " << n << "\n";
        for (const auto& f : report.failures)
            out << "FAIL " << f.check << " " << f.problem << " N=" << f.N
                << " expected=" << f.expected << " actual=" << f.actual << "\n";
        out << (report.passed() ? "pass" : "fail") << "\n";
    }
    return report.passed() ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Littlewood-Richardson numbers, Schubert calculus and Horn checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--prime", g.prime, "Field size for sampled linear algebra");
    app.add_option("--seed", g.seed, "64-bit seed");
    app.add_option("--trials", g.trials, "Random combinations tried per Hom space")
        ->check(CLI::PositiveNumber);
    app.add_option("--retries", g.retries, "Reseeds allowed per failing instance")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--json", g.json, "JSON report on standard output");
    app.add_option("--cache", g.cache, "LR coefficient cache file");

    std::function<int()> action;

    auto* lr = app.add_subcommand("lr", "LR coefficient c^nu_{lambda mu}");
    std::string lam, mu, nu;
    lr->add_option("lambda", lam)->required();
    lr->add_option("mu", mu)->required();
    lr->add_option("nu", nu)->required();
    lr->callback([&] {
        action = [&] {
            const auto value =
                lr_coefficient(parse_partition(lam), parse_partition(mu), parse_partition(nu));
            if (g.json)
                out << json{{"schema", 1}, {"lambda", lam}, {"mu", mu}, {"nu", nu}, {"value", value}}
                           .dump()
                    << "\n";
            else
                out << value << "\n";
            return 0;
        };
    });

    auto* invdim = app.add_subcommand("invdim", "Dimension of SL_r invariants in a tensor product");
    int r = 0;
    std::string weights;
    invdim->add_option("--r", r)->required();
    invdim->add_option("weights", weights, "Partitions joined by ':'")->required();
    invdim->callback([&] {
        action = [&] {
            const auto value = invariant_dimension(parse_partition_tuple(weights), r);
            if (g.json)
                out << json{{"schema", 1}, {"r", r}, {"weights", weights}, {"value", value}}.dump()
                    << "\n";
            else
                out << value << "\n";
            return 0;
        };
    });

    auto* stretch = app.add_subcommand("stretch", "Invariant dimensions of N times the weights");
    int max_n = 6;
    stretch->add_option("--r", r)->required();
    stretch->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    stretch->add_option("weights", weights)->required();
    stretch->callback([&] {
        action = [&] {
            const auto report = stretch_sequence(parse_partition_tuple(weights), r, max_n);
            if (g.json) {
                std::vector<std::string> coeffs;
                for (const auto& c : report.monomial_coefficients())
                    coeffs.push_back(rational_text(c));
                out << json{{"schema", 1},        {"r", r},
                            {"weights", weights}, {"values", report.values},
                            {"differences", report.differences},
                            {"degree", report.degree},
                            {"polynomial", coeffs}}
                           .dump()
                    << "\n";
            } else {
                for (std::size_t i = 0; i < report.values.size(); ++i)
                    out << (i ? " " : "") << report.values[i];
                out << "\n";
            }
            return 0;
        };
    });

    int n = 0;
    std::string sets;
    bool explain = false;
    auto* horn = app.add_subcommand("horn", "Decide whether a Schubert product is nonzero");
    horn->add_option("--n", n)->required();
    horn->add_option("--r", r)->required();
    horn->add_flag("--explain", explain, "Show the first violated inequality");
    horn->add_option("sets", sets, "Index sets joined by ':'")->required();
    horn->callback([&] {
        action = [&] {
            const SchubertProblem P(n, r, parse_index_tuple(sets, n));
            const auto d = horn_decide(P);
            if (g.json) {
                json j{{"schema", 1},
                       {"problem", describe(P)},
                       {"decision", d.nonzero ? "nonzero" : "zero"}};
                if (explain && d.violated)
                    j["violated"] = {{"K", tuple_json(d.violated->K)},
                                     {"value", d.violated->lhs_value}};
                out << j.dump() << "\n";
            } else {
                out << (d.nonzero ? "nonzero" : "zero") << "\n";
                if (explain && d.violated)
                    out << "violated K=" << format_index_tuple(d.violated->K)
                        << " value=" << d.violated->lhs_value << "\n";
            }
            return 0;
        };
    });

    std::string kset;
    auto* ineq = app.add_subcommand("ineq", "Evaluate one Horn inequality");
    ineq->add_option("--n", n)->required();
    ineq->add_option("--r", r)->required();
    ineq->add_option("sets", sets)->required();
    ineq->add_option("K", kset, "Subsets of [r] joined by ':'")->required();
    ineq->callback([&] {
        action = [&] {
            const SchubertProblem P(n, r, parse_index_tuple(sets, n));
            const auto K = parse_index_tuple(kset, r);
            const auto value = horn_inequality_value(P, K);
            if (g.json)
                out << json{{"schema", 1}, {"problem", describe(P)}, {"K", kset},
                            {"value", value}, {"holds", value <= 0}}
                           .dump()
                    << "\n";
            else
                out << value << " " << (value <= 0 ? "holds" : "violated") << "\n";
            return 0;
        };
    });

    std::optional<int> level;
    auto* semi = app.add_subcommand("semistable", "Semistability of weights for general flags");
    semi->add_option("--level", level, "Read index sets in [level + m] and use lambda(I)");
    semi->add_option("weights", weights)->required();
    semi->callback([&] {
        action = [&] {
            std::optional<ParabolicWeights> W;
            if (level) {
                const auto first = weights.substr(0, weights.find(':'));
                const int m = static_cast<int>(parse_int_list(first).size());
                const auto I = parse_index_tuple(weights, *level + m);
                std::vector<Partition> lams;
                for (const auto& Ip : I)
                    lams.push_back(partition_from_index_set(Ip, *level + m, m));
                W = ParabolicWeights::from_partitions(m, lams);
            } else {
                W = parse_weights(weights);
            }
            const auto res = check_generic_semistable(*W);
            if (g.json) {
                json j{{"schema", 1},
                       {"weights", weights},
                       {"slope", rational_text(total_slope(*W))},
                       {"semistable", res.semistable}};
                if (!res.semistable)
                    j["witness"] = {{"E", tuple_json(res.witness)},
                                    {"slope", rational_text(res.witness_slope)}};
                out << j.dump() << "\n";
            } else {
                out << (res.semistable ? "semistable" : "unstable") << "\n";
                if (!res.semistable)
                    out << "witness E=" << format_index_tuple(res.witness)
                        << " slope=" << rational_text(res.witness_slope) << " > "
                        << rational_text(total_slope(*W)) << "\n";
            }
            return 0;
        };
    });

    int m = 0, q = 0;
    auto* homdim = app.add_subcommand("homdim", "Hom data for random flags");
    homdim->add_option("--m", m)->required();
    homdim->add_option("--q", q)->required();
    homdim->add_option("sets", sets, "Subsets of [q + m] joined by ':'")->required();
    homdim->callback([&] {
        action = [&] {
            const PrimeField k(g.prime);
            const auto H = parse_index_tuple(sets, q + m);
            const int s = static_cast<int>(H.size());
            const auto F = random_flags(k, m, s, derive_seed(g.seed, 0));
            const auto G = random_flags(k, q, s, derive_seed(g.seed, 1));
            const auto rep = two_step_report(F, G, theta_from_index(H));
            const auto hd = hom_data(F, G, H, g.trials, derive_seed(g.seed, 2));
            if (g.json)
                out << json{{"schema", 1},      {"prime", g.prime}, {"seed", g.seed},
                            {"H", sets},        {"h0", rep.h0},     {"h1", rep.h1},
                            {"chi", rep.chi},   {"D", hd.D},        {"e", hd.e},
                            {"E", tuple_json(hd.E)},
                            {"expected", expected_hom_dim(H, m, q)}}
                           .dump()
                    << "\n";
            else
                out << hd.D << "\n";
            return 0;
        };
    });

    int instances = 10;
    auto* prop11 = app.add_subcommand("prop11", "Sampled Hom dimension against the Horn decision");
    prop11->add_option("--m", m)->required();
    prop11->add_option("--q", q)->required();
    prop11->add_option("--instances", instances)->check(CLI::PositiveNumber);
    prop11->add_option("sets", sets)->required();
    prop11->callback([&] {
        action = [&] {
            const PrimeField k(g.prime);
            const auto H = parse_index_tuple(sets, q + m);
            const auto rep = prop11_check(k, H, instances, g.seed, g.retries);
            const bool ok = rep.passed() == instances && rep.chi_identity_everywhere();
            if (g.json) {
                auto list = json::array();
                for (const auto& x : rep.instances)
                    list.push_back({{"seed", x.seed},
                                    {"attempts", x.attempts},
                                    {"sampled", x.sampled},
                                    {"passed", x.passed}});
                out << json{{"schema", 1},
                            {"prime", g.prime},
                            {"seed", g.seed},
                            {"H", sets},
                            {"horn_nonzero", rep.horn_nonzero},
                            {"expected", rep.expected},
                            {"passed_first", rep.passed_first()},
                            {"passed", rep.passed()},
                            {"instances", list}}
                           .dump(2)
                    << "\n";
            } else {
                out << (rep.horn_nonzero ? "nonzero" : "zero") << " expected=" << rep.expected
                    << " passed=" << rep.passed() << "/" << instances
                    << " first=" << rep.passed_first() << "\n";
            }
            return ok ? 0 : 1;
        };
    });

    auto* h1 = app.add_subcommand("h1check", "h1 of a complex against its restriction to a kernel");
    h1->add_option("--m", m)->required();
    h1->add_option("--q", q)->required();
    h1->add_option("sets", sets)->required();
    h1->callback([&] {
        action = [&] {
            const PrimeField k(g.prime);
            const auto H = parse_index_tuple(sets, q + m);
            const int s = static_cast<int>(H.size());
            const auto F = random_flags(k, m, s, derive_seed(g.seed, 0));
            H1TransferReport rep;
            int attempts = 0;
            for (int a = 0; a <= g.retries; ++a) {
                const auto a_seed = derive_seed(g.seed, static_cast<std::uint64_t>(a + 1));
                const auto G = random_flags(k, q, s, derive_seed(a_seed, 0));
                rep = h1_transfer_check(F, G, H, g.trials, derive_seed(a_seed, 1));
                attempts = a + 1;
                if (rep.equal)
                    break;
            }
            if (g.json)
                out << json{{"schema", 1},
                            {"prime", g.prime},
                            {"seed", g.seed},
                            {"H", sets},
                            {"attempts", attempts},
                            {"e", rep.e},
                            {"E", tuple_json(rep.E)},
                            {"Y", tuple_json(rep.Y)},
                            {"h1", rep.h1_full},
                            {"h1_restricted", rep.h1_restricted},
                            {"equal", rep.equal}}
                           .dump()
                    << "\n";
            else
                out << "h1=" << rep.h1_full << " h1(R)=" << rep.h1_restricted << " e=" << rep.e
                    << " " << (rep.equal ? "equal" : "different") << "\n";
            return rep.equal ? 0 : 1;
        };
    });

    LedgerInputs li;
    std::string Htext, Etext, Itext, Ktext, Jtext;
    auto* dims = app.add_subcommand("dims", "Relative dimensions of the flag parameter spaces");
    dims->add_option("--n", li.n)->required();
    dims->add_option("--r", li.r)->required();
    dims->add_option("--m", li.m)->required();
    dims->add_option("--H", Htext, "Subsets of [n - r + m]")->required();
    dims->add_option("--E", Etext, "Subsets of [m]")->required();
    dims->add_option("--I", Itext, "Subsets of [n]")->required();
    dims->add_option("--K", Ktext, "Subsets of [r]")->required();
    dims->add_option("--J", Jtext, "Subsets of [r], each inside K^p")->required();
    dims->callback([&] {
        action = [&] {
            li.H = parse_index_tuple(Htext, li.n - li.r + li.m);
            li.E = parse_index_tuple(Etext, li.m);
            li.I = parse_index_tuple(Itext, li.n);
            li.K = parse_index_tuple(Ktext, li.r);
            li.J = parse_index_tuple(Jtext, li.r);
            const auto d = dim_ledger(li);
            if (g.json)
                out << json{{"schema", 1},
                            {"universal_intersection", d.universal_intersection},
                            {"universal_hom", d.universal_hom},
                            {"triple_space", d.triple_space},
                            {"paired_intersection", d.paired_intersection},
                            {"paired_hom", d.paired_hom},
                            {"L", tuple_json(d.L)},
                            {"N", tuple_json(d.N)}}
                           .dump()
                    << "\n";
            else
                out << d.universal_intersection << " " << d.universal_hom << " "
                    << d.triple_space << " " << d.paired_intersection << " " << d.paired_hom
                    << "\n";
            return 0;
        };
    });

    int s = 3;
    auto* vktt = app.add_subcommand("verify-ktt", "Stretching check over a codimension corpus");
    vktt->add_option("--r", r)->required();
    vktt->add_option("--n", n)->required();
    vktt->add_option("--s", s)->check(CLI::Range(3, 8));
    vktt->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    vktt->callback([&] { action = [&] { return emit_report(ktt_scan(r, n, s, max_n), g, out); }; });

    int r_max = 3, n_max = 7, random_count = 0;
    auto* vhorn = app.add_subcommand("verify-horn", "Horn decision against the product oracle");
    vhorn->add_option("--r-max", r_max)->check(CLI::PositiveNumber);
    vhorn->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
    vhorn->add_option("--s", s)->check(CLI::Range(3, 8));
    vhorn->add_option("--random", random_count, "Seeded random problems instead of a full scan")
        ->check(CLI::NonNegativeNumber);
    vhorn->callback([&] {
        action = [&] {
            const auto report = random_count > 0
                                    ? horn_random_scan(random_count, r_max, n_max, s, g.seed)
                                    : horn_vs_oracle_scan(r_max, n_max, s);
            return emit_report(report, g, out);
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::unique_ptr<CoefficientCache> cache;
        if (!g.cache.empty())
            cache = std::make_unique<CoefficientCache>(g.cache, lr_memo());
        return action();
    } catch (const InvalidInput& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace schubkit
