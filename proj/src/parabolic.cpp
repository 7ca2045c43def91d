#include "schubkit/parabolic.hpp"

#include <charconv>

#include "schubkit/horn.hpp"

namespace schubkit {

ParabolicWeights::ParabolicWeights(int m, std::vector<std::vector<Rational>> weights)
    : m_(m), weights_(std::move(weights)) {
    if (m < 1)
        throw InvalidInput("ParabolicWeights: need m >= 1");
    if (weights_.empty())
        throw InvalidInput("ParabolicWeights: need at least one weight sequence");
    for (const auto& seq : weights_) {
        if (static_cast<int>(seq.size()) != m)
            throw InvalidInput("ParabolicWeights: every sequence must have length m");
        for (std::size_t a = 1; a < seq.size(); ++a)
            if (seq[a] > seq[a - 1])
                throw InvalidInput("ParabolicWeights: sequences must be nonincreasing");
    }
}

ParabolicWeights ParabolicWeights::from_partitions(int m, std::span<const Partition> lambdas) {
    std::vector<std::vector<Rational>> w;
    for (const auto& lam : lambdas) {
        if (lam.length() > m)
            throw InvalidInput("ParabolicWeights: partition has more than m rows");
        std::vector<Rational> seq;
        for (int a = 1; a <= m; ++a)
            seq.emplace_back(lam.row(a));
        w.push_back(std::move(seq));
    }
    return ParabolicWeights(m, std::move(w));
}

ParabolicWeights ParabolicWeights::from_problem(const SchubertProblem& P) {
    const auto parts = P.partitions();
    return from_partitions(P.r(), parts);
}

ParabolicWeights ParabolicWeights::shifted(const Rational& c) const {
    auto w = weights_;
    for (auto& seq : w)
        for (auto& x : seq)
            x += c;
    return ParabolicWeights(m_, std::move(w));
}

ParabolicWeights ParabolicWeights::scaled(const Rational& c) const {
    if (c <= Rational(0))
        throw InvalidInput("ParabolicWeights::scaled: factor must be positive");
    auto w = weights_;
    for (auto& seq : w)
        for (auto& x : seq)
            x *= c;
    return ParabolicWeights(m_, std::move(w));
}

Rational slope(std::span<const IndexSet> E, const ParabolicWeights& W) {
    if (static_cast<int>(E.size()) != W.s())
        throw InvalidInput("slope: need one index set per weight sequence");
    const int e = E.front().size();
    if (e == 0)
        throw InvalidInput("slope: undefined for the zero subspace");
    Rational total = 0;
    for (int p = 1; p <= W.s(); ++p) {
        const auto& Ep = E[static_cast<std::size_t>(p - 1)];
        if (Ep.size() != e || Ep.ambient() != W.m())
            throw InvalidInput("slope: every E^p must be an e-subset of [m]");
        for (int a : Ep.elements())
            total += W.weight(p, a);
    }
    return total / Rational(e);
}

Rational total_slope(const ParabolicWeights& W) {
    const IndexTuple full(static_cast<std::size_t>(W.s()), IndexSet::initial(W.m(), W.m()));
    return slope(full, W);
}

SemistabilityResult check_generic_semistable(const ParabolicWeights& W) {
    SemistabilityResult out;
    const Rational mu = total_slope(W);
    // With fewer than three flags the product test lives in a problem with
    // s >= 3; pad with unconstrained factors of weight zero.
    const int s = std::max(W.s(), 3);
    for (int e = 1; e < W.m(); ++e) {
        for (const auto& E : enumerate_essential_positions(W.m(), e, s)) {
            bool padded_ok = true;
            for (int p = W.s(); p < s; ++p)
                if (E[p] != IndexSet::final(e, W.m()))
                    padded_ok = false;
            if (!padded_ok)
                continue;
            const std::span<const IndexSet> head(E.data(), static_cast<std::size_t>(W.s()));
            const Rational value = slope(head, W);
            if (value > mu) {
                out.semistable = false;
                out.witness.assign(head.begin(), head.end());
                out.witness_slope = value;
                return out;
            }
        }
    }
    return out;
}

bool generic_semistable(const ParabolicWeights& W) {
    return check_generic_semistable(W).semistable;
}

namespace {

Rational parse_rational(std::string_view token) {
    auto parse_int = [&](std::string_view t) {
        Count v = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
            throw InvalidInput("invalid weight '" + std::string(token) + "'");
        return v;
    };
    const auto slash = token.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(token));
    const Count den = parse_int(token.substr(slash + 1));
    if (den == 0)
        throw InvalidInput("invalid weight '" + std::string(token) + "'");
    return Rational(parse_int(token.substr(0, slash)), den);
}

}  // namespace

ParabolicWeights parse_weights(std::string_view text) {
    std::vector<std::vector<Rational>> w;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        const auto part = text.substr(start, colon == std::string_view::npos ? colon : colon - start);
        std::vector<Rational> seq;
        std::size_t s0 = 0;
        while (true) {
            const auto comma = part.find(',', s0);
            seq.push_back(parse_rational(
                part.substr(s0, comma == std::string_view::npos ? comma : comma - s0)));
            if (comma == std::string_view::npos)
                break;
            s0 = comma + 1;
        }
        w.push_back(std::move(seq));
        if (colon == std::string_view::npos)
            break;
        start = colon + 1;
    }
    const int m = static_cast<int>(w.front().size());
    return ParabolicWeights(m, std::move(w));
}

}  // namespace schubkit
