#pragma once

// Parabolic slopes of subspaces against weighted flags, and the
// semistability test for a generic tuple of flags.

#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "schubkit/lr_engine.hpp"
#include "schubkit/partitions.hpp"

namespace schubkit {

using Rational = boost::rational<Count>;

/// s nonincreasing weight sequences of length m, one per flag.
class ParabolicWeights {
public:
    ParabolicWeights(int m, std::vector<std::vector<Rational>> weights);

    /// Weights lambda(I^p) of a Schubert problem, as integers.
    static ParabolicWeights from_problem(const SchubertProblem& P);
    static ParabolicWeights from_partitions(int m, std::span<const Partition> lambdas);

    int m() const { return m_; }
    int s() const { return static_cast<int>(weights_.size()); }
    /// 1-based: weight(p, a) = lambda^p_a.
    const Rational& weight(int p, int a) const { return weights_.at(p - 1).at(a - 1); }
    const std::vector<std::vector<Rational>>& sequences() const { return weights_; }

    ParabolicWeights shifted(const Rational& c) const;
    ParabolicWeights scaled(const Rational& c) const;

private:
    int m_;
    std::vector<std::vector<Rational>> weights_;
};

/// (1/e) sum_p sum_{a in E^p} lambda^p_a; e = 0 throws.
Rational slope(std::span<const IndexSet> E, const ParabolicWeights& W);

/// Slope of the whole space.
Rational total_slope(const ParabolicWeights& W);

struct SemistabilityResult {
    bool semistable = true;
    /// A position whose slope exceeds the total slope, if any.
    IndexTuple witness;
    Rational witness_slope;
};

/// Semistability for a general tuple of flags: every position E in
/// Gr(e, m), 1 <= e < m, whose Schubert product is nonzero must have
/// slope at most the total slope. Positions are scanned by e ascending,
/// lexicographically within each e; the first offender is the witness.
SemistabilityResult check_generic_semistable(const ParabolicWeights& W);
bool generic_semistable(const ParabolicWeights& W);

/// Parses "1,0:1,0:1/2,0"; every sequence must have the same length.
ParabolicWeights parse_weights(std::string_view text);

}  // namespace schubkit
