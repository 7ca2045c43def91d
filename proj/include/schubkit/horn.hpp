#pragma once

// Recursive Horn decision procedure for nonvanishing of Schubert products,
// plus the dimension bookkeeping used alongside it.
//
// A product omega_I of Schubert classes on Gr(r, n) is nonzero iff for every
// 0 < f <= r and every K in binom([r], f)^s with omega_K nonzero on Gr(f, r)
//
//     sum_p sum_{a<=f} (n - r + K^p_a - I^p_{K^p_a}) - f (n - r) <= 0.
//
// The recursion bottoms out on projective space, where omega_I is nonzero
// iff the total codimension is at most n - 1.

#include <optional>
#include <span>
#include <vector>

#include "schubkit/lr_engine.hpp"
#include "schubkit/partitions.hpp"

namespace schubkit {

struct HornInequality {
    IndexTuple K;
    Count lhs_value = 0;

    int f() const { return K.empty() ? 0 : K.front().size(); }
    bool holds() const { return lhs_value <= 0; }
};

/// Left side of the inequality indexed by K; it "holds" when <= 0.
Count horn_inequality_value(const SchubertProblem& P, std::span<const IndexSet> K);

struct HornDecision {
    bool nonzero = true;
    /// First failing inequality, scanning f = 1..r and K in lexicographic
    /// order within each f.
    std::optional<HornInequality> violated;
};

HornDecision horn_decide(const SchubertProblem& P);

/// Memoized on (n, r, multiset of index sets).
bool horn_nonzero(const SchubertProblem& P);

/// Every K in binom([r], f)^s with omega_K nonzero on Gr(f, r), in
/// lexicographic order (first factor most significant).
const std::vector<IndexTuple>& enumerate_essential_positions(int r, int f, int s);

/// m q - sum_p |lambda(H^p)|; may be negative. H^p has cardinality m in [q + m].
Count expected_hom_dim(std::span<const IndexSet> H, int m, int q);

/// dim Fl(k^d) = d (d - 1) / 2.
constexpr Count flag_variety_dim(int d) { return static_cast<Count>(d) * (d - 1) / 2; }

/// dim of the space of triples (S, S', T) with dim S = dim S' = f inside
/// k^r and S cap S' = T of dimension g: 2 (f - g)(r - f) + g (r - g).
/// Accepts 0 <= g <= f <= r.
Count triple_space_dim(int r, int f, int g);

/// Number of such triples over the field with q elements, as a polynomial
/// in q (coefficient list, constant term first). Zero when 2f - g > r.
std::vector<Count> triple_count_polynomial(int r, int f, int g);

/// Gaussian binomial [n choose k]_q as a coefficient list.
std::vector<Count> gaussian_binomial(int n, int k);

Count evaluate_polynomial(std::span<const Count> coeffs, Count q);

struct LedgerInputs {
    int n = 0;
    int r = 0;
    /// dim M; H^p in binom([n - r + m], m), E^p in binom([m], e).
    int m = 0;
    IndexTuple H;
    IndexTuple E;
    /// I^p in binom([n], r), K^p in binom([r], f), J^p a g-subset of K^p.
    IndexTuple I;
    IndexTuple K;
    IndexTuple J;
};

/// Relative dimensions of the parameter spaces built over flags: universal
/// intersections, universal Hom spaces, subspace triples and their paired
/// versions.
struct DimensionLedger {
    int s = 0;
    int m = 0, e = 0, f = 0, g = 0, r = 0, n = 0;
    /// L^p_a = I^p_{K^p_a} and J^p_a = K^p_{N^p_a}.
    IndexTuple L;
    IndexTuple N;

    /// (R, F) pairs over Gr(e, M).
    Count universal_intersection = 0;
    /// (G, phi) with ker phi = R over the universal intersection.
    Count universal_hom = 0;
    /// (S, S', T) triples.
    Count triple_space = 0;
    /// Flags with S, S' in position K and T in position J, over the triples.
    Count paired_intersection = 0;
    /// (G, G', phi, phi') over the paired intersection.
    Count paired_hom = 0;
};

/// Requires 0 <= g < f < r and consistent tuple lengths.
DimensionLedger dim_ledger(const LedgerInputs& in);

/// For L in binom([rho], k): checks that sum_{t<rho} c_t (c_t = #{a : L_a <= t}),
/// k rho - sum L_a and |lambda(L)| + dim Fl(k^k) all agree.
bool filtration_codim_identity(int rho, const IndexSet& L);

}  // namespace schubkit
