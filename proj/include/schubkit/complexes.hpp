#pragma once

// Two-step complexes Hom(M, Q) -> sum_p Hom(M, Q) / P_theta^p, their
// cohomology, constrained Hom spaces and the experiments built on them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "schubkit/flags.hpp"
#include "schubkit/horn.hpp"

namespace schubkit {

/// theta^p: nondecreasing, length m, entries in [0, q].
struct StepProfile {
    int m = 0;
    int q = 0;
    std::vector<std::vector<int>> theta;

    StepProfile(int m, int q, std::vector<std::vector<int>> theta);
    int s() const { return static_cast<int>(theta.size()); }
};

/// theta^p_a = H^p_a - a, with m = |H^p| and q = ambient - m.
StepProfile theta_from_index(std::span<const IndexSet> H);

/// dim P_theta = sum_a theta_a.
Count p_theta_dim(std::span<const int> theta);

struct TwoStepReport {
    Count h0 = 0;
    Count h1 = 0;
    Count chi = 0;
    Count rank = 0;
};

/// Builds gamma with one row per constraint functional
/// phi -> (G^p)^{-1} phi F^p_a, coordinate i > theta^p_a, and eliminates.
/// F are flags on k^m, G flags on k^q. Asserts (throws std::logic_error)
/// that h0 - h1 equals mq - sum_p sum_a (q - theta^p_a).
TwoStepReport two_step_report(const FlagTuple& F, const FlagTuple& G, const StepProfile& theta);

/// The constraint matrix gamma itself; variable phi[j][k] sits in column j m + k.
PrimeMatrix two_step_matrix(const FlagTuple& F, const FlagTuple& G, const StepProfile& theta);

/// Basis of Hom_H(M, Q, F, G) as q x m matrices.
std::vector<PrimeMatrix> hom_space_basis(const FlagTuple& F, const FlagTuple& G,
                                         std::span<const IndexSet> H);

Count hom_space_dim(const FlagTuple& F, const FlagTuple& G, std::span<const IndexSet> H);

struct HomData {
    Count D = 0;
    int e = 0;
    IndexTuple E;
    /// Kernel of the sampled general element (m x e).
    std::optional<PrimeMatrix> kernel;
};

/// D = dim Hom_H; e and E are read off the max-rank element among `trials`
/// random combinations of the basis.
HomData hom_data(const FlagTuple& F, const FlagTuple& G, std::span<const IndexSet> H,
                 int trials, std::uint64_t seed);

/// Two Hom data over the same F with independent G, and the position of
/// the intersection of both generic kernels. Diagnostic only.
struct HomPrimeData {
    HomData first;
    HomData second;
    int t = 0;
    IndexTuple T;
};

HomPrimeData hom_prime_data(const FlagTuple& F, const FlagTuple& G1, const FlagTuple& G2,
                            std::span<const IndexSet> H, int trials, std::uint64_t seed);

/// Whether Hom_I(V, Q, F, G) is nonzero.
bool theta_section_vanishes(const FlagTuple& F, const FlagTuple& G, std::span<const IndexSet> I);

struct Prop11Instance {
    std::uint64_t seed = 0;
    int attempts = 0;
    Count sampled = 0;
    Count expected = 0;
    bool chi_identity = true;
    bool passed_first = false;
    bool passed = false;
};

struct Prop11Report {
    IndexTuple H;
    int m = 0;
    int q = 0;
    std::uint64_t prime = 0;
    bool horn_nonzero = false;
    Count expected = 0;
    std::vector<Prop11Instance> instances;

    int passed_first() const;
    int passed() const;
    bool chi_identity_everywhere() const;
};

/// Samples (F, G) `n_instances` times and checks the Hom dimension: equal
/// to the expected value when the product is nonzero, different from it
/// (or expected < 0) when the product vanishes. A failing instance is
/// redrawn up to `retries` times with derived seeds.
Prop11Report prop11_check(const PrimeField& k, std::span<const IndexSet> H, int n_instances,
                          std::uint64_t seed, int retries = 3);

struct H1TransferReport {
    Count h1_full = 0;
    Count h1_restricted = 0;
    int e = 0;
    IndexTuple E;
    IndexTuple Y;
    bool kernel_zero = false;
    bool equal = false;
};

/// h1 of (F, G, theta(H)) against h1 of the complex restricted to the
/// kernel R of a general element, with flags F(R) and profile theta(Y),
/// Y = kernel_position_shift(H, E). When R = 0 the restricted h1 is 0.
H1TransferReport h1_transfer_check(const FlagTuple& F, const FlagTuple& G,
                                   std::span<const IndexSet> H, int trials, std::uint64_t seed);

/// Whether sum_p sum_{b<=d} lambda(I^p)_b <= d q for every 1 <= d <= f,
/// where lambda(I^p) lives in the f x q box. This bounds the left side of
/// the subspace inequality for every position X of every d-dimensional
/// subspace, whatever the flags.
bool subspace_inequalities_hold_for_all_positions(std::span<const IndexSet> I);

}  // namespace schubkit
