#pragma once

// Full flags over Z/p, Schubert positions of subspaces, induced flags and
// flags sampled with a prescribed position for a given subspace.

#include <cstdint>
#include <vector>

#include "schubkit/partitions.hpp"
#include "schubkit/prime_field.hpp"

namespace schubkit {

/// Full flag on k^m: step a is spanned by the first a basis columns.
class PrimeFlag {
public:
    explicit PrimeFlag(PrimeMatrix basis);

    static PrimeFlag standard(const PrimeField& F, int m);

    int dim() const { return basis_.rows(); }
    const PrimeField& field() const { return basis_.field(); }
    const PrimeMatrix& basis() const { return basis_; }
    /// F_a as an m x a matrix; 0 <= a <= m.
    PrimeMatrix step(int a) const { return basis_.columns(0, a); }

private:
    PrimeMatrix basis_;
};

using FlagTuple = std::vector<PrimeFlag>;

/// Uniform among invertible matrices; reproducible from (m, p, seed).
PrimeFlag random_flag(const PrimeField& F, int m, std::uint64_t seed);
/// s flags with sub-seeds derive_seed(seed, p).
FlagTuple random_flags(const PrimeField& F, int m, int s, std::uint64_t seed);

/// dim(R cap F_a) for a = 0..m.
std::vector<int> intersection_dims(const PrimeMatrix& R, const PrimeFlag& F);

/// H_b = min{a : dim(R cap F_a) >= b}. R's columns must be independent.
IndexSet subspace_position(const PrimeMatrix& R, const PrimeFlag& F);

/// Basis (as columns) of the intersection of two column spans.
PrimeMatrix intersect_spans(const PrimeMatrix& A, const PrimeMatrix& B);

/// Flag on S, in the coordinates given by the columns of S, whose step b
/// is S cap F_{H_b}.
PrimeFlag induced_flag_on_subspace(const PrimeFlag& F, const PrimeMatrix& S);

/// Model of k^m / S: coordinates outside the pivot rows of S. Maps v to
/// v_C - B_C v_P where B spans S and is the identity on the pivot rows P.
class QuotientModel {
public:
    explicit QuotientModel(const PrimeMatrix& S);

    int dim() const { return static_cast<int>(complement_.size()); }
    PrimeMatrix project(const PrimeMatrix& v) const;

private:
    std::vector<int> pivots_;
    std::vector<int> complement_;
    PrimeMatrix reduced_;  // B restricted to the complement rows
};

/// Flag on k^m / S formed by the images of F_a, repeated steps removed.
PrimeFlag induced_flag_on_quotient(const PrimeFlag& F, const PrimeMatrix& S);

/// s flags on k^f in which T (an f x g basis) has position N^p. Each flag
/// puts T L at the slots N^p and random vectors elsewhere, then applies a
/// random upper triangular change of basis. The position is re-checked;
/// samples that land in a degenerate position are redrawn up to `retries`
/// times before std::runtime_error is thrown.
FlagTuple sample_flag_with_position(const PrimeField& F, int f, const PrimeMatrix& T,
                                    const IndexTuple& N, std::uint64_t seed,
                                    int retries = 3);

/// Columns independent.
bool has_full_column_rank(const PrimeMatrix& A);

}  // namespace schubkit
