#pragma once

// Littlewood-Richardson coefficients and Schubert calculus on Gr(r, n).
//
// This is the brute-force layer: every number here is produced by counting
// Littlewood-Richardson tableaux, with no structural shortcuts, so that the
// Horn recursion and the linear-algebra experiments have an oracle to be
// checked against.

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <tuple>
#include <vector>

#include <boost/rational.hpp>

#include "schubkit/partitions.hpp"

namespace schubkit {

using Count = std::int64_t;

/// Addition and multiplication that throw std::overflow_error instead of
/// wrapping.
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

/// c^nu_{lambda mu}: the number of LR skew tableaux of shape nu/lambda and
/// content mu. Zero whenever |lambda| + |mu| != |nu| or lambda is not
/// contained in nu. Results are memoized in lr_memo().
Count lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Same count without touching the memo table.
Count count_lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu);

using LrKey = std::tuple<Partition, Partition, Partition>;

/// Write-once table of computed coefficients. Concurrent inserts of the same
/// key are fine as long as they agree; a disagreeing insert throws
/// std::logic_error.
class LrMemo {
public:
    using Sink = std::function<void(const LrKey&, Count)>;

    std::optional<Count> find(const LrKey& key) const;
    /// Returns true if the key was new.
    bool insert(const LrKey& key, Count value);
    /// Called once for every newly inserted key (used by the disk cache).
    void set_sink(Sink sink);
    std::size_t size() const;
    void clear();

private:
    mutable std::shared_mutex mutex_;
    std::map<LrKey, Count> table_;
    Sink sink_;
};

LrMemo& lr_memo();

/// An element of H*(Gr(r, r + width)) in the Schubert basis.
class SchubertClassExpansion {
public:
    SchubertClassExpansion(int r, int width);

    static SchubertClassExpansion unit(int r, int width);
    static SchubertClassExpansion basis(int r, int width, const Partition& lambda);

    int r() const { return r_; }
    int width() const { return width_; }
    const std::map<Partition, Count>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Count coefficient(const Partition& lambda) const;
    /// Adds `coeff` times sigma_lambda; lambda must fit the box, zero
    /// coefficients are never stored.
    void add(const Partition& lambda, Count coeff);

    friend bool operator==(const SchubertClassExpansion&, const SchubertClassExpansion&) = default;

private:
    int r_;
    int width_;
    std::map<Partition, Count> terms_;
};

/// Cup product, truncated to the r x width box.
SchubertClassExpansion schubert_multiply(const SchubertClassExpansion& A,
                                         const SchubertClassExpansion& B);

/// Product of sigma_{lambda(I^p)} over all factors.
SchubertClassExpansion schubert_product(const SchubertProblem& P);

/// Coefficient of the point class in the product; requires the codimension
/// condition.
Count intersection_number(const SchubertProblem& P);

/// Whether the product of the classes is nonzero. Coefficients are
/// nonnegative, so no cancellation can hide a term.
bool product_nonzero_oracle(const SchubertProblem& P);

/// dim (V_{lambda^1} x ... x V_{lambda^s})^{SL_r}, through the embedding of
/// the normalized weights as a Schubert problem in Gr(r, r + q).
Count invariant_dimension(std::span<const Partition> lambdas, int r);

/// The Schubert problem (I_lambda, I_mu, I_{nu^v}) in Gr(r, n) with
/// n = r + max(lambda_1, mu_1, nu_1).
SchubertProblem embed_as_codim_problem(const Partition& lambda, const Partition& mu,
                                       const Partition& nu, int r);

struct StretchReport {
    /// values[k] is P(k + 1).
    std::vector<Count> values;
    /// Newton coefficients: differences[k] is the k-th forward difference at 1.
    std::vector<Count> differences;
    /// Largest k with differences[k] != 0, or -1 for the zero sequence.
    int degree = -1;

    /// Interpolating polynomial sum_k differences[k] * binom(N - 1, k).
    Count evaluate(int N) const;
    /// Coefficients of the same polynomial in the monomial basis 1, N, N^2...
    std::vector<boost::rational<Count>> monomial_coefficients() const;
};

StretchReport fit_stretch_values(std::vector<Count> values);

/// P(N) = invariant_dimension(N lambda^1, ..., N lambda^s) for N = 1..n_max.
StretchReport stretch_sequence(std::span<const Partition> lambdas, int r, int n_max);

}  // namespace schubkit
