#pragma once

// Young diagrams, index sets and Schubert problems.
//
// Index sets are 1-based throughout: an index set in [n] is a strictly
// increasing sequence 1 <= I(1) < ... < I(k) <= n. The conversion to a
// Young diagram inside the r x (n-r) box is lambda_a = n - r + a - I(a).

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schubkit {

/// Raised for any argument violating an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by factor_index when J is not contained in K.
class NotASubset : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> rows);
    Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

    /// All-zero partition with `length` rows.
    static Partition zero(int length) { return Partition(std::vector<int>(length, 0)); }
    /// The rectangle with `height` rows of `width` boxes.
    static Partition rectangle(int height, int width) {
        return Partition(std::vector<int>(height, width));
    }

    /// 1-based row access; rows past the stored length read as zero.
    int row(int a) const {
        return a >= 1 && a <= static_cast<int>(rows_.size()) ? rows_[a - 1] : 0;
    }
    std::span<const int> rows() const { return rows_; }
    int stored_length() const { return static_cast<int>(rows_.size()); }
    /// Number of nonzero rows.
    int length() const;
    std::int64_t weight() const;
    bool empty() const { return length() == 0; }

    bool fits_box(int height, int width) const;
    bool contains(const Partition& other) const;

    Partition trimmed() const;
    /// Pads with zeros (or drops zero rows) to exactly `r` rows.
    Partition padded(int r) const;
    Partition scaled(int factor) const;
    /// Subtracts row r from every one of the first r rows.
    Partition sl_normalized(int r) const;
    Partition conjugate() const;

    friend bool operator==(const Partition& a, const Partition& b);
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> rows_;
};

class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::vector<int> elements, int ambient);

    /// (1, 2, ..., k) in [n].
    static IndexSet initial(int k, int n);
    /// (n-k+1, ..., n) in [n].
    static IndexSet final(int k, int n);

    /// 1-based access: I(a).
    int operator()(int a) const { return elements_.at(static_cast<std::size_t>(a - 1)); }
    std::span<const int> elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    int ambient() const { return ambient_; }
    bool contains(int x) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<int> elements_;
    int ambient_ = 0;
};

using IndexTuple = std::vector<IndexSet>;

/// An s-tuple (s >= 3) of index sets of cardinality r in [n].
class SchubertProblem {
public:
    SchubertProblem(int n, int r, IndexTuple sets);

    int n() const { return n_; }
    int r() const { return r_; }
    int s() const { return static_cast<int>(sets_.size()); }
    int level() const { return n_ - r_; }
    const IndexTuple& sets() const { return sets_; }
    const IndexSet& set(int p) const { return sets_.at(static_cast<std::size_t>(p - 1)); }

    /// lambda(I^p) for every factor, padded to r rows.
    std::vector<Partition> partitions() const;
    std::int64_t total_codimension() const;

    friend bool operator==(const SchubertProblem&, const SchubertProblem&) = default;
    friend auto operator<=>(const SchubertProblem&, const SchubertProblem&) = default;

private:
    int n_;
    int r_;
    IndexTuple sets_;
};

Partition partition_from_index_set(const IndexSet& I, int n, int r);
IndexSet index_set_from_partition(const Partition& lambda, int n, int r);

/// nu^v with (nu^v)_a = width - nu_{r-a+1}.
Partition dual_partition(const Partition& nu, int r, int width);

/// J_a = K_{N_a}; N must live in [|K|].
IndexSet compose_index(const IndexSet& K, const IndexSet& N);
/// Inverse of compose_index: the N with K_{N_a} = J_a.
IndexSet factor_index(const IndexSet& K, const IndexSet& J);
/// Y_a = H_{E_a} - E_a + a, an index set in [n - r + |E|] where n - r is
/// the level of H (ambient minus cardinality).
IndexSet kernel_position_shift(const IndexSet& H, const IndexSet& E);

/// |lambda(I)| for I of cardinality k in [n].
std::int64_t codimension(const IndexSet& I);

bool codim_condition_holds(const SchubertProblem& P);

/// Every k-subset of [n] in lexicographic order.
std::vector<IndexSet> all_index_sets(int k, int n);
/// Every partition inside the height x width box, in lexicographic order of
/// the padded row vectors.
std::vector<Partition> partitions_in_box(int height, int width);

// Text encoding: comma-separated entries without spaces ("3,2,1"); tuples
// joined by ':' ("2,4:2,4:2,4"). The zero partition is written "0".
std::string format_partition(const Partition& lambda);
std::string format_index_set(const IndexSet& I);
std::string format_partition_tuple(std::span<const Partition> tuple);
std::string format_index_tuple(std::span<const IndexSet> tuple);

/// Parses a comma-separated list of integers; throws InvalidInput naming
/// the offending token.
std::vector<int> parse_int_list(std::string_view text);
Partition parse_partition(std::string_view text);
IndexSet parse_index_set(std::string_view text, int ambient);
std::vector<Partition> parse_partition_tuple(std::string_view text);
IndexTuple parse_index_tuple(std::string_view text, int ambient);

}  // namespace schubkit
