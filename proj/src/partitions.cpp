#include "schubkit/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <numeric>

namespace schubkit {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t a = 0; a < rows_.size(); ++a) {
        if (rows_[a] < 0)
            throw InvalidInput("partition has a negative row");
        if (a + 1 < rows_.size() && rows_[a] < rows_[a + 1])
            throw InvalidInput("partition rows must be weakly decreasing");
    }
}

int Partition::length() const {
    int len = static_cast<int>(rows_.size());
    while (len > 0 && rows_[len - 1] == 0)
        --len;
    return len;
}

std::int64_t Partition::weight() const {
    return std::accumulate(rows_.begin(), rows_.end(), std::int64_t{0});
}

bool Partition::fits_box(int height, int width) const {
    return length() <= height && row(1) <= width;
}

bool Partition::contains(const Partition& other) const {
    for (int a = 1; a <= other.length(); ++a)
        if (other.row(a) > row(a))
            return false;
    return true;
}

Partition Partition::trimmed() const {
    Partition out;
    out.rows_.assign(rows_.begin(), rows_.begin() + length());
    return out;
}

Partition Partition::padded(int r) const {
    if (length() > r)
        throw InvalidInput("partition has more than " + std::to_string(r) + " nonzero rows");
    Partition out;
    out.rows_.resize(static_cast<std::size_t>(r), 0);
    for (int a = 1; a <= r; ++a)
        out.rows_[a - 1] = row(a);
    return out;
}

Partition Partition::scaled(int factor) const {
    if (factor < 0)
        throw InvalidInput("negative stretch factor");
    Partition out = *this;
    for (auto& x : out.rows_)
        x *= factor;
    return out;
}

Partition Partition::sl_normalized(int r) const {
    Partition out = padded(r);
    const int last = r > 0 ? out.rows_.back() : 0;
    for (auto& x : out.rows_)
        x -= last;
    return out;
}

Partition Partition::conjugate() const {
    Partition out;
    out.rows_.resize(static_cast<std::size_t>(row(1)), 0);
    for (int a = 1; a <= length(); ++a)
        for (int b = 0; b < row(a); ++b)
            ++out.rows_[b];
    return out;
}

bool operator==(const Partition& a, const Partition& b) {
    const int len = a.length();
    if (len != b.length())
        return false;
    return std::equal(a.rows_.begin(), a.rows_.begin() + len, b.rows_.begin());
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    const auto ta = a.rows_.begin(), tb = b.rows_.begin();
    return std::lexicographical_compare_three_way(ta, ta + a.length(), tb, tb + b.length());
}

IndexSet::IndexSet(std::vector<int> elements, int ambient)
    : elements_(std::move(elements)), ambient_(ambient) {
    if (ambient_ < 0)
        throw InvalidInput("index set ambient must be nonnegative");
    for (std::size_t a = 0; a < elements_.size(); ++a) {
        if (elements_[a] < 1 || elements_[a] > ambient_)
            throw InvalidInput("index set element " + std::to_string(elements_[a]) +
                               " outside [" + std::to_string(ambient_) + "]");
        if (a > 0 && elements_[a - 1] >= elements_[a])
            throw InvalidInput("index set must be strictly increasing");
    }
}

IndexSet IndexSet::initial(int k, int n) {
    std::vector<int> e(static_cast<std::size_t>(k));
    std::iota(e.begin(), e.end(), 1);
    return IndexSet(std::move(e), n);
}

IndexSet IndexSet::final(int k, int n) {
    std::vector<int> e(static_cast<std::size_t>(k));
    std::iota(e.begin(), e.end(), n - k + 1);
    return IndexSet(std::move(e), n);
}

bool IndexSet::contains(int x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

SchubertProblem::SchubertProblem(int n, int r, IndexTuple sets)
    : n_(n), r_(r), sets_(std::move(sets)) {
    if (r_ < 0 || n_ < r_)
        throw InvalidInput("Schubert problem needs 0 <= r <= n");
    if (sets_.size() < 3)
        throw InvalidInput("Schubert problem needs at least 3 index sets");
    for (const auto& I : sets_)
        if (I.size() != r_ || I.ambient() != n_)
            throw InvalidInput("every index set must have cardinality r in [n]");
}

std::vector<Partition> SchubertProblem::partitions() const {
    std::vector<Partition> out;
    out.reserve(sets_.size());
    for (const auto& I : sets_)
        out.push_back(partition_from_index_set(I, n_, r_));
    return out;
}

std::int64_t SchubertProblem::total_codimension() const {
    std::int64_t total = 0;
    for (const auto& I : sets_)
        total += codimension(I);
    return total;
}

Partition partition_from_index_set(const IndexSet& I, int n, int r) {
    if (I.size() != r || I.ambient() != n)
        throw InvalidInput("index set does not have cardinality " + std::to_string(r) +
                           " in [" + std::to_string(n) + "]");
    std::vector<int> rows(static_cast<std::size_t>(r));
    for (int a = 1; a <= r; ++a)
        rows[a - 1] = n - r + a - I(a);
    return Partition(std::move(rows));
}

IndexSet index_set_from_partition(const Partition& lambda, int n, int r) {
    if (r < 0 || n < r || !lambda.fits_box(r, n - r))
        throw InvalidInput("partition " + format_partition(lambda) + " exceeds the " +
                           std::to_string(r) + "x" + std::to_string(n - r) + " box");
    std::vector<int> e(static_cast<std::size_t>(r));
    for (int a = 1; a <= r; ++a)
        e[a - 1] = n - r + a - lambda.row(a);
    return IndexSet(std::move(e), n);
}

Partition dual_partition(const Partition& nu, int r, int width) {
    if (!nu.fits_box(r, width))
        throw InvalidInput("partition " + format_partition(nu) + " exceeds the " +
                           std::to_string(r) + "x" + std::to_string(width) + " box");
    std::vector<int> rows(static_cast<std::size_t>(r));
    for (int a = 1; a <= r; ++a)
        rows[a - 1] = width - nu.row(r - a + 1);
    return Partition(std::move(rows));
}

IndexSet compose_index(const IndexSet& K, const IndexSet& N) {
    if (N.ambient() != K.size())
        throw InvalidInput("compose_index: inner set must live in [|K|]");
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(N.size()));
    for (int x : N.elements())
        e.push_back(K(x));
    return IndexSet(std::move(e), K.ambient());
}

IndexSet factor_index(const IndexSet& K, const IndexSet& J) {
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(J.size()));
    const auto ks = K.elements();
    for (int x : J.elements()) {
        const auto it = std::lower_bound(ks.begin(), ks.end(), x);
        if (it == ks.end() || *it != x)
            throw NotASubset("element " + std::to_string(x) + " of " + format_index_set(J) +
                             " is not in " + format_index_set(K));
        e.push_back(static_cast<int>(it - ks.begin()) + 1);
    }
    return IndexSet(std::move(e), K.size());
}

IndexSet kernel_position_shift(const IndexSet& H, const IndexSet& E) {
    if (E.ambient() != H.size())
        throw InvalidInput("kernel_position_shift: E must live in [|H|]");
    const int level = H.ambient() - H.size();
    std::vector<int> e(static_cast<std::size_t>(E.size()));
    for (int a = 1; a <= E.size(); ++a)
        e[a - 1] = H(E(a)) - E(a) + a;
    return IndexSet(std::move(e), level + E.size());
}

std::int64_t codimension(const IndexSet& I) {
    const int k = I.size();
    const int level = I.ambient() - k;
    std::int64_t total = 0;
    for (int a = 1; a <= k; ++a)
        total += level + a - I(a);
    return total;
}

bool codim_condition_holds(const SchubertProblem& P) {
    return P.total_codimension() == static_cast<std::int64_t>(P.r()) * P.level();
}

std::vector<IndexSet> all_index_sets(int k, int n) {
    std::vector<IndexSet> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.emplace_back(cur, n);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<Partition> partitions_in_box(int height, int width) {
    std::vector<Partition> out;
    std::vector<int> rows(static_cast<std::size_t>(height), 0);
    // Recursive fill, each row bounded by the previous one.
    auto rec = [&](auto&& self, int a, int bound) -> void {
        if (a == height) {
            out.emplace_back(rows);
            return;
        }
        for (int x = 0; x <= bound; ++x) {
            rows[a] = x;
            self(self, a + 1, x);
        }
    };
    if (height >= 0 && width >= 0)
        rec(rec, 0, width);
    return out;
}

namespace {

template <typename T, typename F>
std::string join(std::span<const T> items, char sep, F&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += sep;
        out += fmt(items[i]);
    }
    return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

std::string format_partition(const Partition& lambda) {
    const auto t = lambda.trimmed();
    if (t.empty())
        return "0";
    return join(t.rows(), ',', [](int x) { return std::to_string(x); });
}

std::string format_index_set(const IndexSet& I) {
    return join(I.elements(), ',', [](int x) { return std::to_string(x); });
}

std::string format_partition_tuple(std::span<const Partition> tuple) {
    return join(tuple, ':', [](const Partition& p) { return format_partition(p); });
}

std::string format_index_tuple(std::span<const IndexSet> tuple) {
    return join(tuple, ':', [](const IndexSet& I) { return format_index_set(I); });
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    if (text.empty())
        return out;
    for (auto tok : split(text, ',')) {
        int value = 0;
        const auto* end = tok.data() + tok.size();
        const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
        if (tok.empty() || ec != std::errc{} || ptr != end)
            throw InvalidInput("malformed integer token '" + std::string(tok) + "' in '" +
                               std::string(text) + "'");
        out.push_back(value);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    try {
        return Partition(parse_int_list(text));
    } catch (const InvalidInput& e) {
        throw InvalidInput("bad partition '" + std::string(text) + "': " + e.what());
    }
}

IndexSet parse_index_set(std::string_view text, int ambient) {
    try {
        return IndexSet(parse_int_list(text), ambient);
    } catch (const InvalidInput& e) {
        throw InvalidInput("bad index set '" + std::string(text) + "': " + e.what());
    }
}

std::vector<Partition> parse_partition_tuple(std::string_view text) {
    std::vector<Partition> out;
    for (auto part : split(text, ':'))
        out.push_back(parse_partition(part));
    return out;
}

IndexTuple parse_index_tuple(std::string_view text, int ambient) {
    IndexTuple out;
    for (auto part : split(text, ':'))
        out.push_back(parse_index_set(part, ambient));
    return out;
}

}  // namespace schubkit
