#include "schubkit/lr_engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace schubkit {

Count checked_add(Count a, Count b) {
    Count out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in coefficient sum");
    return out;
}

Count checked_mul(Count a, Count b) {
    Count out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in coefficient product");
    return out;
}

// ---------------------------------------------------------------------------
// Tableau enumeration

namespace {

struct Cell {
    int row;  // 0-based
    int col;  // 0-based
};

class LrCounter {
public:
    LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
        : lambda_(lambda), mu_(mu), nu_(nu) {
        const int rows = nu.length();
        grid_.assign(static_cast<std::size_t>(rows),
                     std::vector<int>(static_cast<std::size_t>(nu.row(1)), 0));
        // Reverse reading order: rows top to bottom, each right to left.
        for (int i = 1; i <= rows; ++i)
            for (int j = nu.row(i); j > lambda.row(i); --j)
                cells_.push_back({i - 1, j - 1});
        content_len_ = mu.length();
        used_.assign(static_cast<std::size_t>(content_len_ + 1), 0);
    }

    Count count() { return fill(0); }

private:
    Count fill(std::size_t idx) {
        if (idx == cells_.size())
            return 1;
        const auto [i, j] = cells_[idx];
        // Entries in row i (1-based) of an LR tableau never exceed i.
        int hi = std::min(content_len_, i + 1);
        if (j + 1 < nu_.row(i + 1))
            hi = std::min(hi, grid_[i][j + 1]);
        int lo = 1;
        if (i > 0 && j >= lambda_.row(i))
            lo = grid_[i - 1][j] + 1;
        Count total = 0;
        for (int v = lo; v <= hi; ++v) {
            if (used_[v] >= mu_.row(v))
                continue;
            if (v > 1 && used_[v] >= used_[v - 1])
                continue;
            ++used_[v];
            grid_[i][j] = v;
            total = checked_add(total, fill(idx + 1));
            grid_[i][j] = 0;
            --used_[v];
        }
        return total;
    }

    const Partition& lambda_;
    const Partition& mu_;
    const Partition& nu_;
    std::vector<std::vector<int>> grid_;
    std::vector<Cell> cells_;
    std::vector<int> used_;
    int content_len_ = 0;
};

}  // namespace

Count count_lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() + mu.weight() != nu.weight())
        return 0;
    if (!nu.contains(lambda) || !nu.contains(mu))
        return 0;
    return LrCounter(lambda, mu, nu).count();
}

std::optional<Count> LrMemo::find(const LrKey& key) const {
    std::shared_lock lock(mutex_);
    const auto it = table_.find(key);
    if (it == table_.end())
        return std::nullopt;
    return it->second;
}

bool LrMemo::insert(const LrKey& key, Count value) {
    Sink sink;
    {
        std::unique_lock lock(mutex_);
        const auto [it, fresh] = table_.try_emplace(key, value);
        if (!fresh) {
            if (it->second != value)
                throw std::logic_error("conflicting LR coefficient for " +
                                       format_partition(std::get<0>(key)) + "|" +
                                       format_partition(std::get<1>(key)) + "|" +
                                       format_partition(std::get<2>(key)));
            return false;
        }
        sink = sink_;
    }
    if (sink)
        sink(key, value);
    return true;
}

void LrMemo::set_sink(Sink sink) {
    std::unique_lock lock(mutex_);
    sink_ = std::move(sink);
}

std::size_t LrMemo::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

void LrMemo::clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
}

LrMemo& lr_memo() {
    static LrMemo memo;
    return memo;
}

Count lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() + mu.weight() != nu.weight() || !nu.contains(lambda))
        return 0;
    LrKey key{lambda.trimmed(), mu.trimmed(), nu.trimmed()};
    if (auto hit = lr_memo().find(key))
        return *hit;
    const Count value = count_lr_tableaux(lambda, mu, nu);
    lr_memo().insert(key, value);
    return value;
}

// ---------------------------------------------------------------------------
// Schubert classes

SchubertClassExpansion::SchubertClassExpansion(int r, int width) : r_(r), width_(width) {
    if (r < 0 || width < 0)
        throw InvalidInput("box dimensions must be nonnegative");
}

SchubertClassExpansion SchubertClassExpansion::unit(int r, int width) {
    return basis(r, width, Partition{});
}

SchubertClassExpansion SchubertClassExpansion::basis(int r, int width, const Partition& lambda) {
    SchubertClassExpansion out(r, width);
    out.add(lambda, 1);
    return out;
}

Count SchubertClassExpansion::coefficient(const Partition& lambda) const {
    const auto it = terms_.find(lambda.trimmed());
    return it == terms_.end() ? 0 : it->second;
}

void SchubertClassExpansion::add(const Partition& lambda, Count coeff) {
    if (!lambda.fits_box(r_, width_))
        throw InvalidInput("partition " + format_partition(lambda) + " outside the " +
                           std::to_string(r_) + "x" + std::to_string(width_) + " box");
    if (coeff == 0)
        return;
    auto key = lambda.trimmed();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0)
        terms_.erase(it);
}

namespace {

// Every nu in the box with lambda, mu inside nu and |nu| = |lambda| + |mu|
// that also satisfies Weyl's bounds nu_i <= lambda_i + mu_1 and
// nu_i <= lambda_1 + mu_i. Anything else has a zero coefficient.
std::vector<Partition> product_support_candidates(const Partition& lambda, const Partition& mu,
                                                  int r, int width) {
    std::vector<Partition> out;
    const std::int64_t target = lambda.weight() + mu.weight();
    std::vector<int> rows(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, int i, int bound, std::int64_t remaining) -> void {
        if (i == r) {
            if (remaining == 0)
                out.emplace_back(rows);
            return;
        }
        const int lo = std::max(lambda.row(i + 1), mu.row(i + 1));
        const int hi = std::min({bound, lambda.row(i + 1) + mu.row(1),
                                 lambda.row(1) + mu.row(i + 1),
                                 static_cast<int>(std::min<std::int64_t>(remaining, bound))});
        for (int x = hi; x >= lo; --x) {
            if (static_cast<std::int64_t>(x) * (r - i) < remaining)
                break;
            rows[i] = x;
            self(self, i + 1, x, remaining - x);
        }
        rows[i] = 0;
    };
    if (lambda.fits_box(r, width) && mu.fits_box(r, width))
        rec(rec, 0, width, target);
    return out;
}

using BasisProductKey = std::tuple<int, int, Partition, Partition>;

class BasisProductMemo {
public:
    const std::vector<std::pair<Partition, Count>>& get(int r, int width, const Partition& lambda,
                                                        const Partition& mu) {
        BasisProductKey key{r, width, lambda.trimmed(), mu.trimmed()};
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        std::vector<std::pair<Partition, Count>> terms;
        for (auto& nu : product_support_candidates(lambda, mu, r, width))
            if (Count c = lr_coefficient(lambda, mu, nu))
                terms.emplace_back(nu.trimmed(), c);
        std::unique_lock lock(mutex_);
        return table_.try_emplace(std::move(key), std::move(terms)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<BasisProductKey, std::vector<std::pair<Partition, Count>>> table_;
};

BasisProductMemo& basis_products() {
    static BasisProductMemo memo;
    return memo;
}

SchubertClassExpansion class_of(const SchubertProblem& P, int p) {
    return SchubertClassExpansion::basis(P.r(), P.level(),
                                         partition_from_index_set(P.set(p), P.n(), P.r()));
}

}  // namespace

SchubertClassExpansion schubert_multiply(const SchubertClassExpansion& A,
                                         const SchubertClassExpansion& B) {
    if (A.r() != B.r() || A.width() != B.width())
        throw InvalidInput("schubert_multiply: box mismatch");
    SchubertClassExpansion out(A.r(), A.width());
    for (const auto& [lambda, a] : A.terms())
        for (const auto& [mu, b] : B.terms())
            for (const auto& [nu, c] : basis_products().get(A.r(), A.width(), lambda, mu))
                out.add(nu, checked_mul(checked_mul(a, b), c));
    return out;
}

SchubertClassExpansion schubert_product(const SchubertProblem& P) {
    auto acc = SchubertClassExpansion::unit(P.r(), P.level());
    for (int p = 1; p <= P.s() && !acc.empty(); ++p)
        acc = schubert_multiply(acc, class_of(P, p));
    return acc;
}

Count intersection_number(const SchubertProblem& P) {
    if (!codim_condition_holds(P))
        throw InvalidInput("intersection_number: codimension condition fails");
    auto acc = SchubertClassExpansion::unit(P.r(), P.level());
    for (int p = 1; p < P.s() && !acc.empty(); ++p)
        acc = schubert_multiply(acc, class_of(P, p));
    // Only the point class is needed from the last multiplication.
    const auto last = partition_from_index_set(P.set(P.s()), P.n(), P.r());
    const auto point = Partition::rectangle(P.r(), P.level());
    Count total = 0;
    for (const auto& [nu, a] : acc.terms())
        if (Count c = lr_coefficient(nu, last, point))
            total = checked_add(total, checked_mul(a, c));
    return total;
}

bool product_nonzero_oracle(const SchubertProblem& P) {
    return !schubert_product(P).empty();
}

Count invariant_dimension(std::span<const Partition> lambdas, int r) {
    if (lambdas.size() < 3)
        throw InvalidInput("invariant_dimension needs at least 3 weights");
    if (r < 1)
        throw InvalidInput("invariant_dimension needs r >= 1");
    std::vector<Partition> normalized;
    std::int64_t total = 0;
    for (const auto& lambda : lambdas) {
        if (lambda.length() > r)
            throw InvalidInput("weight " + format_partition(lambda) + " has more than " +
                               std::to_string(r) + " rows");
        normalized.push_back(lambda.sl_normalized(r));
        total += normalized.back().weight();
    }
    if (total % r != 0)
        return 0;
    const auto level = total / r;
    if (level > std::numeric_limits<int>::max() - r)
        throw std::overflow_error("invariant_dimension: level too large");
    const int n = r + static_cast<int>(level);
    IndexTuple sets;
    for (const auto& lambda : normalized) {
        // A weight wider than the level cannot occur in a tensor product
        // whose determinant part is det^level.
        if (lambda.row(1) > level)
            return 0;
        sets.push_back(index_set_from_partition(lambda, n, r));
    }
    return intersection_number(SchubertProblem(n, r, std::move(sets)));
}

SchubertProblem embed_as_codim_problem(const Partition& lambda, const Partition& mu,
                                       const Partition& nu, int r) {
    if (lambda.length() > r || mu.length() > r || nu.length() > r)
        throw InvalidInput("embed_as_codim_problem: a partition has more than r rows");
    if (lambda.weight() + mu.weight() != nu.weight())
        throw InvalidInput("embed_as_codim_problem: |lambda| + |mu| != |nu|");
    const int width = std::max({lambda.row(1), mu.row(1), nu.row(1)});
    const int n = r + width;
    return SchubertProblem(n, r,
                           {index_set_from_partition(lambda, n, r),
                            index_set_from_partition(mu, n, r),
                            index_set_from_partition(dual_partition(nu, r, width), n, r)});
}

// ---------------------------------------------------------------------------
// Stretching

namespace {

Count binomial(Count n, Count k) {
    if (k < 0 || n < k)
        return 0;
    Count out = 1;
    for (Count i = 1; i <= k; ++i)
        out = checked_mul(out, n - k + i) / i;  // exact: out * (n-k+i) = i * binom(n-k+i, i)
    return out;
}

}  // namespace

Count StretchReport::evaluate(int N) const {
    Count total = 0;
    for (std::size_t k = 0; k < differences.size(); ++k)
        total = checked_add(total, checked_mul(differences[k], binomial(N - 1, static_cast<Count>(k))));
    return total;
}

std::vector<boost::rational<Count>> StretchReport::monomial_coefficients() const {
    using Q = boost::rational<Count>;
    std::vector<Q> out(std::max<std::size_t>(differences.size(), 1), Q(0));
    // basis_k(N) = prod_{j=1..k} (N - j) / k!
    std::vector<Q> basis{Q(1)};
    for (std::size_t k = 0; k < differences.size(); ++k) {
        if (k > 0) {
            std::vector<Q> next(basis.size() + 1, Q(0));
            const Q shift(-static_cast<Count>(k));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d] / static_cast<Count>(k);
                next[d] += basis[d] * shift / static_cast<Count>(k);
            }
            basis = std::move(next);
        }
        for (std::size_t d = 0; d < basis.size(); ++d)
            out[d] += basis[d] * differences[k];
    }
    while (out.size() > 1 && out.back() == Q(0))
        out.pop_back();
    return out;
}

StretchReport fit_stretch_values(std::vector<Count> values) {
    StretchReport report;
    report.values = std::move(values);
    std::vector<Count> row = report.values;
    while (!row.empty()) {
        report.differences.push_back(row.front());
        std::vector<Count> next;
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            next.push_back(checked_add(row[i + 1], -row[i]));
        row = std::move(next);
    }
    for (std::size_t k = 0; k < report.differences.size(); ++k)
        if (report.differences[k] != 0)
            report.degree = static_cast<int>(k);
    return report;
}

StretchReport stretch_sequence(std::span<const Partition> lambdas, int r, int n_max) {
    if (n_max < 1)
        throw InvalidInput("stretch_sequence needs n_max >= 1");
    std::vector<Count> values;
    for (int N = 1; N <= n_max; ++N) {
        std::vector<Partition> stretched;
        for (const auto& lambda : lambdas)
            stretched.push_back(lambda.scaled(N));
        values.push_back(invariant_dimension(stretched, r));
    }
    return fit_stretch_values(std::move(values));
}

}  // namespace schubkit
