#include "schubkit/horn.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace schubkit {

Count horn_inequality_value(const SchubertProblem& P, std::span<const IndexSet> K) {
    if (static_cast<int>(K.size()) != P.s())
        throw InvalidInput("horn_inequality_value: K must have one index set per factor");
    const int f = K.empty() ? 0 : K.front().size();
    if (f < 1 || f > P.r())
        throw InvalidInput("horn_inequality_value: need 0 < f <= r");
    for (const auto& Kp : K)
        if (Kp.size() != f || Kp.ambient() != P.r())
            throw InvalidInput("horn_inequality_value: every K^p must be an f-subset of [r]");
    const Count q = P.level();
    Count total = 0;
    for (int p = 1; p <= P.s(); ++p) {
        const auto& I = P.set(p);
        const auto& Kp = K[static_cast<std::size_t>(p - 1)];
        for (int a = 1; a <= f; ++a)
            total += q + Kp(a) - I(Kp(a));
    }
    return total - f * q;
}

namespace {

// Calls `visit` on every s-tuple of f-subsets of [r] in lexicographic order;
// stops early when `visit` returns false.
template <typename Visit>
void for_each_tuple(int r, int f, int s, Visit&& visit) {
    const auto sets = all_index_sets(f, r);
    if (sets.empty())
        return;
    std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
    IndexTuple tuple(static_cast<std::size_t>(s), sets.front());
    while (true) {
        for (int p = 0; p < s; ++p)
            tuple[p] = sets[idx[p]];
        if (!visit(static_cast<const IndexTuple&>(tuple)))
            return;
        int p = s - 1;
        while (p >= 0 && ++idx[p] == sets.size())
            idx[p--] = 0;
        if (p < 0)
            return;
    }
}

using HornKey = std::tuple<int, int, IndexTuple>;

class HornMemo {
public:
    std::optional<bool> find(const HornKey& key) const {
        std::shared_lock lock(mutex_);
        const auto it = table_.find(key);
        return it == table_.end() ? std::nullopt : std::optional<bool>(it->second);
    }
    void insert(const HornKey& key, bool value) {
        std::unique_lock lock(mutex_);
        table_.try_emplace(key, value);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<HornKey, bool> table_;
};

HornMemo& horn_memo() {
    static HornMemo memo;
    return memo;
}

bool trivially_nonzero(const SchubertProblem& P) {
    // Gr(0, n) and Gr(n, n) are points; every class is the unit.
    return P.r() == 0 || P.level() == 0;
}

}  // namespace

HornDecision horn_decide(const SchubertProblem& P) {
    HornDecision out;
    if (trivially_nonzero(P))
        return out;
    if (P.r() == 1) {
        // Projective space P^{n-1}: h^c is nonzero iff c <= n - 1.
        if (P.total_codimension() > P.n() - 1) {
            IndexTuple K(static_cast<std::size_t>(P.s()), IndexSet({1}, 1));
            out.nonzero = false;
            out.violated = HornInequality{K, horn_inequality_value(P, K)};
        }
        return out;
    }
    for (int f = 1; f <= P.r(); ++f) {
        for (const auto& K : enumerate_essential_positions(P.r(), f, P.s())) {
            const Count value = horn_inequality_value(P, K);
            if (value > 0) {
                out.nonzero = false;
                out.violated = HornInequality{K, value};
                return out;
            }
        }
    }
    return out;
}

bool horn_nonzero(const SchubertProblem& P) {
    if (trivially_nonzero(P))
        return true;
    auto sorted = P.sets();
    std::sort(sorted.begin(), sorted.end());
    HornKey key{P.n(), P.r(), std::move(sorted)};
    if (auto hit = horn_memo().find(key))
        return *hit;
    const bool value = horn_decide(P).nonzero;
    horn_memo().insert(key, value);
    return value;
}

const std::vector<IndexTuple>& enumerate_essential_positions(int r, int f, int s) {
    if (f < 1 || f > r)
        throw InvalidInput("enumerate_essential_positions: need 0 < f <= r");
    if (s < 3)
        throw InvalidInput("enumerate_essential_positions: need s >= 3");
    static std::shared_mutex mutex;
    static std::map<std::tuple<int, int, int>, std::vector<IndexTuple>> table;
    const auto key = std::make_tuple(r, f, s);
    {
        std::shared_lock lock(mutex);
        if (auto it = table.find(key); it != table.end())
            return it->second;
    }
    std::vector<IndexTuple> out;
    for_each_tuple(r, f, s, [&](const IndexTuple& K) {
        if (horn_nonzero(SchubertProblem(r, f, K)))
            out.push_back(K);
        return true;
    });
    std::unique_lock lock(mutex);
    return table.try_emplace(key, std::move(out)).first->second;
}

Count expected_hom_dim(std::span<const IndexSet> H, int m, int q) {
    Count total = static_cast<Count>(m) * q;
    for (const auto& Hp : H) {
        if (Hp.size() != m || Hp.ambient() != q + m)
            throw InvalidInput("expected_hom_dim: H^p must be an m-subset of [q + m]");
        total -= codimension(Hp);
    }
    return total;
}

Count triple_space_dim(int r, int f, int g) {
    if (g < 0 || g > f || f > r)
        throw InvalidInput("triple_space_dim: need 0 <= g <= f <= r");
    return 2 * static_cast<Count>(f - g) * (r - f) + static_cast<Count>(g) * (r - g);
}

namespace {

std::vector<Count> poly_mul(const std::vector<Count>& a, const std::vector<Count>& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<Count> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    return out;
}

void poly_trim(std::vector<Count>& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

}  // namespace

std::vector<Count> gaussian_binomial(int n, int k) {
    if (k < 0 || k > n)
        return {};
    // [n, k] = [n-1, k-1] + q^k [n-1, k]
    std::vector<std::vector<Count>> prev{{1}};
    for (int row = 1; row <= n; ++row) {
        std::vector<std::vector<Count>> cur(static_cast<std::size_t>(row + 1));
        cur[0] = {1};
        cur[row] = {1};
        for (int j = 1; j < row; ++j) {
            const auto& left = prev[j - 1];
            const auto& right = prev[j];
            std::vector<Count> sum(std::max(left.size(), right.size() + j), 0);
            for (std::size_t d = 0; d < left.size(); ++d)
                sum[d] += left[d];
            for (std::size_t d = 0; d < right.size(); ++d)
                sum[d + j] += right[d];
            cur[j] = std::move(sum);
        }
        prev = std::move(cur);
    }
    return prev[k];
}

std::vector<Count> triple_count_polynomial(int r, int f, int g) {
    if (g < 0 || g > f || f > r)
        throw InvalidInput("triple_count_polynomial: need 0 <= g <= f <= r");
    // T, then S over T, then S' over T meeting S/T trivially in V/T.
    std::vector<Count> shift(static_cast<std::size_t>((f - g) * (f - g) + 1), 0);
    shift.back() = 1;
    auto out = poly_mul(gaussian_binomial(r, g), gaussian_binomial(r - g, f - g));
    out = poly_mul(out, shift);
    out = poly_mul(out, gaussian_binomial(r - f, f - g));
    poly_trim(out);
    return out;
}

Count evaluate_polynomial(std::span<const Count> coeffs, Count q) {
    Count total = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        total = checked_add(checked_mul(total, q), *it);
    return total;
}

namespace {

int common_size(const IndexTuple& tuple, const char* name) {
    if (tuple.empty())
        throw InvalidInput(std::string("dim_ledger: empty tuple ") + name);
    const int k = tuple.front().size();
    for (const auto& X : tuple)
        if (X.size() != k)
            throw InvalidInput(std::string("dim_ledger: sets in ") + name + " differ in size");
    return k;
}

void require_ambient(const IndexTuple& tuple, int ambient, const char* name) {
    for (const auto& X : tuple)
        if (X.ambient() != ambient)
            throw InvalidInput(std::string("dim_ledger: ") + name + " must live in [" +
                               std::to_string(ambient) + "]");
}

}  // namespace

DimensionLedger dim_ledger(const LedgerInputs& in) {
    DimensionLedger out;
    out.n = in.n;
    out.r = in.r;
    out.m = in.m;
    out.s = static_cast<int>(in.I.size());
    for (const auto* t : {&in.H, &in.E, &in.K, &in.J})
        if (static_cast<int>(t->size()) != out.s)
            throw InvalidInput("dim_ledger: all tuples need the same number of factors");
    if (in.r < 1 || in.n < in.r)
        throw InvalidInput("dim_ledger: need 1 <= r <= n");
    const int q = in.n - in.r;

    if (common_size(in.H, "H") != in.m)
        throw InvalidInput("dim_ledger: H^p must have cardinality m");
    require_ambient(in.H, q + in.m, "H");
    out.e = common_size(in.E, "E");
    require_ambient(in.E, in.m, "E");
    if (common_size(in.I, "I") != in.r)
        throw InvalidInput("dim_ledger: I^p must have cardinality r");
    require_ambient(in.I, in.n, "I");
    out.f = common_size(in.K, "K");
    require_ambient(in.K, in.r, "K");
    out.g = common_size(in.J, "J");
    require_ambient(in.J, in.r, "J");
    if (!(0 <= out.g && out.g < out.f && out.f < out.r))
        throw InvalidInput("dim_ledger: need 0 <= g < f < r");

    const Count s = out.s;
    Count lam_E = 0, lam_H = 0, shifted = 0;
    for (int p = 0; p < out.s; ++p) {
        const auto& E = in.E[p];
        const auto& H = in.H[p];
        lam_E += codimension(E);
        lam_H += codimension(H);
        for (int a = 1; a <= out.e; ++a)
            shifted += q + E(a) - H(E(a));
    }
    out.universal_intersection = s * flag_variety_dim(in.m) - lam_E;
    out.universal_hom =
        static_cast<Count>(in.m - out.e) * q + s * flag_variety_dim(q) + shifted - lam_H;

    out.triple_space = triple_space_dim(out.r, out.f, out.g);

    Count lam_J = 0, lam_K = 0, lam_N = 0, lam_L = 0, lam_I = 0;
    for (int p = 0; p < out.s; ++p) {
        out.N.push_back(factor_index(in.K[p], in.J[p]));
        out.L.push_back(compose_index(in.I[p], in.K[p]));
        lam_J += codimension(in.J[p]);
        lam_K += codimension(in.K[p]);
        lam_N += codimension(out.N.back());
        lam_L += codimension(out.L.back());
        lam_I += codimension(in.I[p]);
    }
    out.paired_intersection = s * flag_variety_dim(out.r) + lam_J - 2 * lam_K - 2 * lam_N;
    out.paired_hom = 2 * static_cast<Count>(out.r - out.f) * q + 2 * s * flag_variety_dim(q) +
                     2 * (lam_L - lam_I - lam_K);
    return out;
}

bool filtration_codim_identity(int rho, const IndexSet& L) {
    if (L.ambient() != rho)
        throw InvalidInput("filtration_codim_identity: L must live in [rho]");
    const int k = L.size();
    // Rank sum of the filtration pieces cut out by the thresholds L.
    Count rank_sum = 0;
    for (int t = 1; t <= rho - 1; ++t) {
        int c = 0;
        while (c < k && L(c + 1) <= t)
            ++c;
        rank_sum += c;
    }
    Count closed_form = static_cast<Count>(k) * rho;
    for (int x : L.elements())
        closed_form -= x;
    const Count via_partition = codimension(L) + flag_variety_dim(k);
    return rank_sum == closed_form && closed_form == via_partition;
}

}  // namespace schubkit
