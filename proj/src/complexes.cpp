#include "schubkit/complexes.hpp"

#include <stdexcept>

namespace schubkit {

StepProfile::StepProfile(int m_, int q_, std::vector<std::vector<int>> theta_)
    : m(m_), q(q_), theta(std::move(theta_)) {
    if (m < 0 || q < 0)
        throw InvalidInput("StepProfile: negative dimension");
    for (const auto& t : theta) {
        if (static_cast<int>(t.size()) != m)
            throw InvalidInput("StepProfile: every sequence must have length m");
        for (int a = 0; a < m; ++a)
            if (t[a] < 0 || t[a] > q || (a > 0 && t[a] < t[a - 1]))
                throw InvalidInput("StepProfile: sequence must be nondecreasing in [0, q]");
    }
}

StepProfile theta_from_index(std::span<const IndexSet> H) {
    if (H.empty())
        throw InvalidInput("theta_from_index: empty tuple");
    const int m = H.front().size();
    const int q = H.front().ambient() - m;
    std::vector<std::vector<int>> theta;
    for (const auto& Hp : H) {
        if (Hp.size() != m || Hp.ambient() != q + m)
            throw InvalidInput("theta_from_index: index sets must share size and ambient");
        std::vector<int> t;
        for (int a = 1; a <= m; ++a)
            t.push_back(Hp(a) - a);
        theta.push_back(std::move(t));
    }
    return StepProfile(m, q, std::move(theta));
}

Count p_theta_dim(std::span<const int> theta) {
    Count total = 0;
    for (int x : theta)
        total += x;
    return total;
}

namespace {

void check_shapes(const FlagTuple& F, const FlagTuple& G, const StepProfile& theta) {
    if (static_cast<int>(F.size()) != theta.s() || static_cast<int>(G.size()) != theta.s())
        throw InvalidInput("two-step complex: need one flag pair per profile");
    for (const auto& f : F)
        if (f.dim() != theta.m)
            throw InvalidInput("two-step complex: flags on M must have dimension m");
    for (const auto& g : G)
        if (g.dim() != theta.q)
            throw InvalidInput("two-step complex: flags on Q must have dimension q");
}

Count chi_formula(const StepProfile& theta) {
    Count chi = static_cast<Count>(theta.m) * theta.q;
    for (const auto& t : theta.theta)
        for (int x : t)
            chi -= theta.q - x;
    return chi;
}

PrimeMatrix combine(const std::vector<PrimeMatrix>& basis, SeededRng& rng) {
    const auto& k = basis.front().field();
    PrimeMatrix phi(k, basis.front().rows(), basis.front().cols());
    for (const auto& B : basis) {
        const auto c = rng.element(k);
        for (int i = 0; i < phi.rows(); ++i)
            for (int j = 0; j < phi.cols(); ++j)
                phi.set(i, j, k.add(phi.at(i, j), k.mul(c, B.at(i, j))));
    }
    return phi;
}

IndexTuple positions(const PrimeMatrix& R, const FlagTuple& F) {
    IndexTuple out;
    for (const auto& f : F)
        out.push_back(subspace_position(R, f));
    return out;
}

}  // namespace

PrimeMatrix two_step_matrix(const FlagTuple& F, const FlagTuple& G, const StepProfile& theta) {
    check_shapes(F, G, theta);
    const int m = theta.m;
    const int q = theta.q;
    Count rows = 0;
    for (const auto& t : theta.theta)
        for (int x : t)
            rows += q - x;
    if (theta.s() == 0)
        throw InvalidInput("two-step complex: empty tuple");
    const auto& k = F.front().field();
    PrimeMatrix gamma(k, static_cast<int>(rows), m * q);
    int row = 0;
    for (int p = 0; p < theta.s(); ++p) {
        const auto& A = F[p].basis();
        const auto Binv = G[p].basis().inverse();
        for (int a = 0; a < m; ++a)
            for (int i = theta.theta[p][a]; i < q; ++i, ++row)
                for (int j = 0; j < q; ++j) {
                    const auto b = Binv.at(i, j);
                    if (b == 0)
                        continue;
                    for (int c = 0; c < m; ++c)
                        gamma.set(row, j * m + c, k.mul(b, A.at(c, a)));
                }
    }
    return gamma;
}

TwoStepReport two_step_report(const FlagTuple& F, const FlagTuple& G, const StepProfile& theta) {
    const auto gamma = two_step_matrix(F, G, theta);
    TwoStepReport out;
    out.rank = gamma.rank();
    out.h0 = gamma.cols() - out.rank;
    out.h1 = gamma.rows() - out.rank;
    out.chi = out.h0 - out.h1;
    if (out.chi != chi_formula(theta))
        throw std::logic_error("two_step_report: Euler characteristic mismatch");
    return out;
}

std::vector<PrimeMatrix> hom_space_basis(const FlagTuple& F, const FlagTuple& G,
                                         std::span<const IndexSet> H) {
    const auto theta = theta_from_index(H);
    const auto K = two_step_matrix(F, G, theta).nullspace();
    std::vector<PrimeMatrix> out;
    for (int c = 0; c < K.cols(); ++c) {
        PrimeMatrix phi(K.field(), theta.q, theta.m);
        for (int j = 0; j < theta.q; ++j)
            for (int i = 0; i < theta.m; ++i)
                phi.set(j, i, K.at(j * theta.m + i, c));
        out.push_back(std::move(phi));
    }
    return out;
}

Count hom_space_dim(const FlagTuple& F, const FlagTuple& G, std::span<const IndexSet> H) {
    return two_step_report(F, G, theta_from_index(H)).h0;
}

HomData hom_data(const FlagTuple& F, const FlagTuple& G, std::span<const IndexSet> H,
                 int trials, std::uint64_t seed) {
    if (trials < 1)
        throw InvalidInput("hom_data: need at least one trial");
    const auto basis = hom_space_basis(F, G, H);
    const int m = H.front().size();
    const auto& k = F.front().field();
    HomData out;
    out.D = static_cast<Count>(basis.size());
    if (basis.empty()) {
        out.e = m;
        out.kernel = PrimeMatrix::identity(k, m);
        out.E = positions(*out.kernel, F);
        return out;
    }
    SeededRng rng(seed);
    std::optional<PrimeMatrix> best;
    int best_rank = -1;
    for (int t = 0; t < trials; ++t) {
        auto phi = combine(basis, rng);
        const int rk = phi.rank();
        if (rk > best_rank) {
            best_rank = rk;
            best = std::move(phi);
        }
    }
    out.kernel = best->nullspace();
    out.e = out.kernel->cols();
    out.E = positions(*out.kernel, F);
    return out;
}

HomPrimeData hom_prime_data(const FlagTuple& F, const FlagTuple& G1, const FlagTuple& G2,
                            std::span<const IndexSet> H, int trials, std::uint64_t seed) {
    HomPrimeData out;
    out.first = hom_data(F, G1, H, trials, derive_seed(seed, 0));
    out.second = hom_data(F, G2, H, trials, derive_seed(seed, 1));
    const auto T = intersect_spans(*out.first.kernel, *out.second.kernel);
    out.t = T.cols();
    out.T = positions(T, F);
    return out;
}

bool theta_section_vanishes(const FlagTuple& F, const FlagTuple& G, std::span<const IndexSet> I) {
    return hom_space_dim(F, G, I) > 0;
}

int Prop11Report::passed_first() const {
    int n = 0;
    for (const auto& x : instances)
        n += x.passed_first;
    return n;
}

int Prop11Report::passed() const {
    int n = 0;
    for (const auto& x : instances)
        n += x.passed;
    return n;
}

bool Prop11Report::chi_identity_everywhere() const {
    for (const auto& x : instances)
        if (!x.chi_identity)
            return false;
    return true;
}

Prop11Report prop11_check(const PrimeField& k, std::span<const IndexSet> H, int n_instances,
                          std::uint64_t seed, int retries) {
    Prop11Report report;
    report.H.assign(H.begin(), H.end());
    report.m = H.front().size();
    report.q = H.front().ambient() - report.m;
    report.prime = k.prime();
    report.expected = expected_hom_dim(H, report.m, report.q);
    report.horn_nonzero = horn_nonzero(SchubertProblem(report.q + report.m, report.m, report.H));
    const int s = static_cast<int>(H.size());
    const auto theta = theta_from_index(H);
    for (int i = 0; i < n_instances; ++i) {
        Prop11Instance inst;
        const std::uint64_t base = derive_seed(seed, static_cast<std::uint64_t>(i));
        for (int attempt = 0; attempt <= retries; ++attempt) {
            inst.seed = attempt == 0 ? base : derive_seed(base, static_cast<std::uint64_t>(attempt));
            inst.attempts = attempt + 1;
            const auto F = random_flags(k, report.m, s, derive_seed(inst.seed, 0));
            const auto G = random_flags(k, report.q, s, derive_seed(inst.seed, 1));
            bool ok = false;
            try {
                inst.sampled = two_step_report(F, G, theta).h0;
                inst.expected = report.expected;
                ok = report.horn_nonzero
                         ? inst.sampled == report.expected
                         : (inst.sampled != report.expected || report.expected < 0);
            } catch (const std::logic_error&) {
                inst.chi_identity = false;
            }
            if (attempt == 0)
                inst.passed_first = ok;
            if (ok) {
                inst.passed = true;
                break;
            }
        }
        report.instances.push_back(inst);
    }
    return report;
}

H1TransferReport h1_transfer_check(const FlagTuple& F, const FlagTuple& G,
                                   std::span<const IndexSet> H, int trials, std::uint64_t seed) {
    H1TransferReport out;
    out.h1_full = two_step_report(F, G, theta_from_index(H)).h1;
    const auto data = hom_data(F, G, H, trials, seed);
    out.e = data.e;
    out.E = data.E;
    if (data.e == 0) {
        out.kernel_zero = true;
        out.h1_restricted = 0;
        out.equal = out.h1_full == 0;
        return out;
    }
    FlagTuple FR;
    for (std::size_t p = 0; p < F.size(); ++p) {
        FR.push_back(induced_flag_on_subspace(F[p], *data.kernel));
        out.Y.push_back(kernel_position_shift(H[p], data.E[p]));
    }
    out.h1_restricted = two_step_report(FR, G, theta_from_index(out.Y)).h1;
    out.equal = out.h1_full == out.h1_restricted;
    return out;
}

bool subspace_inequalities_hold_for_all_positions(std::span<const IndexSet> I) {
    if (I.empty())
        return true;
    const int f = I.front().size();
    const int q = I.front().ambient() - f;
    for (int d = 1; d <= f; ++d) {
        Count total = 0;
        for (const auto& Ip : I) {
            const auto lam = partition_from_index_set(Ip, Ip.ambient(), f);
            for (int b = 1; b <= d; ++b)
                total += lam.row(b);
        }
        if (total > static_cast<Count>(d) * q)
            return false;
    }
    return true;
}

}  // namespace schubkit
