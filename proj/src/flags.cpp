#include "schubkit/flags.hpp"

#include <stdexcept>

namespace schubkit {

PrimeFlag::PrimeFlag(PrimeMatrix basis) : basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols() || basis_.rank() != basis_.rows())
        throw InvalidInput("flag basis must be an invertible square matrix");
}

PrimeFlag PrimeFlag::standard(const PrimeField& F, int m) {
    return PrimeFlag(PrimeMatrix::identity(F, m));
}

PrimeFlag random_flag(const PrimeField& F, int m, std::uint64_t seed) {
    if (m < 0)
        throw InvalidInput("random_flag: negative dimension");
    SeededRng rng(seed);
    return PrimeFlag(PrimeMatrix::random_invertible(F, m, rng));
}

FlagTuple random_flags(const PrimeField& F, int m, int s, std::uint64_t seed) {
    FlagTuple out;
    for (int p = 0; p < s; ++p)
        out.push_back(random_flag(F, m, derive_seed(seed, static_cast<std::uint64_t>(p))));
    return out;
}

bool has_full_column_rank(const PrimeMatrix& A) { return A.rank() == A.cols(); }

namespace {

void require_subspace(const PrimeMatrix& R, const PrimeFlag& F, const char* what) {
    if (R.rows() != F.dim())
        throw InvalidInput(std::string(what) + ": subspace lives in the wrong dimension");
    if (!has_full_column_rank(R))
        throw InvalidInput(std::string(what) + ": subspace columns are dependent");
}

}  // namespace

std::vector<int> intersection_dims(const PrimeMatrix& R, const PrimeFlag& F) {
    const int e = R.cols();
    std::vector<int> dims;
    for (int a = 0; a <= F.dim(); ++a)
        dims.push_back(e + a - hstack(R, F.step(a)).rank());
    return dims;
}

IndexSet subspace_position(const PrimeMatrix& R, const PrimeFlag& F) {
    require_subspace(R, F, "subspace_position");
    const auto dims = intersection_dims(R, F);
    std::vector<int> H;
    for (int a = 1; a <= F.dim(); ++a)
        if (dims[a] > dims[a - 1])
            H.push_back(a);
    return IndexSet(std::move(H), F.dim());
}

PrimeMatrix intersect_spans(const PrimeMatrix& A, const PrimeMatrix& B) {
    // A x = B y  <=>  [A | -B] (x, y) = 0.
    PrimeMatrix negB = B;
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j)
            negB.set(i, j, B.field().neg(B.at(i, j)));
    const auto K = hstack(A, negB).nullspace();
    const auto X = K.transpose().columns(0, A.cols()).transpose();
    auto V = A * X;
    // Keep an independent subset of the columns.
    std::vector<int> pivots;
    V.rref(&pivots);
    PrimeMatrix out(A.field(), A.rows(), 0);
    for (int c : pivots)
        out = hstack(out, V.column(c));
    return out;
}

PrimeFlag induced_flag_on_subspace(const PrimeFlag& F, const PrimeMatrix& S) {
    require_subspace(S, F, "induced_flag_on_subspace");
    const int e = S.cols();
    const PrimeField& k = F.field();
    PrimeMatrix basis(k, e, 0);
    for (int a = 1; a <= F.dim() && basis.cols() < e; ++a) {
        // S-coordinates of S cap F_a.
        PrimeMatrix negF = F.step(a);
        for (int i = 0; i < negF.rows(); ++i)
            for (int j = 0; j < negF.cols(); ++j)
                negF.set(i, j, k.neg(negF.at(i, j)));
        const auto K = hstack(S, negF).nullspace();
        for (int c = 0; c < K.cols(); ++c) {
            PrimeMatrix x(k, e, 1);
            for (int i = 0; i < e; ++i)
                x.set(i, 0, K.at(i, c));
            auto candidate = hstack(basis, x);
            if (candidate.rank() > basis.cols())
                basis = std::move(candidate);
        }
    }
    return PrimeFlag(std::move(basis));
}

QuotientModel::QuotientModel(const PrimeMatrix& S) : reduced_(S.field(), 0, 0) {
    if (!has_full_column_rank(S))
        throw InvalidInput("QuotientModel: subspace columns are dependent");
    const auto R = S.transpose().rref(&pivots_);
    std::vector<bool> is_pivot(static_cast<std::size_t>(S.rows()), false);
    for (int c : pivots_)
        is_pivot[c] = true;
    for (int i = 0; i < S.rows(); ++i)
        if (!is_pivot[i])
            complement_.push_back(i);
    // Columns of R^T span S and are the identity on the pivot rows.
    reduced_ = R.transpose().select_rows(complement_);
}

PrimeMatrix QuotientModel::project(const PrimeMatrix& v) const {
    const auto& k = v.field();
    const auto vC = v.select_rows(complement_);
    const auto vP = v.select_rows(pivots_);
    const auto correction = reduced_ * vP;
    PrimeMatrix out(k, vC.rows(), vC.cols());
    for (int i = 0; i < vC.rows(); ++i)
        for (int j = 0; j < vC.cols(); ++j)
            out.set(i, j, k.sub(vC.at(i, j), correction.at(i, j)));
    return out;
}

PrimeFlag induced_flag_on_quotient(const PrimeFlag& F, const PrimeMatrix& S) {
    require_subspace(S, F, "induced_flag_on_quotient");
    const QuotientModel model(S);
    PrimeMatrix basis(F.field(), model.dim(), 0);
    for (int a = 0; a < F.dim() && basis.cols() < model.dim(); ++a) {
        auto candidate = hstack(basis, model.project(F.basis().column(a)));
        if (candidate.rank() > basis.cols())
            basis = std::move(candidate);
    }
    return PrimeFlag(std::move(basis));
}

FlagTuple sample_flag_with_position(const PrimeField& F, int f, const PrimeMatrix& T,
                                    const IndexTuple& N, std::uint64_t seed, int retries) {
    const int g = T.cols();
    if (g > f)
        throw InvalidInput("sample_flag_with_position: dim T exceeds dim S");
    if (T.rows() != f || !has_full_column_rank(T))
        throw InvalidInput("sample_flag_with_position: T must be independent columns in k^f");
    for (const auto& Np : N)
        if (Np.size() != g || Np.ambient() != f)
            throw InvalidInput("sample_flag_with_position: N^p must be a g-subset of [f]");
    FlagTuple out;
    for (std::size_t p = 0; p < N.size(); ++p) {
        bool done = false;
        for (int attempt = 0; attempt <= retries && !done; ++attempt) {
            SeededRng rng(derive_seed(derive_seed(seed, p), static_cast<std::uint64_t>(attempt)));
            const auto TL = T * PrimeMatrix::random_invertible(F, g, rng);
            auto B = PrimeMatrix::random(F, f, f, rng);
            for (int b = 1; b <= g; ++b)
                for (int i = 0; i < f; ++i)
                    B.set(i, N[p](b) - 1, TL.at(i, b - 1));
            if (B.rank() < f)
                continue;
            PrimeFlag flag(B * PrimeMatrix::random_upper_triangular(F, f, rng));
            if (g > 0 && subspace_position(T, flag) != N[p])
                continue;
            out.push_back(std::move(flag));
            done = true;
        }
        if (!done)
            throw std::runtime_error("sample_flag_with_position: retry budget exhausted");
    }
    return out;
}

}  // namespace schubkit
