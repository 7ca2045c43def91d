#include "schubkit/prime_field.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "schubkit/partitions.hpp"

namespace schubkit {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
        throw InvalidInput("field size " + std::to_string(p) + " is not a prime below 2^32");
}

std::uint64_t PrimeField::reduce(std::int64_t x) const {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = x % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t result = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1)
            result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
}

std::uint64_t SeededRng::element(const PrimeField& F) {
    const std::uint64_t p = F.prime();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / p * p;
    while (true) {
        const std::uint64_t x = engine_();
        if (x < limit)
            return x % p;
    }
}

std::uint64_t SeededRng::nonzero_element(const PrimeField& F) {
    while (true)
        if (const auto x = element(F))
            return x;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed ^ (index * 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

PrimeMatrix::PrimeMatrix(const PrimeField& F, int rows, int cols)
    : F_(F), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw InvalidInput("matrix dimensions must be nonnegative");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

PrimeMatrix::PrimeMatrix(const PrimeField& F, int rows, int cols,
                         const std::vector<std::int64_t>& row_major)
    : PrimeMatrix(F, rows, cols) {
    if (row_major.size() != data_.size())
        throw InvalidInput("matrix entry count does not match its shape");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] = F.reduce(row_major[k]);
}

PrimeMatrix PrimeMatrix::identity(const PrimeField& F, int n) {
    PrimeMatrix I(F, n, n);
    for (int i = 0; i < n; ++i)
        I.set(i, i, 1);
    return I;
}

PrimeMatrix PrimeMatrix::random(const PrimeField& F, int rows, int cols, SeededRng& rng) {
    PrimeMatrix A(F, rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            A.set(i, j, rng.element(F));
    return A;
}

PrimeMatrix PrimeMatrix::random_invertible(const PrimeField& F, int n, SeededRng& rng) {
    while (true) {
        auto A = random(F, n, n, rng);
        if (A.rank() == n)
            return A;
    }
}

PrimeMatrix PrimeMatrix::random_upper_triangular(const PrimeField& F, int n, SeededRng& rng) {
    PrimeMatrix U(F, n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i)
            U.set(i, j, rng.element(F));
        U.set(j, j, rng.nonzero_element(F));
    }
    return U;
}

PrimeMatrix PrimeMatrix::column(int j) const { return columns(j, 1); }

PrimeMatrix PrimeMatrix::columns(int first, int count) const {
    if (first < 0 || count < 0 || first + count > cols_)
        throw InvalidInput("column range out of bounds");
    PrimeMatrix out(F_, rows_, count);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < count; ++j)
            out.data_[out.idx(i, j)] = at(i, first + j);
    return out;
}

PrimeMatrix PrimeMatrix::select_rows(const std::vector<int>& rows) const {
    PrimeMatrix out(F_, static_cast<int>(rows.size()), cols_);
    for (int i = 0; i < out.rows_; ++i) {
        if (rows[i] < 0 || rows[i] >= rows_)
            throw InvalidInput("row index out of bounds");
        for (int j = 0; j < cols_; ++j)
            out.data_[out.idx(i, j)] = at(rows[i], j);
    }
    return out;
}

PrimeMatrix PrimeMatrix::transpose() const {
    PrimeMatrix out(F_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.data_[out.idx(j, i)] = at(i, j);
    return out;
}

PrimeMatrix PrimeMatrix::rref(std::vector<int>* pivots) const {
    PrimeMatrix A = *this;
    if (pivots)
        pivots->clear();
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = row;
        while (pivot < rows_ && A.at(pivot, col) == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        if (pivot != row)
            for (int j = 0; j < cols_; ++j)
                std::swap(A.data_[A.idx(pivot, j)], A.data_[A.idx(row, j)]);
        const auto scale = F_.inv(A.at(row, col));
        for (int j = col; j < cols_; ++j)
            A.data_[A.idx(row, j)] = F_.mul(A.at(row, j), scale);
        for (int i = 0; i < rows_; ++i) {
            if (i == row)
                continue;
            const auto factor = A.at(i, col);
            if (factor == 0)
                continue;
            for (int j = col; j < cols_; ++j)
                A.data_[A.idx(i, j)] = F_.sub(A.at(i, j), F_.mul(factor, A.at(row, j)));
        }
        if (pivots)
            pivots->push_back(col);
        ++row;
    }
    return A;
}

int PrimeMatrix::rank() const {
    std::vector<int> pivots;
    rref(&pivots);
    return static_cast<int>(pivots.size());
}

PrimeMatrix PrimeMatrix::nullspace() const {
    std::vector<int> pivots;
    const auto R = rref(&pivots);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots)
        is_pivot[c] = true;
    PrimeMatrix N(F_, cols_, cols_ - static_cast<int>(pivots.size()));
    int k = 0;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        N.set(free, k, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            N.set(pivots[r], k, F_.neg(R.at(static_cast<int>(r), free)));
        ++k;
    }
    return N;
}

PrimeMatrix PrimeMatrix::inverse() const {
    if (rows_ != cols_)
        throw InvalidInput("inverse of a non-square matrix");
    std::vector<int> pivots;
    const auto R = hstack(*this, identity(F_, rows_)).rref(&pivots);
    if (static_cast<int>(pivots.size()) < rows_ || (rows_ > 0 && pivots[rows_ - 1] >= cols_))
        throw InvalidInput("matrix is singular");
    return R.columns(cols_, cols_);
}

PrimeMatrix operator*(const PrimeMatrix& A, const PrimeMatrix& B) {
    if (A.cols_ != B.rows_ || !(A.F_ == B.F_))
        throw InvalidInput("matrix product shape mismatch");
    const auto& F = A.F_;
    PrimeMatrix C(F, A.rows_, B.cols_);
    for (int i = 0; i < A.rows_; ++i)
        for (int k = 0; k < A.cols_; ++k) {
            const auto a = A.at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < B.cols_; ++j)
                C.data_[C.idx(i, j)] = F.add(C.at(i, j), F.mul(a, B.at(k, j)));
        }
    return C;
}

bool operator==(const PrimeMatrix& A, const PrimeMatrix& B) {
    return A.F_ == B.F_ && A.rows_ == B.rows_ && A.cols_ == B.cols_ && A.data_ == B.data_;
}

PrimeMatrix hstack(const PrimeMatrix& A, const PrimeMatrix& B) {
    if (A.rows() != B.rows())
        throw InvalidInput("hstack: row counts differ");
    PrimeMatrix C(A.field(), A.rows(), A.cols() + B.cols());
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j)
            C.set(i, j, A.at(i, j));
        for (int j = 0; j < B.cols(); ++j)
            C.set(i, A.cols() + j, B.at(i, j));
    }
    return C;
}

bool same_span(const PrimeMatrix& A, const PrimeMatrix& B) {
    const int ra = A.rank();
    return ra == B.rank() && hstack(A, B).rank() == ra;
}

}  // namespace schubkit
