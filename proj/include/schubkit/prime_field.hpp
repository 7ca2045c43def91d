#pragma once

// Exact linear algebra over Z/p and a reproducible seeded sampler.

#include <cstdint>
#include <random>
#include <vector>

namespace schubkit {

inline constexpr std::uint64_t kDefaultPrime = 1'000'003;

class PrimeField {
public:
    /// Throws InvalidInput unless p is a prime below 2^32.
    explicit PrimeField(std::uint64_t p = kDefaultPrime);

    std::uint64_t prime() const { return p_; }
    std::uint64_t reduce(std::int64_t x) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    /// Throws std::domain_error on zero.
    std::uint64_t inv(std::uint64_t a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Seeded generator: std::mt19937_64 seeded with the 64-bit seed; field
/// elements drawn by rejection so they are exactly uniform mod p.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t element(const PrimeField& F);
    std::uint64_t nonzero_element(const PrimeField& F);
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer applied to seed ^ (index * golden ratio constant).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class PrimeMatrix {
public:
    PrimeMatrix(const PrimeField& F, int rows, int cols);
    PrimeMatrix(const PrimeField& F, int rows, int cols, const std::vector<std::int64_t>& row_major);

    static PrimeMatrix identity(const PrimeField& F, int n);
    /// Filled column by column from the generator.
    static PrimeMatrix random(const PrimeField& F, int rows, int cols, SeededRng& rng);
    /// Random invertible matrix (resampled until invertible).
    static PrimeMatrix random_invertible(const PrimeField& F, int n, SeededRng& rng);
    /// Random upper triangular matrix with nonzero diagonal.
    static PrimeMatrix random_upper_triangular(const PrimeField& F, int n, SeededRng& rng);

    const PrimeField& field() const { return F_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    /// 0-based.
    std::uint64_t at(int i, int j) const { return data_[idx(i, j)]; }
    void set(int i, int j, std::uint64_t v) { data_[idx(i, j)] = v % F_.prime(); }

    PrimeMatrix column(int j) const;
    /// Columns [first, first + count).
    PrimeMatrix columns(int first, int count) const;
    PrimeMatrix select_rows(const std::vector<int>& rows) const;
    PrimeMatrix transpose() const;

    /// Reduced row echelon form; `pivots` receives the pivot column indices.
    PrimeMatrix rref(std::vector<int>* pivots = nullptr) const;
    int rank() const;
    /// Columns form a basis of { x : A x = 0 }.
    PrimeMatrix nullspace() const;
    /// Throws InvalidInput if singular.
    PrimeMatrix inverse() const;

    friend PrimeMatrix operator*(const PrimeMatrix& A, const PrimeMatrix& B);
    friend bool operator==(const PrimeMatrix& A, const PrimeMatrix& B);

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    PrimeField F_;
    int rows_;
    int cols_;
    std::vector<std::uint64_t> data_;
};

/// [A | B]; both must have the same row count.
PrimeMatrix hstack(const PrimeMatrix& A, const PrimeMatrix& B);

/// Whether the column spans agree.
bool same_span(const PrimeMatrix& A, const PrimeMatrix& B);

}  // namespace schubkit
