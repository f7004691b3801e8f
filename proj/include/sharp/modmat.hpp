#pragma once

// Modular full-column-rank filters.
//
// If the augmented integer matrix [A | t] has full column rank over GF(2) or
// GF(p), it has full column rank over Q, so t is not in the column span of A
// and the support can be rejected without exact arithmetic.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sharp/poly.hpp"

namespace sharp {

class InvalidPrime : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint32_t n);

/// Accepts odd primes below 2^16 that do not divide the degree.
void validate_prime(std::uint32_t p, int degree);

/// Columns packed into 64-bit words, bit j of a column = entry j mod 2.
class BitColumns {
  public:
    explicit BitColumns(int rows);
    static BitColumns from_columns(std::span<const ColumnVector> cols);

    void push(const ColumnVector& col);
    void push_bits(std::span<const std::uint64_t> words);

    int rows() const { return rows_; }
    std::size_t words_per_column() const { return words_; }
    std::size_t count() const { return data_.size() / words_; }
    std::span<const std::uint64_t> column(std::size_t i) const { return {data_.data() + i * words_, words_}; }

  private:
    int rows_;
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

/// Column elimination over GF(2); each step is one XOR per word, pivot is the
/// lowest set bit.
bool full_column_rank_mod2(const BitColumns& cols);

/// Incremental single-word GF(2) basis (at most 64 rows). Stored vectors are
/// reduced against all earlier ones, so a single forward pass reduces a new
/// column completely.
class Gf2Basis {
  public:
    std::uint64_t reduce(std::uint64_t col) const {
        for (std::size_t i = 0; i < vecs_.size(); ++i) {
            if (col & pivots_[i]) col ^= vecs_[i];
        }
        return col;
    }

    /// Inserts col if independent of the basis; returns whether it was.
    bool push(std::uint64_t col) {
        col = reduce(col);
        if (col == 0) return false;
        vecs_.push_back(col);
        pivots_.push_back(col & (~col + 1));
        return true;
    }

    void truncate(std::size_t n) {
        vecs_.resize(n);
        pivots_.resize(n);
    }
    std::size_t size() const { return vecs_.size(); }

  private:
    std::vector<std::uint64_t> vecs_;
    std::vector<std::uint64_t> pivots_;
};

std::uint64_t pack_mod2(const ColumnVector& col);

/// Column-major residues mod p.
class ModMatrix {
  public:
    ModMatrix(std::uint32_t prime, int rows);
    static ModMatrix from_columns(std::span<const ColumnVector> cols, std::uint32_t prime);

    void push(const ColumnVector& col);

    std::uint32_t prime() const { return prime_; }
    int rows() const { return rows_; }
    std::size_t cols() const { return data_.size() / static_cast<std::size_t>(rows_); }
    std::span<const std::uint32_t> column(std::size_t i) const {
        return {data_.data() + i * static_cast<std::size_t>(rows_), static_cast<std::size_t>(rows_)};
    }

  private:
    std::uint32_t prime_;
    int rows_;
    std::vector<std::uint32_t> data_;
};

std::vector<std::uint32_t> residues(const ColumnVector& col, std::uint32_t prime);

/// Throws InvalidPrime unless the modulus is an odd prime below 2^16.
bool full_column_rank_modp(const ModMatrix& m);

/// Incremental GF(p) basis; vectors normalised to 1 at their pivot (first
/// nonzero row) and reduced against earlier vectors.
class GfpBasis {
  public:
    GfpBasis(std::uint32_t prime, int rows);

    /// Reduces col in place; returns true if the result is nonzero.
    bool reduce(std::span<std::uint32_t> col) const;
    bool push(std::span<const std::uint32_t> col);

    void truncate(std::size_t n);
    std::size_t size() const { return pivots_.size(); }

  private:
    std::uint32_t p_;
    std::size_t rows_;
    std::vector<std::uint32_t> vecs_;
    std::vector<std::size_t> pivots_;
    mutable std::vector<std::uint32_t> scratch_;
};

enum class ModularVerdict { RejectedMod2, RejectedModP, Undecided };

struct ModularStages {
    bool mod2 = true;
    bool modp = true;
};

/// Stage order: GF(2), then GF(p). Never rejects a consistent system.
ModularVerdict modular_verdict(std::span<const ColumnVector> a_cols, const ColumnVector& t, std::uint32_t prime,
                               ModularStages stages = {});

bool reject_by_modular_stages(std::span<const ColumnVector> a_cols, const ColumnVector& t, std::uint32_t prime,
                              ModularStages stages = {});

}  // namespace sharp
