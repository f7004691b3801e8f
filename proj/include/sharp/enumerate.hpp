#pragma once

// Candidate supports: (d-1)/2 monomials of degree 1..d-1 besides the
// implicit x^d and y^d, enumerated as increasing index lists into the
// universe in lexicographic order.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sharp/poly.hpp"

namespace sharp {

struct Universe {
    int degree = 1;
    std::vector<Monomial> monomials;

    std::size_t support_size() const { return static_cast<std::size_t>((degree - 1) / 2); }
};

/// All (a,b) with 1 <= a+b <= d-1 in the global monomial order. Throws
/// std::invalid_argument for even or non-positive d.
Universe universe(int d);

using Support = std::vector<int>;

std::vector<Monomial> support_monomials(const Universe& u, std::span<const int> support);

/// More monomials with b > a than with a > b.
bool is_right_side_heavy(std::span<const Monomial> support);

/// Every row 1..d-1 of the target is touched by some homogenized column.
bool row_coverage_ok(std::span<const Monomial> support, int d);

struct Filters {
    bool adjacency = true;
    bool symmetry = true;
    bool row_coverage = true;

    static Filters none() { return {false, false, false}; }
    friend bool operator==(const Filters&, const Filters&) = default;
};

/// Supports whose first two indices are (first, second); first = -1 means
/// the whole space (used when the support size is below two).
struct Chunk {
    int first = -1;
    int second = -1;

    bool whole() const { return first < 0; }
    friend auto operator<=>(const Chunk&, const Chunk&) = default;
};

/// All index pairs i1 < i2 in lexicographic order, or a single whole-space
/// chunk when (d-1)/2 < 2.
std::vector<Chunk> chunks(int d);

/// Depth-first walk over supports with incremental pruning. Adjacency is
/// checked on every insertion against the chosen monomials and the pure
/// powers, so a violating prefix cuts its whole subtree; a prefix whose
/// every completion is right-side heavy is cut as well.
class SupportCursor {
  public:
    SupportCursor(const Universe& u, Filters filters, std::optional<Chunk> chunk = std::nullopt);

    /// Rewinds to the start of another chunk, keeping the precomputed tables.
    void restart(std::optional<Chunk> chunk);

    /// Moves to the next surviving support; false once exhausted.
    bool advance();

    std::span<const int> support() const { return {idx_.data(), depth_}; }

    /// Lowest position that differs from the previously yielded support.
    std::size_t first_changed() const { return changed_; }

  private:
    int candidate(std::size_t level, int from) const;
    void push(int c);
    void pop();
    bool leaf_ok() const;

    const Universe* u_;
    Filters filters_;
    std::optional<Chunk> chunk_;
    std::size_t k_;
    int n_;

    std::vector<std::vector<int>> neighbours_;
    std::vector<int> blocked_;
    std::vector<int> side_;  // +1 if b > a, -1 if a > b, else 0
    std::vector<std::uint64_t> cover_;
    std::uint64_t required_ = 0;

    std::vector<int> idx_;
    std::vector<std::uint64_t> cover_stack_;
    std::size_t depth_ = 0;
    int balance_ = 0;
    bool started_ = false;
    bool done_ = false;
    std::size_t changed_ = 0;
};

std::optional<Support> next_support(SupportCursor& cursor);

}  // namespace sharp
