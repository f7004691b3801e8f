#include "sharp/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "sharp/diagram.hpp"

namespace sharp {

Universe universe(int d) {
    if (d < 1 || d % 2 == 0) throw std::invalid_argument("degree must be odd");
    Universe u;
    u.degree = d;
    for (int deg = 1; deg <= d - 1; ++deg) {
        for (int a = 0; a <= deg; ++a) u.monomials.push_back({a, deg - a});
    }
    return u;
}

std::vector<Monomial> support_monomials(const Universe& u, std::span<const int> support) {
    std::vector<Monomial> out;
    out.reserve(support.size());
    for (int i : support) out.push_back(u.monomials.at(static_cast<std::size_t>(i)));
    return out;
}

bool is_right_side_heavy(std::span<const Monomial> support) {
    int balance = 0;
    for (auto m : support) balance += (m.b > m.a) - (m.a > m.b);
    return balance > 0;
}

bool row_coverage_ok(std::span<const Monomial> support, int d) {
    for (int j = 1; j <= d - 1; ++j) {
        bool hit = std::any_of(support.begin(), support.end(), [&](Monomial m) { return m.b <= j && j <= d - m.a; });
        if (!hit) return false;
    }
    return true;
}

std::vector<Chunk> chunks(int d) {
    const Universe u = universe(d);
    if (u.support_size() < 2) return {Chunk{}};
    const int n = static_cast<int>(u.monomials.size());
    std::vector<Chunk> out;
    out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) out.push_back({i, j});
    }
    return out;
}

namespace {

std::uint64_t row_span(int lo, int hi) {
    // bits lo..hi inclusive, hi <= 63
    const std::uint64_t upto = hi >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (hi + 1)) - 1;
    const std::uint64_t below = (std::uint64_t{1} << lo) - 1;
    return upto & ~below;
}

}  // namespace

SupportCursor::SupportCursor(const Universe& u, Filters filters, std::optional<Chunk> chunk)
    : u_(&u), filters_(filters), chunk_(chunk), k_(u.support_size()), n_(static_cast<int>(u.monomials.size())) {
    const int d = u.degree;
    if (d > 63) throw std::invalid_argument("support enumeration is limited to degree 63");
    if (chunk_ && chunk_->whole()) chunk_.reset();
    if (chunk_ && k_ < 2) throw std::invalid_argument("chunk prefixes need a support of size two or more");
    if (d == 1) filters_.adjacency = false;

    const auto n = u.monomials.size();
    neighbours_.resize(n);
    blocked_.assign(n, 0);
    side_.resize(n);
    cover_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Monomial m = u.monomials[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (are_adjacent(m, u.monomials[j])) neighbours_[i].push_back(static_cast<int>(j));
        }
        side_[i] = (m.b > m.a) - (m.a > m.b);
        cover_[i] = row_span(m.b, d - m.a);
        if (filters_.adjacency && (are_adjacent(m, {d, 0}) || are_adjacent(m, {0, d}))) blocked_[i] = 1;
    }
    required_ = d > 1 ? row_span(1, d - 1) : 0;

    idx_.assign(k_, -1);
    cover_stack_.assign(k_ + 1, 0);
}

void SupportCursor::restart(std::optional<Chunk> chunk) {
    while (depth_ > 0) pop();
    chunk_ = chunk;
    if (chunk_ && chunk_->whole()) chunk_.reset();
    if (chunk_ && k_ < 2) throw std::invalid_argument("chunk prefixes need a support of size two or more");
    started_ = false;
    done_ = false;
    changed_ = 0;
}

int SupportCursor::candidate(std::size_t level, int from) const {
    const int hi = n_ - static_cast<int>(k_ - level);
    const int remaining = static_cast<int>(k_ - level - 1);
    auto allowed = [&](int c) {
        if (filters_.adjacency && blocked_[static_cast<std::size_t>(c)] != 0) return false;
        if (filters_.symmetry && balance_ + side_[static_cast<std::size_t>(c)] > remaining) return false;
        return true;
    };
    if (chunk_ && level < 2) {
        const int c = level == 0 ? chunk_->first : chunk_->second;
        return (c >= from && c <= hi && allowed(c)) ? c : -1;
    }
    for (int c = from; c <= hi; ++c) {
        if (allowed(c)) return c;
    }
    return -1;
}

void SupportCursor::push(int c) {
    const auto i = static_cast<std::size_t>(c);
    idx_[depth_] = c;
    cover_stack_[depth_ + 1] = cover_stack_[depth_] | cover_[i];
    balance_ += side_[i];
    if (filters_.adjacency) {
        for (int nb : neighbours_[i]) ++blocked_[static_cast<std::size_t>(nb)];
    }
    ++depth_;
}

void SupportCursor::pop() {
    --depth_;
    const auto i = static_cast<std::size_t>(idx_[depth_]);
    balance_ -= side_[i];
    if (filters_.adjacency) {
        for (int nb : neighbours_[i]) --blocked_[static_cast<std::size_t>(nb)];
    }
}

bool SupportCursor::leaf_ok() const {
    return !filters_.row_coverage || (cover_stack_[k_] & required_) == required_;
}

bool SupportCursor::advance() {
    if (done_) return false;
    int from = 0;
    std::size_t changed = 0;
    if (!started_) {
        started_ = true;
        if (k_ == 0) {
            changed_ = 0;
            if (leaf_ok()) return true;
            done_ = true;
            return false;
        }
    } else {
        if (k_ == 0) {
            done_ = true;
            return false;
        }
        from = idx_[depth_ - 1] + 1;
        pop();
        changed = depth_;
    }

    for (;;) {
        if (depth_ == k_) {
            if (leaf_ok()) {
                changed_ = changed;
                return true;
            }
            from = idx_[depth_ - 1] + 1;
            pop();
            changed = std::min(changed, depth_);
            continue;
        }
        const int c = candidate(depth_, from);
        if (c < 0) {
            if (depth_ == 0) {
                done_ = true;
                return false;
            }
            from = idx_[depth_ - 1] + 1;
            pop();
            changed = std::min(changed, depth_);
            continue;
        }
        push(c);
        from = c + 1;
    }
}

std::optional<Support> next_support(SupportCursor& cursor) {
    if (!cursor.advance()) return std::nullopt;
    auto s = cursor.support();
    return Support(s.begin(), s.end());
}

}  // namespace sharp
