#include "sharp/ratmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace sharp {

SolutionSet solve_exact(std::span<const ColumnVector> a_cols, const ColumnVector& t) {
    const std::size_t rows = t.size();
    const std::size_t m = a_cols.size();
    for (const auto& c : a_cols) {
        if (c.size() != rows) throw std::invalid_argument("column length does not match target");
    }

    // augmented matrix, row-major, last column = t
    std::vector<std::vector<Rational>> r(rows, std::vector<Rational>(m + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < m; ++j) r[i][j] = a_cols[j][i];
        r[i][m] = t[i];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < m && prow < rows; ++c) {
        std::size_t sel = prow;
        while (sel < rows && r[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(r[sel], r[prow]);

        const Rational inv = 1 / r[prow][c];
        for (std::size_t j = c; j <= m; ++j) r[prow][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == prow || r[i][c] == 0) continue;
            const Rational f = r[i][c];
            for (std::size_t j = c; j <= m; ++j) r[i][j] -= f * r[prow][j];
        }
        pivot_cols.push_back(c);
        ++prow;
    }

    SolutionSet out;
    for (std::size_t i = prow; i < rows; ++i) {
        if (r[i][m] != 0) return out;
    }

    out.particular.assign(m, Rational(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) out.particular[pivot_cols[i]] = r[i][m];

    std::vector<bool> is_pivot(m, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < m; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(m, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -r[i][f];
        out.nullspace_basis.push_back(std::move(v));
    }
    out.status = out.nullspace_basis.empty() ? SolutionStatus::Unique : SolutionStatus::Affine;
    return out;
}

namespace {

// constant + sum coef[i] * lambda_i > 0
struct StrictIneq {
    Rational constant;
    RationalVector coef;

    bool homogeneous_zero() const {
        return std::all_of(coef.begin(), coef.end(), [](const Rational& c) { return c == 0; });
    }
};

// Scales so the first nonzero coefficient has magnitude one; keeps the
// inequality equivalent and lets duplicates compare equal.
void normalise(StrictIneq& q) {
    auto it = std::find_if(q.coef.begin(), q.coef.end(), [](const Rational& c) { return c != 0; });
    if (it == q.coef.end()) return;
    const Rational s = 1 / abs(*it);
    q.constant *= s;
    for (auto& c : q.coef) c *= s;
}

void add_unique(std::vector<StrictIneq>& set, StrictIneq q) {
    normalise(q);
    for (const auto& e : set) {
        if (e.constant == q.constant && e.coef == q.coef) return;
    }
    set.push_back(std::move(q));
}

}  // namespace

std::optional<RationalVector> positive_solution(const SolutionSet& s) {
    if (!s.consistent()) return std::nullopt;

    if (s.status == SolutionStatus::Unique) {
        for (const auto& v : s.particular) {
            if (sgn(v) <= 0) return std::nullopt;
        }
        return s.particular;
    }

    const std::size_t dim = s.nullspace_basis.size();
    const std::size_t m = s.particular.size();

    // stages[k] only involves lambda_0 .. lambda_(k-1)
    std::vector<std::vector<StrictIneq>> stages(dim + 1);
    for (std::size_t k = 0; k < m; ++k) {
        StrictIneq q{s.particular[k], RationalVector(dim)};
        for (std::size_t i = 0; i < dim; ++i) q.coef[i] = s.nullspace_basis[i][k];
        if (q.homogeneous_zero()) {
            if (sgn(q.constant) <= 0) return std::nullopt;
            continue;
        }
        add_unique(stages[dim], std::move(q));
    }

    for (std::size_t var = dim; var-- > 0;) {
        std::vector<const StrictIneq*> lower, upper;
        auto& next = stages[var];
        for (const auto& q : stages[var + 1]) {
            int sg = sgn(q.coef[var]);
            if (sg > 0) lower.push_back(&q);
            else if (sg < 0) upper.push_back(&q);
            else add_unique(next, q);
        }
        for (const auto* lo : lower) {
            for (const auto* up : upper) {
                const Rational wl = 1 / lo->coef[var];
                const Rational wu = -1 / up->coef[var];
                StrictIneq q{lo->constant * wl + up->constant * wu, RationalVector(dim)};
                for (std::size_t i = 0; i < var; ++i) q.coef[i] = lo->coef[i] * wl + up->coef[i] * wu;
                if (q.homogeneous_zero()) {
                    if (sgn(q.constant) <= 0) return std::nullopt;
                    continue;
                }
                add_unique(next, std::move(q));
            }
        }
    }
    for (const auto& q : stages[0]) {
        if (sgn(q.constant) <= 0) return std::nullopt;
    }

    RationalVector lambda(dim);
    for (std::size_t var = 0; var < dim; ++var) {
        std::optional<Rational> lo, hi;
        for (const auto& q : stages[var + 1]) {
            const int sg = sgn(q.coef[var]);
            if (sg == 0) continue;
            Rational rest = q.constant;
            for (std::size_t i = 0; i < var; ++i) rest += q.coef[i] * lambda[i];
            const Rational bound = -rest / q.coef[var];
            if (sg > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo && hi) lambda[var] = (*lo + *hi) / 2;
        else if (lo) lambda[var] = *lo + 1;
        else if (hi) lambda[var] = *hi - 1;
        else lambda[var] = 0;
    }

    RationalVector point = s.particular;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < m; ++k) point[k] += lambda[i] * s.nullspace_basis[i][k];
    }
    for (const auto& v : point) {
        if (sgn(v) <= 0) throw std::logic_error("positivity search produced a non-positive point");
    }
    return point;
}

}  // namespace sharp
