#include "sharp/poly.hpp"

#include <algorithm>
#include <utility>

namespace sharp {

std::string to_string(Monomial m) {
    return "(" + std::to_string(m.a) + "," + std::to_string(m.b) + ")";
}

TriPoly TriPoly::monomial(Monomial m, const Rational& c) {
    TriPoly p;
    p.add_term(m, c);
    return p;
}

void TriPoly::add_term(Monomial m, const Rational& c) {
    if (m.a < 0 || m.b < 0) throw std::invalid_argument("negative exponent in " + to_string(m));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational TriPoly::coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int TriPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TriPoly& TriPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

TriPoly operator*(const TriPoly& l, const TriPoly& r) {
    TriPoly out;
    for (const auto& [ml, cl] : l.terms()) {
        for (const auto& [mr, cr] : r.terms()) {
            out.add_term({ml.a + mr.a, ml.b + mr.b}, Rational(cl * cr));
        }
    }
    return out;
}

TriPoly pow(const TriPoly& p, unsigned e) {
    TriPoly out = TriPoly::constant(1);
    for (unsigned i = 0; i < e; ++i) out = out * p;
    return out;
}

std::strong_ordering compare_terms(const TriPoly& l, const TriPoly& r) {
    auto il = l.terms().begin();
    auto ir = r.terms().begin();
    for (; il != l.terms().end() && ir != r.terms().end(); ++il, ++ir) {
        if (auto c = il->first <=> ir->first; c != 0) return c;
        int c = cmp(il->second, ir->second);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return l.term_count() <=> r.term_count();
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::vector<Rational> substitute_line(const TriPoly& p) {
    std::vector<Rational> out(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
    for (const auto& [m, c] : p.terms()) {
        // x^a (1-x)^b = sum_k C(b,k) (-1)^k x^(a+k)
        for (int k = 0; k <= m.b; ++k) {
            Rational t = c * Rational(binomial(m.b, k));
            if (k % 2) out[static_cast<std::size_t>(m.a + k)] -= t;
            else out[static_cast<std::size_t>(m.a + k)] += t;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

VerificationReport verify_constant_on_line(const TriPoly& p) {
    VerificationReport r;
    auto line = substitute_line(p);
    r.constant_on_line = line.size() == 1 && line[0] == 1;
    r.nonnegative = std::all_of(p.terms().begin(), p.terms().end(),
                                [](const auto& t) { return sgn(t.second) >= 0; });
    r.degree = p.degree();
    r.term_count = p.term_count();
    r.sharp = r.constant_on_line && r.nonnegative &&
              r.degree == 2 * static_cast<int>(r.term_count) - 3;
    return r;
}

ColumnVector homogenize_column(int a, int b, int d) {
    if (a < 0 || b < 0 || d < 0) throw std::invalid_argument("negative exponent or degree");
    if (a + b > d) {
        throw std::invalid_argument("monomial " + to_string({a, b}) + " exceeds degree " +
                                    std::to_string(d));
    }
    ColumnVector col(static_cast<std::size_t>(d) + 1);
    const int n = d - a - b;
    for (int j = b; j <= d - a; ++j) col[static_cast<std::size_t>(j)] = binomial(n, j - b);
    return col;
}

ColumnVector target_vector(int d) {
    if (d < 1) throw std::invalid_argument("target degree must be positive");
    ColumnVector t(static_cast<std::size_t>(d) + 1);
    for (int j = 1; j < d; ++j) t[static_cast<std::size_t>(j)] = binomial(d, j);
    return t;
}

std::vector<Rational> homogenize(const TriPoly& p, int d) {
    std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
    for (const auto& [m, c] : p.terms()) {
        auto col = homogenize_column(m.a, m.b, d);
        for (std::size_t j = 0; j < col.size(); ++j) {
            if (col[j] != 0) out[j] += c * Rational(col[j]);
        }
    }
    return out;
}

namespace {

// Univariate polynomial in y, ascending powers.
using YPoly = std::vector<Rational>;

void trim(YPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// a + (1 - y) * b
YPoly add_shifted(const YPoly& a, const YPoly& b) {
    YPoly out(std::max(a.size(), b.size() + 1));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] += b[i];
        out[i + 1] -= b[i];
    }
    trim(out);
    return out;
}

}  // namespace

TriPoly divide_by_line(const TriPoly& p) {
    TriPoly shifted = p - TriPoly::constant(1);
    if (shifted.is_zero()) return {};

    int xdeg = 0;
    for (const auto& [m, c] : shifted.terms()) xdeg = std::max(xdeg, m.a);

    // coefficients of x^i as polynomials in y
    std::vector<YPoly> rows(static_cast<std::size_t>(xdeg) + 1);
    for (const auto& [m, c] : shifted.terms()) {
        auto& row = rows[static_cast<std::size_t>(m.a)];
        if (row.size() <= static_cast<std::size_t>(m.b)) row.resize(static_cast<std::size_t>(m.b) + 1);
        row[static_cast<std::size_t>(m.b)] = c;
    }

    // synthetic division by x - (1 - y)
    std::vector<YPoly> quot(static_cast<std::size_t>(xdeg));
    YPoly carry;
    for (int i = xdeg; i >= 1; --i) {
        carry = add_shifted(rows[static_cast<std::size_t>(i)], carry);
        quot[static_cast<std::size_t>(i - 1)] = carry;
    }
    YPoly remainder = add_shifted(rows[0], carry);
    if (!remainder.empty()) throw NotDivisible("polynomial is not constant on the line x+y=1");

    TriPoly q;
    for (std::size_t i = 0; i < quot.size(); ++i) {
        for (std::size_t j = 0; j < quot[i].size(); ++j) {
            q.add_term({static_cast<int>(i), static_cast<int>(j)}, quot[i][j]);
        }
    }
    return q;
}

TriPoly swap_variables(const TriPoly& p) {
    TriPoly out;
    for (const auto& [m, c] : p.terms()) out.add_term(swapped(m), c);
    return out;
}

bool is_symmetric(const TriPoly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [&](const auto& t) { return p.coeff(swapped(t.first)) == t.second; });
}

TriPoly group_invariant(int d) {
    if (d < 1 || d % 2 == 0) throw std::invalid_argument("group invariant needs a positive odd degree");
    const TriPoly x = TriPoly::x();
    const TriPoly y = TriPoly::y();
    TriPoly prev = x;                                          // g_1
    TriPoly cur = x * x + TriPoly::monomial({0, 1}, 2);        // g_2
    if (d == 1) return prev + TriPoly::monomial({0, d});
    for (int e = 3; e <= d; ++e) {
        TriPoly next = x * cur + y * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur + TriPoly::monomial({0, d});
}

TriPoly assemble(int d, const std::vector<Monomial>& support, const std::vector<Rational>& coeffs) {
    if (support.size() != coeffs.size()) throw std::invalid_argument("support/coefficient size mismatch");
    TriPoly p = TriPoly::monomial({d, 0}) + TriPoly::monomial({0, d});
    for (std::size_t i = 0; i < support.size(); ++i) p.add_term(support[i], coeffs[i]);
    return p;
}

}  // namespace sharp
