#pragma once

// Exact sparse polynomials in x and y, and the line-constancy machinery
// built on them.
//
// Conventions shared by every module:
//   * monomials are ordered by (total degree, exponent of x);
//   * a degree-d column vector has entry j holding the coefficient of
//     x^(d-j) y^j.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sharp {

using Integer = mpz_class;
using Rational = mpq_class;

/// x^a y^b.
struct Monomial {
    int a = 0;
    int b = 0;

    constexpr int degree() const { return a + b; }

    friend constexpr bool operator==(Monomial, Monomial) = default;
    friend constexpr std::strong_ordering operator<=>(Monomial l, Monomial r) {
        if (auto c = l.degree() <=> r.degree(); c != 0) return c;
        return l.a <=> r.a;
    }
};

constexpr Monomial swapped(Monomial m) { return {m.b, m.a}; }

std::string to_string(Monomial m);

/// Coefficient vector of a homogeneous degree-d form, entry j <-> x^(d-j) y^j.
using ColumnVector = std::vector<Integer>;

class NotDivisible : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Sparse polynomial with exact rational coefficients. Zero coefficients are
/// never stored.
class TriPoly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    TriPoly() = default;

    static TriPoly monomial(Monomial m, const Rational& c = 1);
    static TriPoly constant(const Rational& c) { return monomial({0, 0}, c); }
    static TriPoly x() { return monomial({1, 0}); }
    static TriPoly y() { return monomial({0, 1}); }

    // Adds c to the coefficient of m; the term disappears if it cancels.
    void add_term(Monomial m, const Rational& c);
    Rational coeff(Monomial m) const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial.
    int degree() const;

    TriPoly& operator+=(const TriPoly& o);
    TriPoly& operator-=(const TriPoly& o);
    TriPoly& operator*=(const Rational& c);

    friend TriPoly operator+(TriPoly l, const TriPoly& r) { return l += r; }
    friend TriPoly operator-(TriPoly l, const TriPoly& r) { return l -= r; }
    friend TriPoly operator*(TriPoly l, const Rational& c) { return l *= c; }
    friend TriPoly operator*(const TriPoly& l, const TriPoly& r);

    friend bool operator==(const TriPoly& l, const TriPoly& r) { return l.terms_ == r.terms_; }

  private:
    TermMap terms_;
};

TriPoly pow(const TriPoly& p, unsigned e);

/// Lexicographic comparison of the sorted term lists: monomial first, then
/// coefficient; a proper prefix compares less.
std::strong_ordering compare_terms(const TriPoly& l, const TriPoly& r);

/// Coefficients of p(x, 1-x) in ascending powers of x, trailing zeros
/// trimmed (the zero polynomial gives an empty sequence).
std::vector<Rational> substitute_line(const TriPoly& p);

struct VerificationReport {
    bool constant_on_line = false;
    bool nonnegative = false;
    int degree = -1;
    std::size_t term_count = 0;
    bool sharp = false;
};

VerificationReport verify_constant_on_line(const TriPoly& p);

/// Coefficients of x^a y^b (x+y)^(d-a-b). Throws std::invalid_argument if
/// a+b > d or any argument is negative.
ColumnVector homogenize_column(int a, int b, int d);

/// Coefficients of (x+y)^d - x^d - y^d.
ColumnVector target_vector(int d);

/// Homogenizes every term of p to degree d and sums the columns.
std::vector<Rational> homogenize(const TriPoly& p, int d);

/// q with (x+y-1) q + 1 = p. Long division in x over Q[y].
/// Throws NotDivisible when p is not constant on the line.
TriPoly divide_by_line(const TriPoly& p);

TriPoly swap_variables(const TriPoly& p);
bool is_symmetric(const TriPoly& p);

/// g_d + y^d with g_1 = x, g_2 = x^2 + 2y, g_e = x g_(e-1) + y g_(e-2).
/// Throws std::invalid_argument for even or non-positive d.
TriPoly group_invariant(int d);

/// x^d + y^d + sum coeffs[i] * support[i].
TriPoly assemble(int d, const std::vector<Monomial>& support, const std::vector<Rational>& coeffs);

Integer binomial(int n, int k);

}  // namespace sharp
