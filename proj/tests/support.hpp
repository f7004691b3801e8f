#pragma once

// Test-only helpers: polynomial builders and independent oracles.

#include <random>
#include <string>
#include <vector>

#include "sharp/poly.hpp"

namespace sharp::testing {

inline TriPoly term(int a, int b, const Rational& c = 1) { return TriPoly::monomial({a, b}, c); }

inline TriPoly x() { return TriPoly::x(); }
inline TriPoly y() { return TriPoly::y(); }

/// p(x0, y0) by direct evaluation.
inline Rational evaluate(const TriPoly& p, const Rational& x0, const Rational& y0) {
    Rational sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational v = c;
        for (int i = 0; i < m.a; ++i) v *= x0;
        for (int i = 0; i < m.b; ++i) v *= y0;
        sum += v;
    }
    return sum;
}

/// Constant on x+y=1, checked at deg+1 distinct points of the line (a
/// univariate polynomial of that degree agreeing at that many points is
/// identically 1).
inline bool constant_on_line_by_points(const TriPoly& p) {
    const int n = std::max(p.degree(), 0) + 1;
    for (int i = 0; i < n; ++i) {
        Rational t(i + 1, n + 2);
        t.canonicalize();
        if (evaluate(p, t, 1 - t) != 1) return false;
    }
    return true;
}

inline Rational random_rational(std::mt19937& rng, int range = 9) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, range);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline TriPoly random_poly(std::mt19937& rng, int max_degree, int terms) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    TriPoly p;
    for (int i = 0; i < terms; ++i) {
        int e = deg(rng);
        int a = std::uniform_int_distribution<int>(0, e)(rng);
        p.add_term({a, e - a}, random_rational(rng));
    }
    return p;
}

}  // namespace sharp::testing
