#pragma once

// Newton-diagram measurements of q = (p - 1) / (x + y - 1).

#include <string>
#include <utility>
#include <vector>

#include "sharp/poly.hpp"

namespace sharp {

enum class Sign : char { Positive = 'P', Negative = 'N', Zero = '0' };

/// rows[e][j] is the sign of the coefficient of x^(e-j) y^j.
struct SignGrid {
    std::vector<std::vector<Sign>> rows;
};

struct DiagramReport {
    int sinks = 0;
    int sources = 0;
    bool connected = false;
    bool top_row_alternating = false;

    int total() const { return sinks + sources; }
};

SignGrid sign_grid(const TriPoly& q);

/// Centered triangle, highest degree row on top.
std::string render(const SignGrid& grid);

/// Sinks are positive terms of p - 1, sources negative ones (the constant -1
/// included). Throws NotDivisible if p is not constant on the line and
/// std::invalid_argument for p = 1.
DiagramReport sinks_sources(const TriPoly& p);

/// Triangular-lattice neighbours: (a±1,b), (a,b±1), (a+1,b-1), (a-1,b+1).
bool are_adjacent(Monomial m, Monomial n);

bool is_connected(const TriPoly& q);

using MonomialPair = std::pair<Monomial, Monomial>;

/// Every adjacent pair in the support; empty means admissible.
std::vector<MonomialPair> adjacency_violations(const std::vector<Monomial>& support);

}  // namespace sharp
