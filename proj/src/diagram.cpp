#include "sharp/diagram.hpp"

#include <algorithm>
#include <cstdlib>

namespace sharp {

SignGrid sign_grid(const TriPoly& q) {
    SignGrid grid;
    const int deg = std::max(q.degree(), 0);
    grid.rows.resize(static_cast<std::size_t>(deg) + 1);
    for (int e = 0; e <= deg; ++e) grid.rows[static_cast<std::size_t>(e)].assign(static_cast<std::size_t>(e) + 1, Sign::Zero);
    for (const auto& [m, c] : q.terms()) {
        grid.rows[static_cast<std::size_t>(m.degree())][static_cast<std::size_t>(m.b)] =
            sgn(c) > 0 ? Sign::Positive : Sign::Negative;
    }
    return grid;
}

std::string render(const SignGrid& grid) {
    std::string out;
    const std::size_t width = grid.rows.empty() ? 0 : grid.rows.size() - 1;
    for (auto row = grid.rows.rbegin(); row != grid.rows.rend(); ++row) {
        out.append(width - (row->size() - 1), ' ');
        for (std::size_t i = 0; i < row->size(); ++i) {
            if (i) out += ' ';
            out += static_cast<char>((*row)[i]);
        }
        out += '\n';
    }
    return out;
}

bool are_adjacent(Monomial m, Monomial n) {
    const int da = n.a - m.a;
    const int db = n.b - m.b;
    return (std::abs(da) + std::abs(db) == 1) || (da == 1 && db == -1) || (da == -1 && db == 1);
}

bool is_connected(const TriPoly& q) {
    if (q.term_count() <= 1) return true;
    std::vector<Monomial> nodes;
    for (const auto& [m, c] : q.terms()) nodes.push_back(m);
    std::vector<bool> seen(nodes.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t cur = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (!seen[i] && are_adjacent(nodes[cur], nodes[i])) {
                seen[i] = true;
                ++reached;
                stack.push_back(i);
            }
        }
    }
    return reached == nodes.size();
}

DiagramReport sinks_sources(const TriPoly& p) {
    if (p == TriPoly::constant(1)) throw std::invalid_argument("p = 1 has an empty diagram");
    const TriPoly q = divide_by_line(p);
    const TriPoly shifted = p - TriPoly::constant(1);

    DiagramReport r;
    for (const auto& [m, c] : shifted.terms()) (sgn(c) > 0 ? r.sinks : r.sources) += 1;
    r.connected = is_connected(q);

    const SignGrid grid = sign_grid(q);
    const auto& top = grid.rows.back();
    r.top_row_alternating = std::none_of(top.begin(), top.end(), [](Sign s) { return s == Sign::Zero; });
    for (std::size_t i = 1; i < top.size() && r.top_row_alternating; ++i) {
        r.top_row_alternating = top[i] != top[i - 1];
    }
    return r;
}

std::vector<MonomialPair> adjacency_violations(const std::vector<Monomial>& support) {
    std::vector<Monomial> sorted(support);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<MonomialPair> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (are_adjacent(sorted[i], sorted[j])) out.emplace_back(sorted[i], sorted[j]);
        }
    }
    return out;
}

}  // namespace sharp
