#include "doctest.h"
#include "sharp/poly.hpp"
#include "support.hpp"

using namespace sharp;
using namespace sharp::testing;

namespace {

TriPoly cubic() { return term(3, 0) + term(1, 1, 3) + term(0, 3); }

ColumnVector ints(std::initializer_list<long> v) {
    ColumnVector out;
    for (long e : v) out.emplace_back(e);
    return out;
}

std::vector<Rational> rats(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long e : v) out.emplace_back(e);
    return out;
}

}  // namespace

TEST_CASE("monomial order is degree then exponent of x") {
    CHECK(Monomial{0, 1} < Monomial{1, 0});
    CHECK(Monomial{1, 0} < Monomial{0, 2});
    CHECK(Monomial{2, 0} < Monomial{0, 3});
    CHECK(Monomial{1, 1} == Monomial{1, 1});
}

TEST_CASE("terms cancel to nothing") {
    TriPoly p = term(2, 1, 3);
    p.add_term({2, 1}, -3);
    CHECK(p.is_zero());
    CHECK(p.degree() == -1);
    CHECK_THROWS_AS(p.add_term({-1, 0}, 1), std::invalid_argument);
}

TEST_CASE("substitute_line") {
    CHECK(substitute_line(x() + y()) == rats({1}));
    CHECK(substitute_line(cubic()) == rats({1}));
    CHECK(substitute_line(term(2, 0)) == rats({0, 0, 1}));
    CHECK(substitute_line(TriPoly{}).empty());
    CHECK(constant_on_line_by_points(cubic()));
}

TEST_CASE("verify_constant_on_line") {
    auto gi = verify_constant_on_line(group_invariant(19));
    CHECK(gi.sharp);
    CHECK(gi.term_count == 11);
    CHECK(gi.degree == 19);

    auto cube = verify_constant_on_line(pow(x() + y(), 3));
    CHECK(cube.constant_on_line);
    CHECK(cube.nonnegative);
    CHECK(cube.term_count == 4);
    CHECK_FALSE(cube.sharp);

    CHECK(verify_constant_on_line(cubic()).sharp);

    // constant on the line but a negative coefficient
    TriPoly signed_poly = TriPoly::constant(1) + (x() + y() - TriPoly::constant(1)) * term(1, 0, -1);
    auto r = verify_constant_on_line(signed_poly);
    CHECK(r.constant_on_line);
    CHECK_FALSE(r.nonnegative);
    CHECK_FALSE(r.sharp);
}

TEST_CASE("homogenize_column and target_vector") {
    CHECK(homogenize_column(1, 1, 3) == ints({0, 1, 1, 0}));
    CHECK(homogenize_column(0, 0, 2) == ints({1, 2, 1}));
    auto top = homogenize_column(19, 0, 19);
    CHECK(top.size() == 20);
    CHECK(top[0] == 1);
    for (std::size_t j = 1; j < top.size(); ++j) CHECK(top[j] == 0);
    CHECK_THROWS_AS(homogenize_column(2, 2, 3), std::invalid_argument);

    CHECK(target_vector(3) == ints({0, 3, 3, 0}));
    CHECK(target_vector(1) == ints({0, 0}));
    CHECK(target_vector(5) == ints({0, 5, 10, 10, 5, 0}));
}

TEST_CASE("homogenized column entries sum to a power of two") {
    for (int d = 0; d <= 25; ++d) {
        for (int a = 0; a <= d; ++a) {
            for (int b = 0; a + b <= d; ++b) {
                Integer sum = 0;
                for (const auto& e : homogenize_column(a, b, d)) {
                    CHECK(e >= 0);
                    sum += e;
                }
                Integer expect;
                mpz_ui_pow_ui(expect.get_mpz_t(), 2, static_cast<unsigned long>(d - a - b));
                CHECK(sum == expect);
            }
        }
    }
}

TEST_CASE("homogenized column matches expanding x^a y^b (x+y)^n") {
    for (int d = 1; d <= 9; ++d) {
        for (int a = 0; a <= d; ++a) {
            for (int b = 0; a + b <= d; ++b) {
                TriPoly h = term(a, b) * pow(x() + y(), static_cast<unsigned>(d - a - b));
                auto col = homogenize_column(a, b, d);
                for (int j = 0; j <= d; ++j) CHECK(Rational(col[static_cast<std::size_t>(j)]) == h.coeff({d - j, j}));
            }
        }
    }
}

TEST_CASE("divide_by_line") {
    TriPoly q = divide_by_line(cubic());
    TriPoly expect = term(2, 0) - term(1, 1) + term(0, 2) + term(1, 0) + term(0, 1) + TriPoly::constant(1);
    CHECK(q == expect);
    CHECK(divide_by_line(x() + y()) == TriPoly::constant(1));
    CHECK_THROWS_AS(divide_by_line(term(2, 0)), NotDivisible);
    CHECK(divide_by_line(TriPoly::constant(1)).is_zero());
    // p - 1 without any x
    CHECK_THROWS_AS(divide_by_line(term(0, 2)), NotDivisible);
}

TEST_CASE("line constancy: substitution agrees with homogenization") {
    std::mt19937 rng(20240611);
    const TriPoly line = x() + y() - TriPoly::constant(1);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = std::uniform_int_distribution<int>(1, 9)(rng);
        TriPoly p = random_poly(rng, d - 1, 4);
        if (trial % 2 == 0) p = TriPoly::constant(1) + line * p;  // constant on the line
        if (p.degree() > d || p.is_zero()) continue;

        const bool by_substitution = substitute_line(p) == std::vector<Rational>{1};
        auto hom = homogenize(p, d);
        const TriPoly full = pow(x() + y(), static_cast<unsigned>(d));
        bool by_homogenization = true;
        for (int j = 0; j <= d; ++j) {
            by_homogenization = by_homogenization && hom[static_cast<std::size_t>(j)] == full.coeff({d - j, j});
        }
        CHECK(by_substitution == by_homogenization);
        CHECK(by_substitution == constant_on_line_by_points(p));
    }
}

TEST_CASE("divide_by_line round trip") {
    std::mt19937 rng(7);
    const TriPoly line = x() + y() - TriPoly::constant(1);
    for (int trial = 0; trial < 200; ++trial) {
        TriPoly r = random_poly(rng, 8, 6);
        TriPoly p = TriPoly::constant(1) + line * r;
        TriPoly q = divide_by_line(p);
        CHECK(line * q + TriPoly::constant(1) == p);
        if (!r.is_zero()) {
            CHECK(q.degree() == p.degree() - 1);
        }
        // perturb off the line
        TriPoly bad = p + term(0, 1, 1);
        if (!constant_on_line_by_points(bad)) CHECK_THROWS_AS(divide_by_line(bad), NotDivisible);
    }
}

TEST_CASE("swap_variables") {
    CHECK(swap_variables(cubic()) == cubic());
    CHECK(is_symmetric(cubic()));
    CHECK_FALSE(is_symmetric(group_invariant(21)));
    CHECK(swap_variables(group_invariant(21)) != group_invariant(21));

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        TriPoly p = random_poly(rng, 7, 5);
        CHECK(swap_variables(swap_variables(p)) == p);
        auto l = verify_constant_on_line(p);
        auto r = verify_constant_on_line(swap_variables(p));
        CHECK(l.constant_on_line == r.constant_on_line);
        CHECK(l.nonnegative == r.nonnegative);
        CHECK(l.sharp == r.sharp);
    }
}

TEST_CASE("group_invariant") {
    CHECK(group_invariant(1) == x() + y());
    CHECK(group_invariant(3) == cubic());
    CHECK_THROWS_AS(group_invariant(4), std::invalid_argument);
    CHECK_THROWS_AS(group_invariant(-1), std::invalid_argument);

    // published coefficient lists, descending powers of x, y^d last
    TriPoly g19 = group_invariant(19);
    std::vector<long> c19{1, 19, 152, 665, 1729, 2717, 2508, 1254, 285, 19};
    for (int k = 0; k < 10; ++k) CHECK(g19.coeff({19 - 2 * k, k}) == c19[static_cast<std::size_t>(k)]);
    CHECK(g19.coeff({0, 19}) == 1);
    CHECK(g19.term_count() == 11);

    TriPoly g21 = group_invariant(21);
    std::vector<long> c21{1, 21, 189, 952, 2940, 5733, 7007, 5148, 2079, 385, 21};
    for (int k = 0; k < 11; ++k) CHECK(g21.coeff({21 - 2 * k, k}) == c21[static_cast<std::size_t>(k)]);
    CHECK(g21.coeff({0, 21}) == 1);
    CHECK(g21.term_count() == 12);

    for (int d = 1; d <= 31; d += 2) {
        TriPoly g = group_invariant(d);
        CHECK(g.term_count() == static_cast<std::size_t>((d + 3) / 2));
        for (const auto& [m, c] : g.terms()) CHECK(sgn(c) > 0);
        CHECK(verify_constant_on_line(g).sharp);
    }
}

TEST_CASE("compare_terms is a total order consistent with equality") {
    CHECK(compare_terms(cubic(), cubic()) == 0);
    CHECK(compare_terms(x(), x() + y()) > 0);   // (0,1) sorts before (1,0)
    CHECK(compare_terms(term(1, 0), term(1, 0) + term(2, 0)) < 0);
    CHECK(compare_terms(term(1, 0, 2), term(1, 0, 3)) < 0);
}
