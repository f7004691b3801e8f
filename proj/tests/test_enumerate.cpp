#include "doctest.h"
#include "sharp/diagram.hpp"
#include "sharp/enumerate.hpp"
#include "support.hpp"

using namespace sharp;
using namespace sharp::testing;

namespace {

std::vector<Support> collect(SupportCursor& cursor) {
    std::vector<Support> out;
    while (auto s = next_support(cursor)) out.push_back(*s);
    return out;
}

std::vector<Support> all_supports(int d, Filters f) {
    const Universe u = universe(d);
    SupportCursor cursor(u, f);
    return collect(cursor);
}

// Every k-subset in lexicographic order, filtered after the fact.
std::vector<Support> brute_force(int d, Filters f) {
    const Universe u = universe(d);
    const int n = static_cast<int>(u.monomials.size());
    const int k = static_cast<int>(u.support_size());
    std::vector<Support> out;
    Support s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
    const bool adjacency = f.adjacency && d > 1;
    for (;;) {
        auto mons = support_monomials(u, s);
        bool keep = true;
        if (adjacency) {
            auto full = mons;
            full.push_back({d, 0});
            full.push_back({0, d});
            keep = adjacency_violations(full).empty();
        }
        if (keep && f.symmetry) keep = !is_right_side_heavy(mons);
        if (keep && f.row_coverage) keep = row_coverage_ok(mons, d);
        if (keep) out.push_back(s);

        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// Row coverage from the homogenized columns themselves.
bool coverage_from_columns(const std::vector<Monomial>& s, int d) {
    for (int j = 1; j <= d - 1; ++j) {
        bool hit = false;
        for (auto m : s) hit = hit || homogenize_column(m.a, m.b, d)[static_cast<std::size_t>(j)] != 0;
        if (!hit) return false;
    }
    return true;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const Filters kAllFilterSets[] = {
    {false, false, false}, {true, false, false}, {false, true, false}, {false, false, true},
    {true, true, false},   {true, false, true},  {false, true, true},  {true, true, true},
};

}  // namespace

TEST_CASE("universe") {
    auto u3 = universe(3);
    CHECK(u3.monomials == std::vector<Monomial>{{0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}});
    CHECK(u3.support_size() == 1);
    CHECK(universe(1).monomials.empty());
    CHECK(universe(1).support_size() == 0);
    CHECK(universe(19).monomials.size() == 189);
    for (int d = 1; d <= 31; d += 2) {
        auto u = universe(d);
        CHECK(u.monomials.size() == static_cast<std::size_t>(d * (d + 1) / 2 - 1));
        CHECK(std::is_sorted(u.monomials.begin(), u.monomials.end()));
        CHECK(std::adjacent_find(u.monomials.begin(), u.monomials.end()) == u.monomials.end());
    }
    CHECK_THROWS_AS(universe(4), std::invalid_argument);
    CHECK_THROWS_AS(universe(0), std::invalid_argument);
    CHECK_THROWS_AS(universe(-3), std::invalid_argument);
}

TEST_CASE("is_right_side_heavy") {
    std::vector<Monomial> a{{1, 4}, {2, 5}, {9, 1}};
    std::vector<Monomial> b{{3, 1}, {1, 3}};
    std::vector<Monomial> c{{9, 5}};
    std::vector<Monomial> e;
    CHECK(is_right_side_heavy(a));
    CHECK_FALSE(is_right_side_heavy(b));
    CHECK_FALSE(is_right_side_heavy(c));
    CHECK_FALSE(is_right_side_heavy(e));
    std::vector<Monomial> diag{{2, 2}, {0, 1}};
    CHECK(is_right_side_heavy(diag));
}

TEST_CASE("row_coverage_ok") {
    std::vector<Monomial> mid{{1, 1}};
    std::vector<Monomial> left{{2, 0}};
    std::vector<Monomial> pair{{1, 1}, {1, 2}};
    CHECK(row_coverage_ok(mid, 3));
    CHECK_FALSE(row_coverage_ok(left, 3));
    CHECK(row_coverage_ok(pair, 5));
    std::vector<Monomial> none;
    CHECK(row_coverage_ok(none, 1));

    // against the columns for every support up to degree 9
    for (int d = 1; d <= 9; d += 2) {
        const Universe u = universe(d);
        SupportCursor cursor(u, Filters::none());
        while (auto s = next_support(cursor)) {
            auto mons = support_monomials(u, *s);
            CHECK(row_coverage_ok(mons, d) == coverage_from_columns(mons, d));
        }
    }
}

TEST_CASE("chunks") {
    CHECK(chunks(3) == std::vector<Chunk>{Chunk{}});
    CHECK(chunks(1) == std::vector<Chunk>{Chunk{}});
    CHECK(chunks(5).size() == 91);
    CHECK(chunks(7).size() == 351);
    auto c = chunks(9);
    CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK(chunks(9) == c);
}

TEST_CASE("filters-off counts are binomial") {
    CHECK(all_supports(3, Filters::none()).size() == 5);
    CHECK(all_supports(5, Filters::none()).size() == 91);
    for (int d = 1; d <= 9; d += 2) {
        auto u = universe(d);
        CHECK(all_supports(d, Filters::none()).size() == choose(u.monomials.size(), u.support_size()));
    }
    CHECK(all_supports(1, Filters{}).size() == 1);
}

TEST_CASE("cursor agrees with post-hoc filtering") {
    for (int d = 1; d <= 9; d += 2) {
        for (Filters f : kAllFilterSets) {
            CAPTURE(d);
            CAPTURE(f.adjacency);
            CAPTURE(f.symmetry);
            CAPTURE(f.row_coverage);
            auto got = all_supports(d, f);
            CHECK(got == brute_force(d, f));
            CHECK(std::is_sorted(got.begin(), got.end()));
        }
    }
}

TEST_CASE("filters only remove supports") {
    for (int d = 3; d <= 9; d += 2) {
        auto all = all_supports(d, Filters::none());
        for (Filters f : kAllFilterSets) {
            auto some = all_supports(d, f);
            CHECK(std::includes(all.begin(), all.end(), some.begin(), some.end()));
        }
    }
}

TEST_CASE("d = 3 with all filters on") {
    // (2,0) and (0,2) touch the pure terms, (0,1) is right side heavy
    auto u = universe(3);
    std::vector<std::vector<Monomial>> mons;
    for (const auto& s : all_supports(3, Filters{})) mons.push_back(support_monomials(u, s));
    CHECK(mons == std::vector<std::vector<Monomial>>{{{1, 0}}, {{1, 1}}});
}

TEST_CASE("chunks partition the enumeration") {
    for (int d = 5; d <= 11; d += 2) {
        const Universe u = universe(d);
        for (Filters f : {Filters::none(), Filters{}}) {
            if (d > 9 && f == Filters::none()) continue;
            auto whole = all_supports(d, f);
            std::vector<Support> joined;
            bool prefixes_match = true;
            SupportCursor cursor(u, f, chunks(d).front());
            for (const Chunk& c : chunks(d)) {
                cursor.restart(c);
                for (const auto& s : collect(cursor)) {
                    prefixes_match = prefixes_match && s[0] == c.first && s[1] == c.second;
                    joined.push_back(s);
                }
            }
            CHECK(prefixes_match);
            CHECK(joined == whole);
        }
    }
}

TEST_CASE("enumeration is deterministic") {
    CHECK(all_supports(11, Filters{}) == all_supports(11, Filters{}));
    const Universe u = universe(9);
    SupportCursor a(u, Filters{}, Chunk{0, 5});
    SupportCursor b(u, Filters{}, Chunk{0, 5});
    CHECK(collect(a) == collect(b));
}

TEST_CASE("first_changed marks the shared prefix") {
    for (int d = 3; d <= 9; d += 2) {
        const Universe u = universe(d);
        for (Filters f : kAllFilterSets) {
            SupportCursor cursor(u, f);
            Support prev;
            bool first = true;
            while (cursor.advance()) {
                Support cur(cursor.support().begin(), cursor.support().end());
                std::size_t common = 0;
                if (!first) {
                    while (common < cur.size() && cur[common] == prev[common]) ++common;
                    CHECK(cursor.first_changed() <= common);
                } else {
                    CHECK(cursor.first_changed() == 0);
                }
                prev = cur;
                first = false;
            }
        }
    }
}

TEST_CASE("chunk arguments") {
    const Universe u1 = universe(3);
    CHECK_THROWS_AS(SupportCursor(u1, Filters{}, Chunk{0, 1}), std::invalid_argument);
    CHECK_NOTHROW(SupportCursor(u1, Filters{}, Chunk{}));
    const Universe big = universe(65);
    CHECK_THROWS_AS(SupportCursor(big, Filters{}), std::invalid_argument);
    // a chunk whose second index leaves no room yields nothing
    const Universe u7 = universe(7);
    SupportCursor tail(u7, Filters::none(), Chunk{0, static_cast<int>(u7.monomials.size()) - 1});
    CHECK_FALSE(tail.advance());
}
