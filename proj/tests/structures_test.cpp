#include "doctest.h"

#include <random>
#include <sstream>

#include "rmpc/structures.hpp"

using namespace rmpc;

namespace {

// Independent oracle for the guaranteed-cheater set: walk all 2^n subsets,
// keep those that are vertex covers and lie in the structure, intersect.
// Deliberately ignores the maximal-set shortcut used by the implementation.
PlayerSet cheater_oracle(const ConflictGraph& g, const AdversaryStructure& a) {
    PlayerSet acc = PlayerSet::full(g.n());
    bool any = false;
    for (std::uint32_t bits = 0; bits < (1u << g.n()); ++bits) {
        PlayerSet s(bits);
        if (!g.covered_by(s)) continue;
        if (!a.contains(s)) continue;
        acc = acc.intersect(s);
        any = true;
    }
    REQUIRE(any);
    return acc;
}

AdversaryStructure singletons(int n) {
    std::vector<PlayerSet> m;
    for (int p = 0; p < n; ++p) m.push_back(PlayerSet::single(p));
    return AdversaryStructure(n, m);
}

} // namespace

TEST_CASE("player sets behave as bitmask subsets") {
    PlayerSet s = PlayerSet::of({0, 2, 3});
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    CHECK(s.subset_of(PlayerSet::full(4)));
    CHECK(PlayerSet::of({0, 2}).proper_subset_of(s));
    CHECK(s.complement(5) == PlayerSet::of({1, 4}));
    CHECK(s.to_string() == "{0,2,3}");
    CHECK(PlayerSet::lex_less(PlayerSet::of({0, 2}), PlayerSet::of({1})));
}

TEST_CASE("adversary structure keeps only maximal sets") {
    AdversaryStructure a(4, {PlayerSet::of({0, 1}), PlayerSet::of({0}),
                             PlayerSet::of({2}), PlayerSet::of({0, 1})});
    REQUIRE(a.maximal_sets().size() == 2);
    CHECK(a.maximal_sets()[0] == PlayerSet::of({0, 1}));
    CHECK(a.maximal_sets()[1] == PlayerSet::of({2}));
    CHECK(a.contains(PlayerSet::of({1})));
    CHECK(a.contains(PlayerSet()));
    CHECK_FALSE(a.contains(PlayerSet::of({1, 2})));
}

TEST_CASE("membership works through subset inclusion") {
    AdversaryStructure a(5, {PlayerSet::of({0, 1, 2}), PlayerSet::of({3, 4})});
    CHECK(a.contains(PlayerSet::of({0, 2})));
    CHECK(a.contains(PlayerSet::of({4})));
    CHECK_FALSE(a.contains(PlayerSet::of({2, 3})));
}

TEST_CASE("restriction rebuilds the antichain") {
    AdversaryStructure a(5, {PlayerSet::of({0, 1}), PlayerSet::of({1, 2})});
    AdversaryStructure r = a.restrict_to(PlayerSet::of({0, 1, 3, 4}));
    // {1,2} collapses onto {1} which is dominated by {0,1}
    REQUIRE(r.maximal_sets().size() == 1);
    CHECK(r.maximal_sets()[0] == PlayerSet::of({0, 1}));
}

TEST_CASE("robustness precondition rejects pair coverage of all but one") {
    // five players, singletons: any two sets cover two players
    CHECK(robustness_precondition(5, singletons(5)));
    // {0,1} and {2,3} cover everything except player 4
    AdversaryStructure bad(5, {PlayerSet::of({0, 1}), PlayerSet::of({2, 3})});
    CHECK_FALSE(robustness_precondition(5, bad));
    // two players never qualify, regardless of the structure
    CHECK_FALSE(robustness_precondition(2, AdversaryStructure(2, {PlayerSet()})));
    // a single set holding all but one player pairs with itself
    AdversaryStructure huge(4, {PlayerSet::of({0, 1, 2})});
    CHECK_FALSE(robustness_precondition(4, huge));
}

TEST_CASE("coverage pair condition is weaker than robustness") {
    AdversaryStructure a(5, {PlayerSet::of({0, 1}), PlayerSet::of({2, 3})});
    CHECK(coverage_pair_condition(5, a));      // union misses player 4
    CHECK_FALSE(robustness_precondition(5, a));
    AdversaryStructure b(4, {PlayerSet::of({0, 1}), PlayerSet::of({2, 3})});
    CHECK_FALSE(coverage_pair_condition(4, b)); // union is everything

    // property: robustness implies coverage, on random structures
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + int(rng() % 6);
        int k = 1 + int(rng() % 4);
        std::vector<PlayerSet> sets;
        for (int i = 0; i < k; ++i)
            sets.push_back(PlayerSet(std::uint32_t(rng()) & ((1u << n) - 1)));
        AdversaryStructure s(n, sets);
        if (robustness_precondition(n, s)) CHECK(coverage_pair_condition(n, s));
    }
}

TEST_CASE("conflict graph rejects self loops and tracks neighbours") {
    ConflictGraph g(4);
    g.add_conflict(0, 2);
    g.add_conflict(2, 3);
    CHECK(g.in_conflict(2, 0));
    CHECK_FALSE(g.in_conflict(0, 3));
    CHECK(g.neighbours(2) == PlayerSet::of({0, 3}));
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(g.add_conflict(1, 1), std::invalid_argument);
}

TEST_CASE("vertex covers are minimal and lexicographically ordered") {
    ConflictGraph g(4);
    g.add_conflict(0, 1);
    g.add_conflict(0, 2);
    g.add_conflict(0, 3);
    auto covers = vertex_covers(g);
    REQUIRE(covers.size() == 2);
    CHECK(covers[0] == PlayerSet::of({0}));
    CHECK(covers[1] == PlayerSet::of({1, 2, 3}));

    ConflictGraph empty(3);
    auto none = vertex_covers(empty);
    REQUIRE(none.size() == 1);
    CHECK(none[0] == PlayerSet());
}

TEST_CASE("cover soundness on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + int(rng() % 7);
        ConflictGraph g(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 3 == 0) g.add_conflict(a, b);
        for (PlayerSet c : vertex_covers(g)) {
            for (auto [a, b] : g.edges()) CHECK((c.contains(a) || c.contains(b)));
            for (PlayerId p : c.members()) {
                PlayerSet t = c;
                t.remove(p);
                CHECK_FALSE(g.covered_by(t));
            }
        }
    }
}

TEST_CASE("consistency asks for a tolerated cover") {
    ConflictGraph g(4);
    g.add_conflict(0, 1);
    g.add_conflict(2, 3);
    AdversaryStructure a(4, {PlayerSet::of({0})});
    CHECK_FALSE(is_consistent(g, a));
    AdversaryStructure b(4, {PlayerSet::of({0, 2})});
    CHECK(is_consistent(g, b));
    // growing the structure can only help
    AdversaryStructure c(4, {PlayerSet::of({0}), PlayerSet::of({0, 2})});
    CHECK(is_consistent(g, c));
}

TEST_CASE("guaranteed cheaters: star against singleton structure") {
    ConflictGraph g(4);
    g.add_conflict(0, 1);
    g.add_conflict(0, 2);
    g.add_conflict(0, 3);
    auto m = identify_cheaters(g, singletons(4));
    CHECK(m == PlayerSet::of({0}));
}

TEST_CASE("guaranteed cheaters: single edge pins nobody down") {
    ConflictGraph g(4);
    g.add_conflict(0, 1);
    auto m = identify_cheaters(g, singletons(4));
    CHECK(m == PlayerSet());
}

TEST_CASE("guaranteed cheaters: inconsistent structure throws") {
    ConflictGraph g(4);
    g.add_conflict(0, 1);
    g.add_conflict(2, 3);
    CHECK_THROWS_AS(identify_cheaters(g, singletons(4)), std::logic_error);
}

TEST_CASE("guaranteed cheaters match the exhaustive oracle on random instances") {
    std::mt19937_64 rng(20260816);
    int done = 0;
    while (done < 200) {
        int n = 3 + int(rng() % 6); // up to 8 players
        ConflictGraph g(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 4 == 0) g.add_conflict(a, b);
        int k = 1 + int(rng() % 4);
        std::vector<PlayerSet> sets;
        for (int i = 0; i < k; ++i)
            sets.push_back(PlayerSet(std::uint32_t(rng()) & ((1u << n) - 1)));
        AdversaryStructure a(n, sets);
        if (!is_consistent(g, a)) continue;
        CHECK(identify_cheaters(g, a) == cheater_oracle(g, a));
        ++done;
    }
}

TEST_CASE("structure text format round trips") {
    std::string text = "P=5\n0,1\n\n2\n";
    AdversaryStructure a = parse_adversary_structure_text(text);
    CHECK(a.n() == 5);
    REQUIRE(a.maximal_sets().size() == 2);
    CHECK(a.maximal_sets()[0] == PlayerSet::of({0, 1}));
    CHECK(a.maximal_sets()[1] == PlayerSet::of({2}));

    std::string out = format_adversary_structure(a);
    AdversaryStructure b = parse_adversary_structure_text(out);
    CHECK(b.maximal_sets() == a.maximal_sets());

    CHECK_THROWS_WITH(parse_adversary_structure_text("0,1\n"),
                      doctest::Contains("P=<n>"));
    CHECK_THROWS_WITH(parse_adversary_structure_text("P=3\n0,9\n"),
                      doctest::Contains("line 2"));
    CHECK_THROWS_WITH(parse_adversary_structure_text("P=3\n0,x\n"),
                      doctest::Contains("line 2"));
}
