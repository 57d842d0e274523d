#include "doctest.h"

#include "rmpc/simnet.hpp"

using namespace rmpc;

namespace {

AdversaryStructure singletons(int n) {
    std::vector<PlayerSet> sets;
    for (int p = 0; p < n; ++p) sets.push_back(PlayerSet::single(p));
    return AdversaryStructure(n, sets);
}

} // namespace

TEST_CASE("transcript lines follow the fixed format") {
    Sim sim(3, singletons(3), 1);
    sim.send_broadcast(0, "hello", {0xab, 0x01});
    sim.next_round();
    sim.send_pairwise(1, 2, "note");
    sim.ot_transfer(0, 2, 0, 1, 1);
    CHECK(sim.transcript_text() == "0|bcast|0|*|hello|ab01\n"
                                   "1|pair|1|2|note|\n"
                                   "1|ot|0|2|ot|\n");
}

TEST_CASE("transcript recording can be suppressed") {
    Sim sim(3, singletons(3), 1);
    sim.record_transcript = false;
    sim.send_broadcast(0, "hello");
    sim.ot_transfer(0, 2, 0, 1, 1);
    CHECK(sim.transcript.empty());
    CHECK(sim.ot_calls.size() == 1); // bookkeeping still happens
}

TEST_CASE("ot delivers the chosen bit and records the flow") {
    Sim sim(3, singletons(3), 7);
    SecretId s0 = sim.ledger.intern("s0"), s1 = sim.ledger.intern("s1");
    auto got = sim.ot_transfer(0, 1, /*b0=*/0, /*b1=*/1, /*choice=*/1, s0, s1);
    REQUIRE(got.has_value());
    CHECK(*got == 1);
    CHECK(sim.ledger.learned_directly(1, s1));
    CHECK_FALSE(sim.ledger.learned_directly(1, s0));

    auto low = sim.ot_transfer(1, 2, 1, 0, 0);
    REQUIRE(low.has_value());
    CHECK(*low == 1);
}

TEST_CASE("scripted ot refusal surfaces as an event, not a delivery") {
    Sim sim(3, singletons(3), 7, {}, parse_strategy("collusion=0; behavior=refuse_ot(0)"));
    auto got = sim.ot_transfer(0, 1, 0, 1, 0);
    CHECK_FALSE(got.has_value());
    REQUIRE(sim.ot_calls.size() == 1);
    CHECK(sim.ot_calls[0].refused);
    CHECK(sim.ot_calls[0].refused_by == 0);
    CHECK(sim.has_event(EventKind::Refusal));

    // a player running the transfer against himself has nothing to refuse
    auto self = sim.ot_transfer(0, 0, 1, 0, 0);
    REQUIRE(self.has_value());
    CHECK(*self == 1);
}

TEST_CASE("conflicts accumulate, repeat edges are no-ops") {
    Sim sim(4, singletons(4), 3);
    CHECK(sim.add_conflict(0, 1, "test"));
    CHECK_FALSE(sim.add_conflict(1, 0, "test again"));
    CHECK(sim.conflicts.in_conflict(0, 1));
    CHECK(sim.events.size() == 1);
    CHECK_THROWS_AS(sim.add_conflict(2, 2, "self"), std::logic_error);
}

TEST_CASE("a second conflict pins the common endpoint") {
    Sim sim(4, singletons(4), 3);
    sim.add_conflict(0, 1, "first");
    try {
        sim.add_conflict(0, 2, "second");
        FAIL("identification expected");
    } catch (const CheaterIdentifiedError& e) {
        CHECK(e.players == PlayerSet::single(0));
    }
    CHECK(sim.has_event(EventKind::CheaterIdentified));
}

TEST_CASE("conflicts no tolerated set can cover violate the model") {
    Sim sim(3, AdversaryStructure(3, {PlayerSet::single(0)}), 3);
    CHECK_THROWS_AS(sim.add_conflict(1, 2, "uncoverable"), AssumptionViolatedError);
}

TEST_CASE("exclusion restricts the live structure") {
    Sim sim(4, AdversaryStructure(4, {PlayerSet::of({0, 1}), PlayerSet::single(2)}), 3);
    sim.exclude(1);
    CHECK(sim.active == PlayerSet::of({0, 2, 3}));
    CHECK(sim.active_structure.contains(PlayerSet::single(0)));
    CHECK_FALSE(sim.active_structure.contains(PlayerSet::of({0, 1})));
    CHECK(sim.active_honest() == PlayerSet::of({0, 2, 3}));
}

TEST_CASE("same seed, same behavior") {
    Sim a(5, singletons(5), 42);
    Sim b(5, singletons(5), 42);
    for (int i = 0; i < 200; ++i) CHECK(a.rng.bit() == b.rng.bit());
}

TEST_CASE("construction validates its inputs") {
    CHECK_THROWS_AS(Sim(0, singletons(0), 1), std::invalid_argument);
    CHECK_THROWS_AS(Sim(4, singletons(3), 1), std::invalid_argument);
    CHECK_THROWS_AS(Sim(3, singletons(3), 1, SecurityParams{1}), std::invalid_argument);
}
