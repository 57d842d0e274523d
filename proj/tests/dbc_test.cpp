#include "doctest.h"

#include "rmpc/dbc.hpp"

using namespace rmpc;

namespace {

AdversaryStructure singletons(int n) {
    std::vector<PlayerSet> sets;
    for (int p = 0; p < n; ++p) sets.push_back(PlayerSet::single(p));
    return AdversaryStructure(n, sets);
}

int count_events(const Sim& sim, EventKind k) {
    int c = 0;
    for (const auto& e : sim.events)
        if (e.kind == k) ++c;
    return c;
}

} // namespace

TEST_CASE("a shared bit is held by everyone and hidden from tolerated sets") {
    for (int b = 0; b < 2; ++b)
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            Sim sim(4, singletons(4), seed);
            Dbc d = dbc_create(sim, 1, b, "in");
            CHECK(d.holders() == PlayerSet::of({0, 1, 2, 3}));
            CHECK(d.owner == 1);
            CHECK(dbc_value(sim, d) == b);
            CHECK(sim.conflicts.edge_count() == 0);
            for (GbcxId id : d.shares)
                if (id != kNone) CHECK(gbcx_live(sim, id));

            // the owner saw every opening; nobody else has enough
            CHECK(sim.ledger.coalition_knows(PlayerSet::single(1), d.value_secret));
            for (PlayerId p : PlayerSet::of({0, 2, 3}).members())
                CHECK_FALSE(sim.ledger.coalition_knows(PlayerSet::single(p), d.value_secret));
            // even all contributors together miss the completing share
            CHECK_FALSE(sim.ledger.coalition_knows(PlayerSet::of({0, 2, 3}), d.value_secret));
        }
}

TEST_CASE("shared bits refuse structures whose tolerated sets span everyone") {
    Sim two(2, singletons(2), 1);
    CHECK_THROWS_AS(dbc_create(two, 0, 1, "in"), PreconditionViolatedError);

    std::vector<PlayerSet> halves = {PlayerSet::of({0, 1}), PlayerSet::of({2, 3})};
    Sim split(4, AdversaryStructure(4, halves), 1);
    CHECK_THROWS_AS(dbc_create(split, 0, 1, "in"), PreconditionViolatedError);
}

TEST_CASE("refusing to open a contribution ends in identification") {
    Sim sim(4, singletons(4), 3, {},
            parse_strategy("collusion=2; behavior=refuse_share_unveil"));
    try {
        dbc_create(sim, 1, 0, "in");
        FAIL("a stubborn refuser must be identified");
    } catch (const CheaterIdentifiedError& e) {
        CHECK(e.players == PlayerSet::single(2));
    }
    CHECK(count_events(sim, EventKind::Refusal) >= 2);
    CHECK(count_events(sim, EventKind::ForcedPublicUnveil) == 1);
    CHECK(sim.in_conflict(1, 2));
}

TEST_CASE("a baseless accusation moves the share into the open and stands") {
    for (int b = 0; b < 2; ++b) {
        Sim sim(4, singletons(4), 4, {},
                parse_strategy("collusion=1; behavior=false_complaint(3)"));
        Dbc d = dbc_create(sim, 1, b, "in");
        CHECK(dbc_value(sim, d) == b);
        CHECK(sim.in_conflict(1, 3));
        CHECK(count_events(sim, EventKind::ForcedPublicUnveil) == 1);
        CHECK(d.shares[3] == kNone); // burned in public, folded into the constant
        CHECK(d.holders() == PlayerSet::of({0, 1, 2}));
        // the opened contribution is common knowledge now
        SecretId sh3 = sim.ledger.intern("in/sh3");
        CHECK(sim.ledger.coalition_knows(PlayerSet::single(0), sh3));
        DbcOpen open = dbc_unveil(sim, d);
        CHECK(open.ok);
        CHECK(open.value == b);
    }
}

TEST_CASE("opening a shared bit returns it to everyone") {
    for (int b = 0; b < 2; ++b)
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            Sim sim(4, singletons(4), seed);
            Dbc d = dbc_create(sim, 0, b, "in");
            DbcOpen open = dbc_unveil(sim, d);
            CHECK(open.ok);
            CHECK(open.value == b);
            CHECK(d.shares.empty());
            // openings leave the bit derivable by anyone
            SecretId val = sim.ledger.intern("in/val");
            for (PlayerId p = 0; p < 4; ++p)
                CHECK(sim.ledger.coalition_knows(PlayerSet::single(p), val));
        }
}

TEST_CASE("lying during the opening phase is caught and identified") {
    Sim sim(4, singletons(4), 5, {},
            parse_strategy("collusion=2; behavior=wrong_unveil(reveal)"));
    Dbc d = dbc_create(sim, 0, 1, "in");
    CHECK(sim.conflicts.edge_count() == 0); // the lie waits for the last phase
    sim.strategy.set_phase(Phase::Reveal);
    try {
        dbc_unveil(sim, d);
        FAIL("the wrong opening must be rejected");
    } catch (const CheaterIdentifiedError& e) {
        CHECK(e.players == PlayerSet::single(2));
    }
    CHECK(count_events(sim, EventKind::InconsistentUnveil) >= 1);
}

TEST_CASE("negation flips the hidden bit in place") {
    for (int b = 0; b < 2; ++b) {
        Sim sim(4, singletons(4), 6);
        Dbc d = dbc_create(sim, 2, b, "in");
        Dbc nd = dbc_not(sim, d, "n1");
        CHECK(d.shares.empty());
        CHECK(dbc_value(sim, nd) == (b ^ 1));
        CHECK(nd.holders() == PlayerSet::of({0, 1, 2, 3}));
        CHECK(gbcx_committer(sim, nd.shares[0]) == 0); // lowest player re-proves
        Dbc back = dbc_not(sim, nd, "n2");
        CHECK(dbc_value(sim, back) == b);
        CHECK(sim.conflicts.edge_count() == 0);
        DbcOpen open = dbc_unveil(sim, back);
        CHECK(open.ok);
        CHECK(open.value == b);
    }
}

TEST_CASE("a negation that keeps the old bit is rejected and pinned") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Sim sim(4, singletons(4), seed, {},
                parse_strategy("collusion=0; behavior=wrong_relation"));
        Dbc d = dbc_create(sim, 2, 1, "in");
        try {
            dbc_not(sim, d, "n");
            FAIL("an equal bit cannot pass the inequality proof");
        } catch (const CheaterIdentifiedError& e) {
            CHECK(e.players == PlayerSet::single(0));
        }
    }
}

TEST_CASE("copies carry the bit independently") {
    for (int b = 0; b < 2; ++b) {
        Sim sim(4, singletons(4), 7);
        Dbc d = dbc_create(sim, 1, b, "in");
        auto [x, y] = dbc_copy(sim, d);
        CHECK(d.shares.empty());
        CHECK(dbc_value(sim, x) == b);
        CHECK(dbc_value(sim, y) == b);
        CHECK(x.owner == 1);
        DbcOpen open = dbc_unveil(sim, x);
        CHECK(open.ok);
        CHECK(open.value == b);
        for (GbcxId id : y.shares)
            if (id != kNone) CHECK(gbcx_live(sim, id));
        Dbc ny = dbc_not(sim, y, "n");
        CHECK(dbc_value(sim, ny) == (b ^ 1));
    }
}

TEST_CASE("a shared bit can be tied to a standing commitment") {
    for (int b = 0; b < 2; ++b) {
        Sim sim(4, singletons(4), 8);
        GbcxId pre = gbcx_create(sim, 2, b, sim.ledger.intern("pre"));
        Dbc d = dbc_create(sim, 2, b, "in");
        CHECK(dbc_matches_commitment(sim, d, pre));
        // both survive the proof on replacement handles
        CHECK(gbcx_live(sim, pre));
        CHECK(dbc_value(sim, d) == b);
        CHECK(d.holders() == PlayerSet::of({0, 1, 2, 3}));
        CHECK(sim.conflicts.edge_count() == 0);
    }
}

TEST_CASE("a shared bit that contradicts the standing commitment pins its owner") {
    Sim sim(4, singletons(4), 9);
    GbcxId pre = gbcx_create(sim, 2, 0, sim.ledger.intern("pre"));
    Dbc d = dbc_create(sim, 2, 1, "in");
    try {
        dbc_matches_commitment(sim, d, pre);
        FAIL("the changed bit must be pinned on the owner");
    } catch (const CheaterIdentifiedError& e) {
        CHECK(e.players == PlayerSet::single(2));
    }
    CHECK(count_events(sim, EventKind::ProofFailure) >= 1);
}

TEST_CASE("equality proofs absorb publicly burned shares") {
    Sim sim(4, singletons(4), 10, {},
            parse_strategy("collusion=2; behavior=false_complaint(0)"));
    GbcxId pre = gbcx_create(sim, 2, 1, sim.ledger.intern("pre"));
    Dbc d = dbc_create(sim, 2, 1, "in");
    CHECK(d.shares[0] == kNone); // the accused share went public
    CHECK(dbc_matches_commitment(sim, d, pre));
    CHECK(dbc_value(sim, d) == 1);
}

TEST_CASE("shared-bit rounds replay bit for bit under one seed") {
    auto run = [&](std::uint64_t seed) {
        Sim sim(4, singletons(4), seed);
        Dbc d = dbc_create(sim, 0, 1, "in");
        Dbc nd = dbc_not(sim, d, "n");
        dbc_unveil(sim, nd);
        return sim.transcript_text();
    };
    CHECK(run(11) == run(11));
    CHECK(run(11) != run(12));
}
