#include "rmpc/gates.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "rmpc/structures.hpp"

namespace rmpc {

namespace {

std::string share_name(const std::string& label, PlayerId p) {
    return label + "/sh" + std::to_string(p);
}

// Proofs consume their operands; run them on throwaway duplicates and hand
// the surviving duplicate back through the reference.
GbcxId proof_copy(Sim& sim, GbcxId& handle) {
    GbcxCopy cp = gbcx_copy(sim, handle);
    if (!cp.ok) return kNone;
    handle = cp.second;
    return cp.first;
}

GbcxId fresh_share(Sim& sim, PlayerId committer, Bit value, SecretId secret) {
    auto ids = gbcx_create_wave(sim, {WaveItem{committer, value, secret, {}}}, sim.active);
    if (ids[0] == kNone)
        throw AssumptionViolatedError("share commitment failed without identification");
    sim.ledger.record(secret, committer, Cause::Chosen);
    return ids[0];
}

// Fold a pile of one player's commitments into one fresh commitment and
// prove the xor relation. The pile is consumed. The proof runs in the open:
// piles mix shares whose audience copies are spent, which would thin a
// per-holder check below the identification threshold. Only the folding
// player's values enter, so a failure is his to answer for.
GbcxId consolidate(Sim& sim, PlayerId who, std::vector<GbcxId> pile, SecretId secret) {
    Bit v = 0;
    for (GbcxId g : pile) v ^= gbcx_value(sim, g);
    if (sim.strategy.wrong_relation(who)) v ^= 1;
    GbcxId fresh = fresh_share(sim, who, v, secret);
    std::vector<GbcxId> ops = std::move(pile);
    ops.push_back(fresh);
    JointProof jp = gbcx_joint_xor_proof(sim, ops, 0);
    fresh = jp.kept.back();
    if (!jp.accepted) {
        for (PlayerId h : sim.active_honest().members())
            if (h != who) sim.add_conflict(h, who, "folded share relation broken");
        throw AssumptionViolatedError("consolidation proof rejected without identification");
    }
    return fresh;
}

// Largest tolerated set contained in the conflicts. Empty when none is; an
// empty maximal set never counts.
PlayerSet swallowed_rep(const Sim& sim, PlayerSet conflicts) {
    PlayerSet rep;
    bool found = false;
    for (PlayerSet a : sim.active_structure.maximal_sets()) {
        if (a.empty() || !a.subset_of(conflicts)) continue;
        if (!found || PlayerSet::lex_less(rep, a)) {
            rep = a;
            found = true;
        }
    }
    return found ? rep : PlayerSet{};
}

} // namespace

PandResult pand(Sim& sim, PlayerId alice, PlayerId bob, GbcxId a_com, GbcxId b_com,
                int force_mask, const std::string& label) {
    if (!sim.active.contains(alice) || !sim.active.contains(bob))
        throw std::logic_error("gate endpoint is not active");
    if (gbcx_committer(sim, a_com) != alice || gbcx_committer(sim, b_com) != bob)
        throw std::logic_error("gate operand committed by the wrong player");

    Bit a = gbcx_value(sim, a_com);
    Bit b = gbcx_value(sim, b_com);
    Bit mask = force_mask < 0 ? sim.rng.bit() : Bit(force_mask & 1);

    SecretId s0 = sim.ledger.intern(label + "/m0");
    SecretId s1 = sim.ledger.intern(label + "/m1");
    GbcxId g0 = gbcx_create(sim, alice, mask, s0);
    GbcxId g1 = gbcx_create(sim, alice, mask ^ a, s1);
    if (g0 == kNone || g1 == kNone) return {};
    sim.ledger.record(s0, alice, Cause::Chosen);
    sim.ledger.record(s1, alice, Cause::Chosen);

    Cot2Result r = cot2(sim, alice, bob, g0, g1, b);
    if (!r.delivered || !r.consistent) return {};

    SecretId so = sim.ledger.intern(label + "/out");
    GbcxId out = gbcx_create(sim, bob, r.received, so);
    if (out == kNone) return {};
    sim.ledger.record(so, bob, Cause::Chosen);

    PandResult res;
    res.ok = true;
    res.alice_share = g0;
    res.bob_share = out;
    return res;
}

PandResult gpand(Sim& sim, const LinearCode& code, PlayerId alice, PlayerId bob,
                 GbcxId& a_in, GbcxId& b_in, const std::string& label) {
    if (gbcx_committer(sim, a_in) != alice || gbcx_committer(sim, b_in) != bob)
        throw std::logic_error("gate operand committed by the wrong player");

    Bit a = gbcx_value(sim, a_in);
    Bit mask = sim.rng.bit();
    Bit other = mask ^ a;
    if (sim.strategy.wrong_relation(alice)) other ^= 1; // caught by the proof below

    GcotResult r = gcot(sim, code, alice, bob, mask, other, b_in, label);
    b_in = r.choice;

    // the transferred pair must hide the committed input: a0 xor a1 xor a == 0.
    // Shown in the open, since the input may be a share whose audience copy
    // is spent; the pair and the input are all alice's, so she answers for it.
    JointProof jp = gbcx_joint_xor_proof(sim, {r.a0, r.a1, a_in}, 0);
    r.a0 = jp.kept[0];
    r.a1 = jp.kept[1];
    a_in = jp.kept[2];
    if (!jp.accepted) {
        for (PlayerId h : sim.active_honest().members())
            if (h != alice)
                sim.add_conflict(h, alice, "masked pair does not hide the input");
        throw AssumptionViolatedError("masking proof rejected without identification");
    }

    // the proof made the dependency public; mirror it for the analysis
    SecretId sa = gbcx_secret(sim, a_in);
    SecretId s0 = gbcx_secret(sim, r.a0);
    SecretId s1 = gbcx_secret(sim, r.a1);
    if (sa != kNoSecret && s0 != kNoSecret && s1 != kNoSecret)
        sim.ledger.relate_xor({s0, s1, sa});

    PandResult res;
    res.ok = true;
    res.alice_share = r.a0;
    res.bob_share = r.out;
    return res;
}

DirectionPolicy default_policy(const AdversaryStructure& structure) {
    DirectionPolicy pol;
    bool found = false;
    for (PlayerSet s : structure.maximal_sets()) {
        if (!found || PlayerSet::lex_less(pol.chosen_b, s)) {
            pol.chosen_b = s;
            found = true;
        }
    }
    return pol;
}

std::pair<PlayerId, PlayerId> ot_direction(const Sim& sim, PlayerId p, PlayerId q,
                                           const DirectionPolicy& policy) {
    if (p == q) throw std::logic_error("direction needs two distinct players");
    if (!sim.active.contains(p) || !sim.active.contains(q))
        throw std::logic_error("direction endpoint is not active");

    // normalized so the answer depends on the pair, not the argument order
    PlayerId lo = std::min(p, q), hi = std::max(p, q);
    PlayerSet nlo = sim.active_conflicts_of(lo);
    PlayerSet nhi = sim.active_conflicts_of(hi);

    PlayerSet b = policy.chosen_b.intersect(sim.active);
    bool exact_lo = !b.empty() && nlo == b;
    bool exact_hi = !b.empty() && nhi == b;
    if (exact_lo != exact_hi)
        return exact_lo ? std::pair{lo, hi} : std::pair{hi, lo};

    PlayerSet rep_lo = swallowed_rep(sim, nlo);
    PlayerSet rep_hi = swallowed_rep(sim, nhi);
    if (rep_lo.empty() != rep_hi.empty())
        return rep_hi.empty() ? std::pair{lo, hi} : std::pair{hi, lo};
    if (!rep_lo.empty() && rep_lo != rep_hi)
        return PlayerSet::lex_less(rep_hi, rep_lo) ? std::pair{lo, hi}
                                                   : std::pair{hi, lo};
    return {lo, hi};
}

Dbc dbc_and(Sim& sim, const LinearCode& code, Dbc& x, Dbc& y,
            const DirectionPolicy& policy, const std::string& label) {
    if (&x == &y)
        throw std::logic_error("a gate needs two distinct shared bits; copy first");
    if (!robustness_precondition(sim.n, sim.active_structure))
        throw PreconditionViolatedError("two tolerated sets cover all players but one");

    Bit px = x.public_xor, py = y.public_xor;
    std::vector<std::vector<GbcxId>> collected(kMaxPlayers);

    // a public factor keeps the other operand's shares linear: fold in copies
    if (py) {
        for (PlayerId i : sim.active.members()) {
            if (x.shares[i] == kNone) continue;
            GbcxId dup = proof_copy(sim, x.shares[i]);
            if (dup == kNone)
                throw AssumptionViolatedError("share duplication failed without identification");
            collected[i].push_back(dup);
        }
    }
    if (px) {
        for (PlayerId j : sim.active.members()) {
            if (y.shares[j] == kNone) continue;
            GbcxId dup = proof_copy(sim, y.shares[j]);
            if (dup == kNone)
                throw AssumptionViolatedError("share duplication failed without identification");
            collected[j].push_back(dup);
        }
    }

    // one group-checked pand per ordered pair of live shares
    for (PlayerId i : sim.active.members()) {
        if (x.shares[i] == kNone) continue;
        for (PlayerId j : sim.active.members()) {
            if (y.shares[j] == kNone) continue;
            PlayerId snd = i, rcv = j;
            if (i != j) {
                auto dir = ot_direction(sim, i, j, policy);
                snd = dir.first;
                rcv = dir.second;
            }
            std::string plabel =
                label + "/p" + std::to_string(i) + "_" + std::to_string(j);
            PandResult pr = (snd == i)
                                ? gpand(sim, code, snd, rcv, x.shares[i], y.shares[j], plabel)
                                : gpand(sim, code, snd, rcv, y.shares[j], x.shares[i], plabel);
            assert(pr.ok);
            collected[snd].push_back(pr.alice_share);
            collected[rcv].push_back(pr.bob_share);
        }
    }

    Dbc out;
    out.shares.assign(kMaxPlayers, kNone);
    out.owner = -1;
    out.value_secret = sim.ledger.intern(label + "/val");
    out.public_xor = px & py;

    std::vector<SecretId> parts{out.value_secret};
    for (PlayerId k : sim.active.members()) {
        if (collected[k].empty()) continue;
        SecretId s = sim.ledger.intern(share_name(label, k));
        out.shares[k] = consolidate(sim, k, std::move(collected[k]), s);
        parts.push_back(s);
    }
    sim.ledger.relate_xor(parts);

    x.shares.clear();
    y.shares.clear();
    return out;
}

Dbc dbc_xor(Sim& sim, Dbc& x, Dbc& y, const std::string& label) {
    if (&x == &y)
        throw std::logic_error("a gate needs two distinct shared bits; copy first");

    Dbc out;
    out.shares.assign(kMaxPlayers, kNone);
    out.owner = x.owner == y.owner ? x.owner : -1;
    out.value_secret = sim.ledger.intern(label + "/val");
    out.public_xor = x.public_xor ^ y.public_xor;

    std::vector<SecretId> parts{out.value_secret};
    for (PlayerId k : sim.active.members()) {
        std::vector<GbcxId> pile;
        if (x.shares[k] != kNone) pile.push_back(x.shares[k]);
        if (y.shares[k] != kNone) pile.push_back(y.shares[k]);
        if (pile.empty()) continue;
        SecretId s = sim.ledger.intern(share_name(label, k));
        out.shares[k] = consolidate(sim, k, std::move(pile), s);
        parts.push_back(s);
    }
    sim.ledger.relate_xor(parts);

    x.shares.clear();
    y.shares.clear();
    return out;
}

} // namespace rmpc
