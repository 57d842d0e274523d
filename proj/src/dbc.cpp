#include "rmpc/dbc.hpp"

#include <cassert>
#include <stdexcept>

#include "rmpc/structures.hpp"

namespace rmpc {

namespace {

std::string share_name(const std::string& label, PlayerId p) {
    return label + "/sh" + std::to_string(p);
}

// A contribution that cannot be opened privately is opened toward everyone.
// The value stays usable as a public constant; the commitment is spent.
Bit force_public(Sim& sim, GbcxId share, PlayerId holder) {
    sim.note(EventKind::ForcedPublicUnveil, holder, -1, "share opening moved into the open");
    Unveil u = gbcx_unveil_public(sim, share);
    if (!u.ok)
        throw AssumptionViolatedError("public share opening rejected without identification");
    return u.value;
}

// The group commitment layer throws on a missing commitment; here a missing
// share means the committer survived the conflicts that refusing earns.
GbcxId commit_share(Sim& sim, PlayerId committer, Bit value, SecretId secret) {
    auto ids = gbcx_create_wave(sim, {WaveItem{committer, value, secret, {}}}, sim.active);
    if (ids[0] == kNone)
        throw AssumptionViolatedError("share commitment failed without identification");
    sim.ledger.record(secret, committer, Cause::Chosen);
    return ids[0];
}

} // namespace

GbcxId Dbc::share_of(PlayerId p) const {
    if (p < 0 || std::size_t(p) >= shares.size()) return kNone;
    return shares[p];
}

PlayerSet Dbc::holders() const {
    PlayerSet s;
    for (std::size_t p = 0; p < shares.size(); ++p)
        if (shares[p] != kNone) s.add(PlayerId(p));
    return s;
}

Dbc dbc_create(Sim& sim, PlayerId owner, Bit b, const std::string& label) {
    if (!sim.active.contains(owner)) throw std::logic_error("owner is not active");
    if (!coverage_pair_condition(sim.n, sim.active_structure))
        throw PreconditionViolatedError("two tolerated sets cover every player");

    Dbc d;
    d.shares.assign(kMaxPlayers, kNone);
    d.owner = owner;
    d.value_secret = sim.ledger.intern(label + "/val");

    PlayerSet contributors = sim.active.without(owner);
    std::vector<WaveItem> items;
    std::vector<SecretId> secrets;
    for (PlayerId p : contributors.members()) {
        SecretId s = sim.ledger.intern(share_name(label, p));
        items.push_back(WaveItem{p, sim.rng.bit(), s, {}});
        secrets.push_back(s);
    }
    std::vector<GbcxId> ids = gbcx_create_wave(sim, items, sim.active);

    Bit acc = 0;
    auto mem = contributors.members();
    for (std::size_t i = 0; i < mem.size(); ++i) {
        PlayerId p = mem[i];
        if (ids[i] == kNone)
            throw AssumptionViolatedError("share commitment failed without identification");
        sim.ledger.record(secrets[i], p, Cause::Chosen);

        if (sim.strategy.refuses_share_open(p)) {
            // a stubborn refuser will not open toward the group either
            sim.note(EventKind::Refusal, p, owner, "private share opening");
            sim.add_conflict(owner, p, "private share opening refused");
            sim.note(EventKind::ForcedPublicUnveil, p, -1, "share opening moved into the open");
            sim.note(EventKind::Refusal, p, -1, "public share opening");
            for (PlayerId h : sim.active_honest().members())
                if (h != p) sim.add_conflict(h, p, "public share opening refused");
            throw AssumptionViolatedError("share opening refused without identification");
        }
        Bit v;
        bool live = true;
        if (sim.in_conflict(owner, p)) {
            v = force_public(sim, ids[i], p);
            live = false;
        } else {
            Unveil u = gbcx_unveil_to(sim, ids[i], owner);
            if (!u.ok) {
                sim.add_conflict(owner, p, "private share opening rejected");
                v = force_public(sim, ids[i], p);
                live = false;
            } else {
                v = u.value;
                // the owner may still dispute a perfectly good opening;
                // the share then goes public and the conflict stands
                if (sim.strategy.complaint_targets(owner, PlayerSet::single(p)).contains(p)) {
                    sim.add_conflict(owner, p, "complaint against private opening");
                    Bit w = force_public(sim, ids[i], p);
                    assert(w == v);
                    (void)w;
                    live = false;
                }
            }
        }
        acc ^= v;
        if (live) {
            d.shares[p] = ids[i];
        } else {
            d.public_xor ^= v;
        }
    }

    SecretId own_secret = sim.ledger.intern(share_name(label, owner));
    d.shares[owner] = commit_share(sim, owner, acc ^ b, own_secret);

    std::vector<SecretId> rel;
    rel.push_back(d.value_secret);
    for (SecretId s : secrets) rel.push_back(s);
    rel.push_back(own_secret);
    sim.ledger.relate_xor(rel);
    sim.ledger.record(d.value_secret, owner, Cause::Chosen);
    return d;
}

Bit dbc_value(const Sim& sim, const Dbc& d) {
    Bit x = d.public_xor;
    for (GbcxId id : d.shares)
        if (id != kNone) x ^= gbcx_value(sim, id);
    return x;
}

Dbc dbc_not(Sim& sim, Dbc& d, const std::string& label) {
    PlayerId prover = -1;
    for (std::size_t p = 0; p < d.shares.size(); ++p) {
        if (d.shares[p] != kNone && sim.active.contains(PlayerId(p))) {
            prover = PlayerId(p);
            break;
        }
    }
    if (prover < 0) {
        if (d.shares.empty()) throw std::logic_error("no live share to negate");
        // every share went public: the bit is a known constant and flips
        // locally, nothing to prove
        Dbc out;
        out.shares.assign(kMaxPlayers, kNone);
        out.owner = -1;
        out.public_xor = d.public_xor ^ 1;
        out.value_secret = sim.ledger.intern(label + "/val");
        sim.ledger.relate_xor({out.value_secret});
        d.shares.clear();
        return out;
    }

    GbcxId old = d.shares[prover];
    Bit newv = gbcx_value(sim, old) ^ 1;
    if (sim.strategy.wrong_relation(prover)) newv ^= 1;
    SecretId sec = sim.ledger.intern(share_name(label, prover));
    GbcxId fresh = commit_share(sim, prover, newv, sec);

    // old xor fresh must be 1, shown in the open: per-holder checking would
    // lose the owner's spent copy and with it the teeth of the proof. Only
    // the prover's values enter, so a failure is his to answer for.
    JointProof jp = gbcx_joint_xor_proof(sim, {old, fresh}, 1);
    fresh = jp.kept[1];
    if (!jp.accepted) {
        for (PlayerId h : sim.active_honest().members())
            if (h != prover) sim.add_conflict(h, prover, "negation relation broken");
        throw AssumptionViolatedError("inequality proof rejected without identification");
    }

    Dbc out;
    out.shares = d.shares;
    out.shares[prover] = fresh;
    out.owner = d.owner;
    out.public_xor = d.public_xor;
    out.value_secret = sim.ledger.intern(label + "/val");
    std::vector<SecretId> rel;
    rel.push_back(out.value_secret);
    for (GbcxId id : out.shares)
        if (id != kNone && gbcx_secret(sim, id) != kNoSecret) rel.push_back(gbcx_secret(sim, id));
    sim.ledger.relate_xor(rel);
    d.shares.clear();
    return out;
}

DbcOpen dbc_unveil(Sim& sim, Dbc& d) {
    bool ok = true;
    Bit x = d.public_xor;
    for (GbcxId id : d.shares) {
        if (id == kNone) continue;
        Unveil u = gbcx_unveil_public(sim, id);
        if (!u.ok) ok = false;
        else x ^= u.value;
    }
    d.shares.clear();
    return DbcOpen{ok, x};
}

std::pair<Dbc, Dbc> dbc_copy(Sim& sim, Dbc& d, const std::string&) {
    Dbc a, b;
    a.shares.assign(kMaxPlayers, kNone);
    b.shares.assign(kMaxPlayers, kNone);
    a.owner = b.owner = d.owner;
    a.value_secret = b.value_secret = d.value_secret;
    a.public_xor = b.public_xor = d.public_xor;
    for (std::size_t p = 0; p < d.shares.size(); ++p) {
        if (d.shares[p] == kNone) continue;
        GbcxCopy cp = gbcx_copy(sim, d.shares[p]);
        a.shares[p] = cp.first;
        b.shares[p] = cp.second;
    }
    d.shares.clear();
    return {std::move(a), std::move(b)};
}

bool dbc_matches_commitment(Sim& sim, Dbc& d, GbcxId& pre) {
    std::vector<GbcxId> ops;
    std::vector<std::size_t> slots;
    for (std::size_t p = 0; p < d.shares.size(); ++p) {
        if (d.shares[p] == kNone) continue;
        ops.push_back(d.shares[p]);
        slots.push_back(p);
    }
    ops.push_back(pre);
    JointProof jp = gbcx_joint_xor_proof(sim, ops, d.public_xor);
    for (std::size_t i = 0; i < slots.size(); ++i) d.shares[slots[i]] = jp.kept[i];
    pre = jp.kept.back();
    if (!jp.accepted) {
        if (d.owner < 0) throw std::logic_error("equality proof without an owner");
        for (PlayerId h : sim.active_honest().members())
            if (h != d.owner) sim.add_conflict(h, d.owner, "recommitted input differs");
        return false;
    }
    return true;
}

} // namespace rmpc
