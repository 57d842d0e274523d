#include "rmpc/commit.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rmpc {

Bit FixedChallenges::next() {
    if (at >= bits.size()) throw std::logic_error("challenge vector exhausted");
    return bits[at++];
}

namespace {

std::vector<std::uint8_t> le32(std::uint32_t v) {
    return {std::uint8_t(v), std::uint8_t(v >> 8), std::uint8_t(v >> 16), std::uint8_t(v >> 24)};
}

BcxRec& rec_of(Sim& sim, BcxId id) {
    if (id >= sim.bcxs.size()) throw std::logic_error("unknown commitment");
    return sim.bcxs[id];
}

const BcxRec& rec_of(const Sim& sim, BcxId id) {
    if (id >= sim.bcxs.size()) throw std::logic_error("unknown commitment");
    return sim.bcxs[id];
}

GbcxRec& grec_of(Sim& sim, GbcxId id) {
    if (id >= sim.gbcxs.size()) throw std::logic_error("unknown group commitment");
    return sim.gbcxs[id];
}

const GbcxRec& grec_of(const Sim& sim, GbcxId id) {
    if (id >= sim.gbcxs.size()) throw std::logic_error("unknown group commitment");
    return sim.gbcxs[id];
}

// First slot of payload or linkage pair k. Copies carry a remap into their
// donor block; linkage pairs are never remapped.
std::uint32_t pair_slot(const BcxRec& r, int k, bool link) {
    if (link) {
        assert(k >= 0 && k < r.m_link);
        return r.base + 2u * std::uint32_t(r.m + k);
    }
    assert(k >= 0 && k < r.m);
    if (r.sel.empty()) return r.base + 2u * std::uint32_t(k);
    return r.base + 2u * std::uint32_t(r.sel[std::size_t(k)]);
}

void require_live(const BcxRec& r) {
    if (r.state != BcxState::Live) throw std::logic_error("commitment already consumed");
}

// Lays `count` fresh pairs for `value`, the first `rigged` of them flipped.
std::uint32_t lay_pairs(Sim& sim, Bit value, int count, int rigged) {
    std::uint32_t base = std::uint32_t(sim.slots.size());
    for (int k = 0; k < count; ++k) {
        Bit left = sim.rng.bit();
        Bit v = value ^ (k < rigged ? 1 : 0);
        sim.slots.push_back(CommitSlot{std::uint8_t(left)});
        sim.slots.push_back(CommitSlot{std::uint8_t(left ^ v)});
    }
    return base;
}

BcxId bcx_commit_value(Sim& sim, PlayerId committer, PlayerId verifier, Bit value,
                       SecretId secret, int m_link) {
    int m = sim.params.m;
    int rig = sim.strategy.rig_count(committer, m);
    BcxRec rec;
    rec.committer = committer;
    rec.verifier = verifier;
    rec.state = BcxState::Live;
    rec.value = value;
    rec.m = std::uint16_t(m);
    rec.m_link = std::uint16_t(m_link);
    rec.rig_mask = rig > 0 ? ((1u << rig) - 1u) : 0u;
    rec.secret = secret;
    rec.base = std::uint32_t(sim.slots.size());
    for (int k = 0; k < m; ++k) {
        Bit left = sim.rng.bit();
        Bit v = value ^ ((rec.rig_mask >> k) & 1u);
        sim.slots.push_back(CommitSlot{std::uint8_t(left)});
        sim.slots.push_back(CommitSlot{std::uint8_t(left ^ v)});
    }
    for (int k = 0; k < m_link; ++k) {
        Bit left = sim.rng.bit();
        sim.slots.push_back(CommitSlot{std::uint8_t(left)});
        sim.slots.push_back(CommitSlot{std::uint8_t(left ^ value)});
    }
    BcxId id = BcxId(sim.bcxs.size());
    sim.bcxs.push_back(std::move(rec));
    sim.send_pairwise(committer, verifier, "bcx.commit", le32(id));
    return id;
}

CopyResult bcx_copy_impl(Sim& sim, BcxId src_id, Bit laid_value) {
    BcxRec& src = rec_of(sim, src_id);
    require_live(src);
    const int m = src.m;
    const PlayerId committer = src.committer;
    const PlayerId verifier = src.verifier;

    int rig = sim.strategy.rig_count(committer, 3 * m);
    std::uint32_t base = lay_pairs(sim, laid_value, 3 * m, rig);
    sim.send_pairwise(committer, verifier, "bcx.copy", le32(src_id));

    // the verifier decides which third gets checked against the original
    std::vector<std::uint16_t> idx(std::size_t(3 * m));
    std::iota(idx.begin(), idx.end(), std::uint16_t(0));
    for (std::size_t i = idx.size() - 1; i > 0; --i) {
        std::size_t j = std::size_t(sim.rng.below(std::uint64_t(i + 1)));
        std::swap(idx[i], idx[j]);
    }
    auto take = [&](std::size_t from) {
        std::vector<std::uint16_t> part(idx.begin() + long(from), idx.begin() + long(from + std::size_t(m)));
        std::sort(part.begin(), part.end());
        return part;
    };
    std::vector<std::uint16_t> check = take(0), one = take(std::size_t(m)), two = take(std::size_t(2 * m));

    BcxRec probe;
    probe.committer = committer;
    probe.verifier = verifier;
    probe.state = BcxState::Live;
    probe.value = laid_value;
    probe.m = std::uint16_t(m);
    probe.m_link = 0;
    probe.base = base;
    probe.sel = std::move(check);
    probe.rig_mask = 0;
    probe.secret = src.secret;
    BcxId probe_id = BcxId(sim.bcxs.size());
    sim.bcxs.push_back(std::move(probe));

    RngChallenges chal(sim.rng);
    ProofResult eq = bcx_prove_linear(sim, {src_id, probe_id}, 0, chal);
    if (!eq.accepted) return CopyResult{false, kNone, kNone};

    auto make_copy = [&](std::vector<std::uint16_t> sel) {
        BcxRec rec;
        rec.committer = committer;
        rec.verifier = verifier;
        rec.state = BcxState::Live;
        rec.value = laid_value;
        rec.m = std::uint16_t(m);
        rec.m_link = 0;
        rec.base = base;
        rec.sel = std::move(sel);
        rec.rig_mask = 0;
        rec.secret = sim.bcxs[src_id].secret;
        BcxId id = BcxId(sim.bcxs.size());
        sim.bcxs.push_back(std::move(rec));
        return id;
    };
    BcxId a = make_copy(std::move(one));
    BcxId b = make_copy(std::move(two));
    return CopyResult{true, a, b};
}

} // namespace

BcxId bcx_commit(Sim& sim, PlayerId committer, PlayerId verifier, Bit value,
                 SecretId secret, int m_link) {
    return bcx_commit_value(sim, committer, verifier, value, secret, m_link);
}

Bit bcx_half(const Sim& sim, BcxId id, int pair, int side, bool link) {
    const BcxRec& r = rec_of(sim, id);
    return sim.slots[pair_slot(r, pair, link) + std::uint32_t(side)].bit;
}

Bit bcx_pair_xor(const Sim& sim, BcxId id, int pair) {
    return Bit(bcx_half(sim, id, pair, 0, false) ^ bcx_half(sim, id, pair, 1, false));
}

Bit bcx_link_xor(const Sim& sim, BcxId id, int pair) {
    return Bit(bcx_half(sim, id, pair, 0, true) ^ bcx_half(sim, id, pair, 1, true));
}

Unveil bcx_unveil(Sim& sim, BcxId id, PlayerId audience) {
    BcxRec& r = rec_of(sim, id);
    require_live(r);
    r.state = BcxState::Consumed;
    const std::string tag = "bcx.open";
    if (sim.strategy.aborted(r.committer)) {
        sim.note(EventKind::Refusal, r.committer, audience, "opening refused");
        return Unveil{false, 0};
    }
    // the opening claims a value on the channel; a lie is caught against
    // the committed halves below
    bool lies = sim.strategy.wrong_open(r.committer);
    Bit claimed = bcx_pair_xor(sim, id, 0) ^ (lies ? 1 : 0);
    std::vector<std::uint8_t> payload = le32(id);
    payload.push_back(claimed);
    if (audience < 0) sim.send_broadcast(r.committer, tag, payload);
    else sim.send_pairwise(r.committer, audience, tag, payload);

    if (lies) {
        sim.note(EventKind::InconsistentUnveil, r.committer, audience, "wrong value offered");
        return Unveil{false, 0};
    }
    Bit v = bcx_pair_xor(sim, id, 0);
    for (int k = 1; k < r.m; ++k) {
        if (bcx_pair_xor(sim, id, k) != v) {
            sim.note(EventKind::InconsistentUnveil, r.committer, audience, "pairs disagree");
            return Unveil{false, 0};
        }
    }
    if (audience < 0) sim.ledger.record_all(r.secret, sim.active, Cause::Unveil);
    else sim.ledger.record(r.secret, audience, Cause::Unveil);
    return Unveil{true, v};
}

ProofResult bcx_prove_linear(Sim& sim, const std::vector<BcxId>& operands, Bit c,
                             ChallengeSource& challenges) {
    if (operands.empty()) throw std::logic_error("proof needs operands");
    const BcxRec& first = rec_of(sim, operands[0]);
    const int m = first.m;
    for (BcxId id : operands) {
        const BcxRec& r = rec_of(sim, id);
        require_live(r);
        if (r.committer != first.committer || r.verifier != first.verifier || r.m != first.m)
            throw std::logic_error("proof operands must match committer, verifier and size");
    }
    for (BcxId id : operands) rec_of(sim, id).state = BcxState::Consumed;

    sim.send_pairwise(first.committer, first.verifier, "bcx.prove", le32(operands[0]));

    // Per pair the committer first announces the xor of the left halves;
    // the verifier then opens one side. The left side always matches the
    // announcement, the right side additionally forces the relation, so a
    // pair whose values xor to the wrong bit survives only a left pick.
    bool ok = true;
    for (int k = 0; k < m; ++k) {
        Bit sum = 0;
        for (BcxId id : operands) sum ^= bcx_pair_xor(sim, id, k);
        Bit side = challenges.next();
        if (side == 1 && sum != c) ok = false;
    }
    if (!ok) sim.note(EventKind::ProofFailure, first.committer, first.verifier, "linear relation");
    return ProofResult{ok};
}

CopyResult bcx_copy(Sim& sim, BcxId src) {
    return bcx_copy_impl(sim, src, rec_of(sim, src).value);
}

CopyResult bcx_copy_substituted(Sim& sim, BcxId src, Bit laid_value) {
    return bcx_copy_impl(sim, src, laid_value);
}

// ---- group commitments -------------------------------------------------

void surface_complaints(Sim& sim, std::vector<PendingComplaint>& pending) {
    for (const PendingComplaint& pc : pending) {
        if (!sim.active.contains(pc.complainer) || !sim.active.contains(pc.target)) continue;
        sim.add_conflict(pc.complainer, pc.target, pc.cause);
    }
    pending.clear();
}

namespace {

GbcxRec& live_grec(Sim& sim, GbcxId id) {
    GbcxRec& g = grec_of(sim, id);
    if (g.state != BcxState::Live) throw std::logic_error("group commitment already consumed");
    return g;
}

BcxId holder_bcx_of(const GbcxRec& g, PlayerId h) {
    for (const auto& [holder, bcx] : g.holder_bcx)
        if (holder == h) return bcx;
    return kNone;
}

} // namespace

PlayerSet gbcx_verifiers(const Sim& sim, GbcxId id) {
    const GbcxRec& g = grec_of(sim, id);
    PlayerSet out;
    for (const auto& [holder, bcx] : g.holder_bcx) {
        if (!sim.active.contains(holder)) continue;
        if (sim.in_conflict(holder, g.committer)) continue;
        if (rec_of(sim, bcx).state != BcxState::Live) continue;
        out = out.with(holder);
    }
    return out;
}

std::vector<GbcxId> gbcx_create_wave(Sim& sim, const std::vector<WaveItem>& items,
                                     PlayerSet participants,
                                     std::vector<PendingComplaint>* defer) {
    participants = participants.intersect(sim.active);
    if (participants.size() < 2) throw std::logic_error("group commitment needs participants");
    const int m = sim.params.m;
    std::vector<PendingComplaint> local;
    std::vector<PendingComplaint>& pend = defer ? *defer : local;

    std::vector<GbcxId> out(items.size(), kNone);
    std::vector<bool> dead(items.size(), false);

    for (std::size_t i = 0; i < items.size(); ++i) {
        const WaveItem& it = items[i];
        if (!participants.contains(it.committer))
            throw std::logic_error("wave committer must participate");
        if (sim.strategy.aborted(it.committer)) {
            sim.note(EventKind::Refusal, it.committer, -1, "no commitment delivered");
            for (PlayerId h : participants.intersect(sim.active_honest()).members()) {
                if (h != it.committer) pend.push_back({h, it.committer, "no commitment delivered"});
            }
            dead[i] = true;
            continue;
        }
        GbcxRec rec;
        rec.committer = it.committer;
        rec.value = it.value;
        rec.state = BcxState::Live;
        rec.secret = it.secret;
        rec.participants = participants;
        for (PlayerId h : participants.members()) {
            if (h == it.committer) continue;
            Bit hv = it.value;
            for (const auto& [op, ov] : it.value_overrides)
                if (op == h) hv = ov;
            rec.holder_bcx.emplace_back(h, bcx_commit_value(sim, it.committer, h, hv, it.secret, m));
        }
        out[i] = GbcxId(sim.gbcxs.size());
        sim.gbcxs.push_back(std::move(rec));
    }
    sim.next_round();

    // m public challenge rounds shared by the whole wave: claims first, one
    // joint coin per round, then broadcast openings of the picked halves of
    // that round's linkage pair. Receivers holding different values survive
    // each round with probability one half.
    for (int k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (out[i] == kNone || dead[i]) continue;
            sim.send_broadcast(items[i].committer, "gbcx.claim", le32(std::uint32_t(k)));
        }
        Bit side = coin_toss(sim, participants);
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (out[i] == kNone || dead[i]) continue;
            GbcxRec& g = sim.gbcxs[out[i]];
            sim.send_broadcast(g.committer, "gbcx.reveal", le32(std::uint32_t(k)));
            if (side == 1) {
                Bit ref = bcx_link_xor(sim, g.holder_bcx.front().second, k);
                for (const auto& [holder, bcx] : g.holder_bcx) {
                    if (bcx_link_xor(sim, bcx, k) != ref) {
                        sim.note(EventKind::ProofFailure, g.committer, holder,
                                 "cross-receiver consistency");
                        for (PlayerId h : participants.intersect(sim.active_honest()).members()) {
                            if (h != g.committer)
                                pend.push_back({h, g.committer, "inconsistent copies"});
                        }
                        g.state = BcxState::Consumed;
                        dead[i] = true;
                        break;
                    }
                }
            }
        }
        sim.next_round();
    }

    // complaint opportunity for the whole wave
    PlayerSet committers;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (out[i] != kNone && !dead[i]) committers = committers.with(items[i].committer);
    for (PlayerId p : participants.members()) {
        PlayerSet targets = sim.strategy.complaint_targets(p, committers.without(p));
        for (PlayerId t : targets.members()) pend.push_back({p, t, "complaint against commitment"});
    }

    if (!defer) surface_complaints(sim, local);
    for (std::size_t i = 0; i < items.size(); ++i)
        if (dead[i]) out[i] = kNone;
    return out;
}

GbcxId gbcx_create(Sim& sim, PlayerId committer, Bit value, SecretId secret) {
    auto ids = gbcx_create_wave(sim, {WaveItem{committer, value, secret, {}}}, sim.active, nullptr);
    if (ids[0] == kNone) throw std::logic_error("commitment not delivered");
    return ids[0];
}

Bit coin_toss(Sim& sim, PlayerSet participants) {
    participants = participants.intersect(sim.active);
    std::uint32_t toss = sim.next_seq();
    struct Entry {
        PlayerId p;
        Bit bit;
        std::vector<BcxId> bcxs;
    };
    std::vector<Entry> entries;
    for (PlayerId p : participants.members()) {
        if (sim.strategy.aborted(p)) {
            sim.note(EventKind::Refusal, p, -1, "coin toss");
            for (PlayerId h : participants.intersect(sim.active_honest()).members())
                if (h != p) sim.add_conflict(h, p, "refused coin commitment");
            continue;
        }
        Entry e{p, sim.rng.bit(), {}};
        SecretId s = sim.ledger.intern("coin" + std::to_string(toss) + "/p" + std::to_string(p));
        for (PlayerId h : participants.members()) {
            if (h == p) continue;
            e.bcxs.push_back(bcx_commit_value(sim, p, h, e.bit, s, 0));
        }
        entries.push_back(std::move(e));
    }
    sim.next_round();

    Bit result = 0;
    for (const Entry& e : entries) {
        bool valid = true;
        Bit v = e.bit;
        bool first = true;
        for (BcxId id : e.bcxs) {
            Unveil u = bcx_unveil(sim, id, -1);
            if (!u.ok) valid = false;
            else if (first) { v = u.value; first = false; }
            else if (u.value != v) valid = false;
        }
        PlayerSet rejecters;
        if (!valid) {
            for (PlayerId h : participants.intersect(sim.active_honest()).members())
                if (h != e.p) { rejecters = rejecters.with(h); sim.add_conflict(h, e.p, "coin opening rejected"); }
        } else {
            for (PlayerId q : participants.members()) {
                if (q == e.p) continue;
                if (sim.strategy.complaint_targets(q, PlayerSet::single(e.p)).contains(e.p)) {
                    rejecters = rejecters.with(q);
                    sim.add_conflict(q, e.p, "complaint against coin opening");
                }
            }
        }
        if (valid) {
            // the opening stands unless a set no tolerated collusion covers rejects it;
            // add_conflict above would then already have identified the opener
            [[maybe_unused]] PlayerSet accepters = participants.minus(rejecters).without(e.p);
            assert(participants.size() <= 2 || accepters.size() > 0);
            result ^= v;
        }
    }
    sim.next_round();
    return result;
}

GbcxProof gbcx_prove_linear(Sim& sim, const std::vector<GbcxId>& operands, Bit c) {
    if (operands.empty()) throw std::logic_error("proof needs operands");
    PlayerId committer = live_grec(sim, operands[0]).committer;
    PlayerSet verifiers = gbcx_verifiers(sim, operands[0]);
    for (GbcxId id : operands) {
        GbcxRec& g = live_grec(sim, id);
        if (g.committer != committer) throw std::logic_error("proof operands must share the committer");
        verifiers = verifiers.intersect(gbcx_verifiers(sim, id));
    }

    PlayerSet rejecters;
    for (PlayerId v : verifiers.members()) {
        std::vector<BcxId> per_holder;
        per_holder.reserve(operands.size());
        for (GbcxId id : operands) per_holder.push_back(holder_bcx_of(grec_of(sim, id), v));
        RngChallenges chal(sim.rng);
        bool reject = !bcx_prove_linear(sim, per_holder, c, chal).accepted;
        if (!reject && v != committer &&
            sim.strategy.complaint_targets(v, PlayerSet::single(committer)).contains(committer))
            reject = true;
        if (reject) {
            rejecters = rejecters.with(v);
            sim.add_conflict(v, committer, "linear proof rejected");
        }
    }
    for (GbcxId id : operands) grec_of(sim, id).state = BcxState::Consumed;
    return GbcxProof{sim.active_structure.contains(rejecters), rejecters};
}

GbcxCopy gbcx_copy(Sim& sim, GbcxId src) {
    GbcxRec& g = live_grec(sim, src);
    GbcxRec a, b;
    a.committer = b.committer = g.committer;
    a.value = b.value = g.value;
    a.state = b.state = BcxState::Live;
    a.secret = b.secret = g.secret;
    a.participants = b.participants = g.participants;
    for (const auto& [holder, bcx] : g.holder_bcx) {
        if (!sim.active.contains(holder)) continue;
        if (rec_of(sim, bcx).state != BcxState::Live) continue;
        CopyResult cr = bcx_copy(sim, bcx);
        if (!cr.ok) {
            sim.add_conflict(holder, g.committer, "copy check failed");
            continue;
        }
        a.holder_bcx.emplace_back(holder, cr.first);
        b.holder_bcx.emplace_back(holder, cr.second);
    }
    g.state = BcxState::Consumed;
    GbcxId ia = GbcxId(sim.gbcxs.size());
    sim.gbcxs.push_back(std::move(a));
    GbcxId ib = GbcxId(sim.gbcxs.size());
    sim.gbcxs.push_back(std::move(b));
    return GbcxCopy{true, ia, ib};
}

Unveil gbcx_unveil_public(Sim& sim, GbcxId id) {
    GbcxRec& g = live_grec(sim, id);
    g.state = BcxState::Consumed;
    bool ok = true;
    bool first = true;
    int live_copies = 0;
    Bit value = g.value;
    for (const auto& [holder, bcx] : g.holder_bcx) {
        if (!sim.active.contains(holder)) continue;
        if (rec_of(sim, bcx).state != BcxState::Live) continue;
        ++live_copies;
        Unveil u = bcx_unveil(sim, bcx, -1);
        if (!u.ok) ok = false;
        else if (first) { value = u.value; first = false; }
        else if (u.value != value) ok = false;
    }
    if (live_copies == 0) throw std::logic_error("no live copies left to open");
    if (!ok) {
        sim.note(EventKind::InconsistentUnveil, g.committer, -1, "group opening rejected");
        for (PlayerId h : sim.active_honest().members())
            if (h != g.committer) sim.add_conflict(h, g.committer, "opening rejected");
        return Unveil{false, 0};
    }
    for (PlayerId q : sim.active.members()) {
        if (q == g.committer) continue;
        if (sim.strategy.complaint_targets(q, PlayerSet::single(g.committer)).contains(g.committer))
            sim.add_conflict(q, g.committer, "complaint against opening");
    }
    return Unveil{true, value};
}

Unveil gbcx_unveil_to(Sim& sim, GbcxId id, PlayerId audience) {
    GbcxRec& g = live_grec(sim, id);
    BcxId bcx = holder_bcx_of(g, audience);
    if (bcx == kNone) throw std::logic_error("audience holds no copy");
    return bcx_unveil(sim, bcx, audience);
}

JointProof gbcx_joint_xor_proof(Sim& sim, const std::vector<GbcxId>& operands, Bit c) {
    if (operands.empty()) throw std::logic_error("proof needs operands");
    const int m = sim.params.m;

    // Each operand is duplicated: one duplicate feeds the proof, the other
    // is handed back as the replacement handle. The proof takes the lowest
    // live holder copy of the proof duplicate as its broadcast-opened
    // reference; the creation-time consistency rounds tie all other copies
    // to that one.
    std::vector<BcxId> refs;
    std::vector<GbcxId> scratch;
    std::vector<GbcxId> kept;
    for (GbcxId id : operands) {
        GbcxCopy cp = gbcx_copy(sim, id);
        scratch.push_back(cp.first);
        kept.push_back(cp.second);
        const GbcxRec& g = grec_of(sim, cp.first);
        BcxId ref = kNone;
        for (const auto& [holder, bcx] : g.holder_bcx) {
            if (sim.active.contains(holder) && rec_of(sim, bcx).state == BcxState::Live) {
                ref = bcx;
                break;
            }
        }
        if (ref == kNone) throw std::logic_error("no live copy to open against");
        refs.push_back(ref);
    }

    bool ok = true;
    for (int k = 0; k < m; ++k) {
        for (BcxId r : refs)
            sim.send_broadcast(rec_of(sim, r).committer, "joint.claim", le32(std::uint32_t(k)));
        Bit side = coin_toss(sim, sim.active);
        for (BcxId r : refs)
            sim.send_broadcast(rec_of(sim, r).committer, "joint.reveal", le32(std::uint32_t(k)));
        if (side == 1) {
            Bit sum = 0;
            for (BcxId r : refs) sum ^= bcx_pair_xor(sim, r, k);
            if (sum != c) ok = false;
        }
    }
    for (BcxId r : refs) rec_of(sim, r).state = BcxState::Consumed;
    for (GbcxId s : scratch) grec_of(sim, s).state = BcxState::Consumed;
    if (!ok) sim.note(EventKind::ProofFailure, -1, -1, "joint relation");
    return JointProof{ok, std::move(kept)};
}

Bit gbcx_value(const Sim& sim, GbcxId id) { return grec_of(sim, id).value; }
PlayerId gbcx_committer(const Sim& sim, GbcxId id) { return grec_of(sim, id).committer; }
SecretId gbcx_secret(const Sim& sim, GbcxId id) { return grec_of(sim, id).secret; }
bool gbcx_live(const Sim& sim, GbcxId id) { return grec_of(sim, id).state == BcxState::Live; }

} // namespace rmpc
