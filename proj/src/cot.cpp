#include "rmpc/cot.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace rmpc {

namespace {

Bit parity(Word w) { return static_cast<Bit>(std::popcount(w) & 1); }
Bit wbit(Word w, int i) { return static_cast<Bit>((w >> i) & 1); }

std::string num_name(const std::string& pfx, const char* what, int i) {
    return pfx + "/" + what + "/" + std::to_string(i);
}

// Proofs consume their operands, so they run on throwaway duplicates; the
// surviving duplicate replaces the caller's handle. kNone when duplication
// failed (the copy machinery has raised the conflict already).
GbcxId proof_copy(Sim& sim, GbcxId& handle) {
    GbcxCopy cp = gbcx_copy(sim, handle);
    if (!cp.ok) return kNone;
    handle = cp.second;
    return cp.first;
}

// One linear proof per parity-check row, each on fresh duplicates of the
// committed word bits. Handles are replaced along the way.
bool prove_word_in_code(Sim& sim, const LinearCode& code, std::vector<GbcxId>& bits) {
    for (Word row : code.parity()) {
        std::vector<GbcxId> ops;
        for (int i = 0; i < code.m(); ++i) {
            if (!wbit(row, i)) continue;
            GbcxId s = proof_copy(sim, bits[i]);
            if (s == kNone) return false;
            ops.push_back(s);
        }
        if (!gbcx_prove_linear(sim, ops, 0).accepted) return false;
    }
    return true;
}

} // namespace

Cot2Result cot2(Sim& sim, PlayerId sender, PlayerId receiver, GbcxId s0, GbcxId s1,
                Bit choice) {
    Bit true0 = gbcx_value(sim, s0), true1 = gbcx_value(sim, s1);
    Bit send0 = true0, send1 = true1;
    if (sender != receiver && sim.strategy.corrupts_cot(sender)) {
        send0 ^= 1;
        send1 ^= 1;
    }
    auto got = sim.ot_transfer(sender, receiver, send0, send1, choice,
                               gbcx_secret(sim, s0), gbcx_secret(sim, s1), kNoSecret,
                               "cot2");
    if (!got) {
        PlayerId refuser = sim.ot_calls.back().refused_by;
        PlayerId other = refuser == sender ? receiver : sender;
        sim.add_conflict(other, refuser, "committed transfer refused");
        return {false, false, 0};
    }
    Bit expect = choice ? true1 : true0;
    if (*got != expect) {
        sim.add_conflict(receiver, sender, "committed transfer mismatch");
        return {true, false, *got};
    }
    return {true, true, *got};
}

ForwardOtResult forward_ot(Sim& sim, PlayerId sender, PlayerId receiver,
                           PlayerId mediator, Bit a0, Bit a1, Bit choice,
                           SecretId sec0, SecretId sec1) {
    if (sender == mediator || receiver == mediator || sender == receiver)
        throw std::logic_error("forwarded transfer needs three distinct players");

    // the pair goes to the mediator over the private wire
    sim.send_pairwise(sender, mediator, "fwd.pair");
    if (sec0 != kNoSecret) sim.ledger.record(sec0, mediator, Cause::ForwardOtMediator);
    if (sec1 != kNoSecret) sim.ledger.record(sec1, mediator, Cause::ForwardOtMediator);

    Bit v0 = a0, v1 = a1;
    if (sim.strategy.flips_forward(mediator)) {
        v0 ^= 1;
        v1 ^= 1;
    }

    PlayerSet trio = PlayerSet::of({sender, receiver, mediator});
    std::vector<WaveItem> items{{mediator, v0, sec0, {}}, {mediator, v1, sec1, {}}};
    auto ids = gbcx_create_wave(sim, items, trio);
    if (ids[0] == kNone || ids[1] == kNone) return {false, 0, ids[0], ids[1]};

    // the sender checks that what it handed over is what got committed
    Unveil u0 = gbcx_unveil_to(sim, ids[0], sender);
    Unveil u1 = gbcx_unveil_to(sim, ids[1], sender);
    if (!u0.ok || !u1.ok || u0.value != a0 || u1.value != a1) {
        sim.add_conflict(sender, mediator, "forwarded pair mismatch");
        return {false, 0, ids[0], ids[1]};
    }

    // receiver commits his choice toward the mediator, then the committed
    // transfer runs between the two of them
    bcx_commit(sim, receiver, mediator, choice);
    Cot2Result r = cot2(sim, mediator, receiver, ids[0], ids[1], choice);
    if (!r.delivered || !r.consistent) return {false, r.received, ids[0], ids[1]};
    return {true, r.received, ids[0], ids[1]};
}

MediatedOt ot_in_conflict(Sim& sim, PlayerId sender, PlayerId receiver, Bit a0, Bit a1,
                          Bit choice, SecretId sec0, SecretId sec1,
                          const std::string& label) {
    if (!sim.in_conflict(sender, receiver))
        throw std::logic_error("mediated transfer is for endpoints in conflict");
    if (!robustness_precondition(sim.n, sim.active_structure))
        throw PreconditionViolatedError("structure too weak for mediated transfer");

    OtConflictSession sess;
    sess.sender = sender;
    sess.receiver = receiver;
    sess.sender_conflicts = sim.active_conflicts_of(sender);
    sess.receiver_conflicts = sim.active_conflicts_of(receiver);
    sess.s0 = sec0;
    sess.s1 = sec1;
    int sidx = static_cast<int>(sim.ot_sessions.size());
    std::string pfx = label + std::to_string(sidx);

    Bit mask0 = 0, mask1 = 0, unpad = 0;
    for (PlayerId x : sim.active.members()) {
        if (x == sender || x == receiver) continue;
        if (sim.in_conflict(x, sender) || sim.in_conflict(x, receiver)) continue;
        Bit p0 = sim.rng.bit(), p1 = sim.rng.bit();
        SecretId sp0 = sim.ledger.intern(num_name(pfx, "p0", x));
        SecretId sp1 = sim.ledger.intern(num_name(pfx, "p1", x));
        ForwardOtResult f = forward_ot(sim, sender, receiver, x, p0, p1, choice, sp0, sp1);
        if (!f.ok) {
            sess.dropped.add(x);
            sim.note(EventKind::MediatorDropped, x, sender, "pad relay failed");
            continue;
        }
        sess.mediators.add(x);
        sess.pads0.push_back(sp0);
        sess.pads1.push_back(sp1);
        sess.pad_commits0.push_back(f.c0);
        sess.pad_commits1.push_back(f.c1);
        mask0 ^= p0;
        mask1 ^= p1;
        unpad ^= f.received;
    }
    if (sess.mediators.empty())
        throw AssumptionViolatedError("no mediator left between conflicted players");

    sess.masked0 = a0 ^ mask0;
    sess.masked1 = a1 ^ mask1;
    std::vector<std::uint8_t> payload{static_cast<std::uint8_t>(sess.masked0),
                                      static_cast<std::uint8_t>(sess.masked1)};
    sim.send_broadcast(sender, "medot.masked", payload);

    SecretId se0 = sim.ledger.intern(pfx + "/e0");
    SecretId se1 = sim.ledger.intern(pfx + "/e1");
    sim.ledger.record_all(se0, sim.active, Cause::Broadcast);
    sim.ledger.record_all(se1, sim.active, Cause::Broadcast);
    if (sec0 != kNoSecret) {
        std::vector<SecretId> rel{sec0, se0};
        rel.insert(rel.end(), sess.pads0.begin(), sess.pads0.end());
        sim.ledger.relate_xor(rel);
    }
    if (sec1 != kNoSecret) {
        std::vector<SecretId> rel{sec1, se1};
        rel.insert(rel.end(), sess.pads1.begin(), sess.pads1.end());
        sim.ledger.relate_xor(rel);
    }

    Bit got = (choice ? sess.masked1 : sess.masked0) ^ unpad;
    SecretId chosen = choice ? sec1 : sec0;
    if (chosen != kNoSecret) sim.ledger.record(chosen, receiver, Cause::OtOutput);

    sim.ot_sessions.push_back(sess);
    return {true, got, sidx};
}

Bit Amplifier::apply(Word w) const { return parity(static_cast<Word>(r & w)) ^ s; }

Amplifier build_amplifier(Word c0, Word c1, Bit a0, Bit a1, Word opened_mask, int m,
                          Rng& rng) {
    if (m < 1 || m > 16) throw std::invalid_argument("bad word length");
    Word full = static_cast<Word>((m == 16) ? 0xffffu : ((1u << m) - 1));
    Word delta = static_cast<Word>((c0 ^ c1) & full);
    Word priv = static_cast<Word>(full & ~opened_mask);
    if (a0 != a1 && (delta & priv) == 0)
        throw std::logic_error("codeword difference is fully public");
    for (int tries = 0; tries < 4096; ++tries) {
        Word r = static_cast<Word>(rng.raw() & full);
        if (parity(static_cast<Word>(r & delta)) != (a0 ^ a1)) continue;
        if ((r & priv) == 0) continue; // outputs must not ride on opened bits only
        Bit s = parity(static_cast<Word>(r & c0)) ^ a0;
        return {r, s};
    }
    throw std::logic_error("no usable amplification mask found");
}

GcotResult gcot(Sim& sim, const LinearCode& code, PlayerId alice, PlayerId bob, Bit a0,
                Bit a1, GbcxId b_commit, const std::string& label) {
    if (!sim.active.contains(alice) || !sim.active.contains(bob))
        throw std::logic_error("transfer endpoints must be active");
    if (!gbcx_live(sim, b_commit) || gbcx_committer(sim, b_commit) != bob)
        throw std::logic_error("choice commitment must be the receiver's and live");
    const int mc = code.m();
    const int sm = code.sigma_m();
    if (mc < 3 * sm + 1)
        throw PreconditionViolatedError("code too short for the spot checks");

    const Bit b = gbcx_value(sim, b_commit);
    const auto words = code.codewords();

    GcotResult res;
    res.choice = b_commit;
    SecretId sec_a0 = sim.ledger.intern(label + "/a0");
    SecretId sec_a1 = sim.ledger.intern(label + "/a1");
    SecretId sec_out = sim.ledger.intern(label + "/out");
    bool false_disputed = false; // scripted baseless dispute fires once

    const int cap = 2 + sim.n * (sim.n - 1);
    for (int attempt = 1;; ++attempt) {
        if (attempt > cap) throw std::logic_error("transfer retry bound exceeded");
        int edges_before = sim.conflicts.edge_count();
        std::string pfx = label + "/t" + std::to_string(attempt);

        // -- fresh random codewords, far enough apart that the spot checks
        //    can never expose their whole difference
        Word c0w = words[sim.rng.below(static_cast<std::uint32_t>(words.size()))];
        Word c1w = c0w;
        for (int tries = 0;; ++tries) {
            if (tries > 500)
                throw PreconditionViolatedError("codewords too close for private masking");
            c1w = words[sim.rng.below(static_cast<std::uint32_t>(words.size()))];
            if (c1w != c0w && word_weight(static_cast<Word>(c0w ^ c1w)) > 3 * sm) break;
        }

        // -- the sender commits both codewords bitwise (plus, once, the two
        //    input bits), everyone holding a copy
        std::vector<SecretId> sc0(mc), sc1(mc);
        std::vector<WaveItem> items;
        for (int i = 0; i < mc; ++i) {
            sc0[i] = sim.ledger.intern(num_name(pfx, "c0", i));
            items.push_back({alice, wbit(c0w, i), sc0[i], {}});
        }
        for (int i = 0; i < mc; ++i) {
            sc1[i] = sim.ledger.intern(num_name(pfx, "c1", i));
            items.push_back({alice, wbit(c1w, i), sc1[i], {}});
        }
        bool first = res.a0 == kNone;
        if (first) {
            items.push_back({alice, a0, sec_a0, {}});
            items.push_back({alice, a1, sec_a1, {}});
        }
        auto ids = gbcx_create_wave(sim, items, sim.active);
        bool wave_ok = std::find(ids.begin(), ids.end(), kNone) == ids.end();
        auto fail = [&]() -> bool {
            sim.note(EventKind::Restart, alice, bob, "transfer attempt failed");
            if (sim.conflicts.edge_count() <= edges_before)
                throw AssumptionViolatedError("failed transfer attempt made no progress");
            return false;
        };
        auto attempt_body = [&]() -> bool {
            if (!wave_ok) return false;
            std::vector<GbcxId> c0_ids(ids.begin(), ids.begin() + mc);
            std::vector<GbcxId> c1_ids(ids.begin() + mc, ids.begin() + 2 * mc);
            if (first) {
                res.a0 = ids[2 * mc];
                res.a1 = ids[2 * mc + 1];
            }
            if (!prove_word_in_code(sim, code, c0_ids)) return false;
            if (!prove_word_in_code(sim, code, c1_ids)) return false;

            // -- receiver spreads his choice: probes the other word on I0
            std::vector<int> order(mc);
            for (int i = 0; i < mc; ++i) order[i] = i;
            for (int i = mc - 1; i > 0; --i)
                std::swap(order[i], order[sim.rng.below(static_cast<std::uint32_t>(i + 1))]);
            std::vector<bool> in_i0(mc, false), in_i(mc, false);
            for (int j = 0; j < sm; ++j) in_i0[order[j]] = in_i[order[j]] = true;
            for (int j = sm; j < 2 * sm; ++j) in_i[order[j]] = true;

            // -- per-position transfer, mediated once the endpoints fell out
            std::vector<Bit> recv(mc, 0);
            std::vector<int> sess_idx(mc, -1);
            std::vector<int> open0(mc, -1), open1(mc, -1);
            for (int i = 0; i < mc; ++i) {
                Bit bi = in_i0[i] ? (b ^ 1) : b;
                Bit s0 = wbit(c0w, i), s1 = wbit(c1w, i);
                if (alice != bob && sim.strategy.corrupts_cot(alice)) {
                    s0 ^= 1;
                    s1 ^= 1;
                }
                if (sim.in_conflict(alice, bob)) {
                    MediatedOt mo = ot_in_conflict(sim, alice, bob, s0, s1, bi, sc0[i],
                                                   sc1[i], pfx + "/m");
                    recv[i] = mo.received;
                    sess_idx[i] = mo.session;
                } else {
                    auto got = sim.ot_transfer(alice, bob, s0, s1, bi, sc0[i], sc1[i],
                                               kNoSecret, "gcot.bit");
                    if (!got) {
                        PlayerId refuser = sim.ot_calls.back().refused_by;
                        PlayerId other = refuser == alice ? bob : alice;
                        sim.add_conflict(other, refuser, "transfer refused");
                        sim.note(EventKind::EscalatedToConflictPath, alice, bob,
                                 "retrying through mediators");
                        return false;
                    }
                    recv[i] = *got;
                }
            }

            // everything below may end in a dispute: the sender opens whatever
            // codeword bits still stand, mediated positions are arbitrated by
            // their opened pads, and an unarbitrated quarrel costs a conflict
            auto dispute = [&](int at_index) {
                assert(alice != bob);
                sim.note(EventKind::Dispute, bob, alice,
                         at_index < 0 ? "transfer disputed"
                                      : "transfer disputed at position " +
                                            std::to_string(at_index));
                sim.send_broadcast(bob, "gcot.dispute");
                bool opened_clean = true;
                for (int i = 0; i < mc; ++i) {
                    if (c0_ids[i] != kNone) {
                        Unveil u = gbcx_unveil_public(sim, c0_ids[i]);
                        c0_ids[i] = kNone;
                        if (u.ok) open0[i] = u.value; else opened_clean = false;
                    }
                    if (c1_ids[i] != kNone) {
                        Unveil u = gbcx_unveil_public(sim, c1_ids[i]);
                        c1_ids[i] = kNone;
                        if (u.ok) open1[i] = u.value; else opened_clean = false;
                    }
                }
                if (!opened_clean) return; // the unveils raised the conflicts

                auto arbitrate = [&](int i) -> int {
                    const OtConflictSession& sess = sim.ot_sessions[sess_idx[i]];
                    Bit p0 = 0, p1 = 0;
                    for (std::size_t k = 0; k < sess.pads0.size(); ++k) {
                        Unveil u0 = gbcx_unveil_public(sim, sess.pad_commits0[k]);
                        Unveil u1 = gbcx_unveil_public(sim, sess.pad_commits1[k]);
                        if (!u0.ok || !u1.ok) return 0; // conflicts grew, no verdict
                        p0 ^= u0.value;
                        p1 ^= u1.value;
                    }
                    Bit sent0 = sess.masked0 ^ p0, sent1 = sess.masked1 ^ p1;
                    if (sent0 != open0[i] || sent1 != open1[i]) {
                        for (PlayerId h : sim.active_honest().members())
                            if (h != alice)
                                sim.add_conflict(h, alice,
                                                 "masked transfer contradicts opened codeword");
                        return 1;
                    }
                    sim.note(EventKind::BaselessComplaint, bob, alice,
                             "dispute contradicted by opened pads");
                    for (PlayerId h : sim.active_honest().members())
                        if (h != bob)
                            sim.add_conflict(h, bob, "baseless transfer dispute");
                    return 1;
                };

                if (at_index >= 0 && sess_idx[at_index] >= 0) {
                    arbitrate(at_index);
                    return;
                }
                for (int i = 0; i < mc; ++i)
                    if (sess_idx[i] >= 0 && arbitrate(i)) return;
                sim.add_conflict(alice, bob, "transfer dispute without a witness");
            };

            // -- receiver announces the probe set, sender opens it
            std::vector<std::uint8_t> ipay;
            for (int i = 0; i < mc; ++i)
                if (in_i[i]) ipay.push_back(static_cast<std::uint8_t>(i));
            sim.send_broadcast(bob, "gcot.probes", ipay);
            for (int i = 0; i < mc; ++i) {
                if (!in_i[i]) continue;
                Unveil u0 = gbcx_unveil_public(sim, c0_ids[i]);
                c0_ids[i] = kNone;
                Unveil u1 = gbcx_unveil_public(sim, c1_ids[i]);
                c1_ids[i] = kNone;
                if (!u0.ok || !u1.ok) return false;
                open0[i] = u0.value;
                open1[i] = u1.value;
            }

            // -- probe checks; an honest receiver disputes a lying transfer,
            //    a scripted one disputes a clean transfer once
            for (int i = 0; i < mc; ++i) {
                if (!in_i[i]) continue;
                Bit on_other = in_i0[i] ? 1 : 0;
                Bit expect = (b ^ on_other) ? open1[i] : open0[i];
                if (recv[i] != expect) {
                    dispute(i);
                    return false;
                }
            }
            if (!false_disputed && alice != bob && sim.strategy.is_colluder(bob) &&
                sim.strategy.strategy().behavior == Behavior::FalseComplaint) {
                const auto& tg = sim.strategy.strategy().targets;
                if (std::find(tg.begin(), tg.end(), alice) != tg.end()) {
                    false_disputed = true;
                    dispute(-1);
                    return false;
                }
            }
            for (int i = 0; i < mc; ++i)
                if (in_i0[i]) recv[i] = b ? open1[i] : open0[i];

            // -- decode to absorb small tampering, then commit the word
            Word wword = 0;
            for (int i = 0; i < mc; ++i) wword |= static_cast<Word>(recv[i]) << i;
            auto decoded = code.decode(wword);
            if (!decoded) {
                sim.note(EventKind::DecodeFailure, bob, alice, "received word undecodable");
                dispute(-1);
                return false;
            }
            wword = *decoded;

            std::vector<SecretId> sw(mc);
            std::vector<WaveItem> witems;
            for (int i = 0; i < mc; ++i) {
                sw[i] = sim.ledger.intern(num_name(pfx, "w", i));
                witems.push_back({bob, wbit(wword, i), sw[i], {}});
            }
            auto wids = gbcx_create_wave(sim, witems, sim.active);
            if (std::find(wids.begin(), wids.end(), kNone) != wids.end()) return false;
            if (!prove_word_in_code(sim, code, wids)) return false;

            // -- a jointly tossed sample ties the word to the choice
            int idx_bits = 0;
            while ((1 << idx_bits) < mc) ++idx_bits;
            std::vector<int> i2;
            for (int guard = 0; static_cast<int>(i2.size()) < sm; ++guard) {
                if (guard > 400) throw std::logic_error("sample draw stalled");
                int idx = 0;
                for (int k = 0; k < idx_bits; ++k)
                    idx = (idx << 1) | coin_toss(sim, sim.active);
                if (idx >= mc || in_i[idx]) continue;
                if (std::find(i2.begin(), i2.end(), idx) != i2.end()) continue;
                i2.push_back(idx);
            }
            for (int i : i2) {
                Unveil u0 = gbcx_unveil_public(sim, c0_ids[i]);
                c0_ids[i] = kNone;
                Unveil u1 = gbcx_unveil_public(sim, c1_ids[i]);
                c1_ids[i] = kNone;
                if (!u0.ok || !u1.ok) return false;
                open0[i] = u0.value;
                open1[i] = u1.value;
            }
            for (int i : i2) {
                Bit pub = b ? open1[i] : open0[i];
                if (wbit(wword, i) != pub) {
                    dispute(i);
                    return false;
                }
                if (open0[i] == open1[i]) {
                    GbcxId ws = proof_copy(sim, wids[i]);
                    if (ws == kNone) return false;
                    if (!gbcx_prove_linear(sim, {ws}, open0[i]).accepted) return false;
                } else {
                    // the opened bits differ, so w_i = c0_i xor b; the proof
                    // never says which side the choice actually took
                    GbcxId ws = proof_copy(sim, wids[i]);
                    if (ws == kNone) return false;
                    GbcxId bs = proof_copy(sim, res.choice);
                    if (bs == kNone) return false;
                    if (!gbcx_prove_linear(sim, {ws, bs}, open0[i]).accepted) return false;
                }
            }

            // -- the announced mask turns codewords into the input bits
            Word opened_mask = 0;
            for (int i = 0; i < mc; ++i)
                if (open0[i] >= 0) opened_mask |= static_cast<Word>(1u << i);
            Amplifier h = build_amplifier(c0w, c1w, a0, a1, opened_mask, mc, sim.rng);
            std::vector<std::uint8_t> hpay{static_cast<std::uint8_t>(h.r & 0xff),
                                           static_cast<std::uint8_t>(h.r >> 8),
                                           static_cast<std::uint8_t>(h.s)};
            sim.send_broadcast(alice, "gcot.mask", hpay);
            SecretId sec_s = sim.ledger.intern(pfx + "/h.s");
            sim.ledger.record_all(sec_s, sim.active, Cause::Broadcast);

            auto prove_mask = [&](std::vector<GbcxId>& cids, const std::vector<int>& open,
                                  GbcxId& a_handle) -> bool {
                std::vector<GbcxId> ops;
                Bit cst = h.s;
                for (int i = 0; i < mc; ++i) {
                    if (!wbit(h.r, i)) continue;
                    if (cids[i] == kNone) {
                        assert(open[i] >= 0);
                        cst ^= open[i];
                    } else {
                        GbcxId s = proof_copy(sim, cids[i]);
                        if (s == kNone) return false;
                        ops.push_back(s);
                    }
                }
                GbcxId as = proof_copy(sim, a_handle);
                if (as == kNone) return false;
                ops.push_back(as);
                return gbcx_prove_linear(sim, ops, cst).accepted;
            };
            if (!prove_mask(c0_ids, open0, res.a0)) return false;
            if (!prove_mask(c1_ids, open1, res.a1)) return false;

            // -- receiver commits the masked word and proves he applied the mask
            Bit aval = h.apply(wword);
            if (sim.strategy.wrong_relation(bob)) aval ^= 1;
            std::vector<WaveItem> oitem{{bob, aval, sec_out, {}}};
            auto oid = gbcx_create_wave(sim, oitem, sim.active);
            if (oid[0] == kNone) return false;
            res.out = oid[0];
            {
                std::vector<GbcxId> ops;
                for (int i = 0; i < mc; ++i) {
                    if (!wbit(h.r, i)) continue;
                    GbcxId s = proof_copy(sim, wids[i]);
                    if (s == kNone) return false;
                    ops.push_back(s);
                }
                GbcxId os = proof_copy(sim, res.out);
                if (os == kNone) return false;
                ops.push_back(os);
                if (!gbcx_prove_linear(sim, ops, h.s).accepted) return false;
            }

            // -- who could reconstruct what, for the leak queries
            std::vector<SecretId> rel0{sec_a0, sec_s}, rel1{sec_a1, sec_s},
                relo{sec_out, sec_s};
            for (int i = 0; i < mc; ++i) {
                if (!wbit(h.r, i)) continue;
                rel0.push_back(sc0[i]);
                rel1.push_back(sc1[i]);
                relo.push_back(sw[i]);
            }
            sim.ledger.relate_xor(rel0);
            sim.ledger.relate_xor(rel1);
            sim.ledger.relate_xor(relo);
            return true;
        };

        if (attempt_body()) {
            res.attempts = attempt;
            return res;
        }
        fail(); // throws when no progress was made, otherwise loop for a retry
    }
}

} // namespace rmpc
