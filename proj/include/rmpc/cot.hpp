#pragma once

#include <string>

#include "rmpc/code.hpp"
#include "rmpc/commit.hpp"

namespace rmpc {

// ---- two-party committed transfer -------------------------------------------

struct Cot2Result {
    bool delivered;  // the transfer happened (nobody refused)
    bool consistent; // delivered bit matches the sender's commitment
    Bit received = 0;
};

// Oblivious transfer where the sender's inputs are bound to commitments.
// Modeled as an ideal box: the wire carries whatever the sender's script
// feeds it, and the receiver-side check compares against the committed
// truth directly. Inconsistency or refusal ends in a conflict.
Cot2Result cot2(Sim& sim, PlayerId sender, PlayerId receiver, GbcxId s0, GbcxId s1,
                Bit choice);

// ---- transfer through one mediator ------------------------------------------

struct ForwardOtResult {
    bool ok; // pads committed, opened clean toward the sender, transfer consistent
    Bit received = 0;
    GbcxId c0 = kNone, c1 = kNone; // the mediator's pad commitments, still live
};

// Hands the pair (a0,a1) to the receiver through a third player: the mediator
// learns both bits, commits to them toward the triple, opens the commitments
// to the sender for checking, takes a choice commitment from the receiver and
// then plays committed-OT sender. Mismatches end in a conflict with the
// mediator; the sender never hears the choice.
ForwardOtResult forward_ot(Sim& sim, PlayerId sender, PlayerId receiver,
                           PlayerId mediator, Bit a0, Bit a1, Bit choice,
                           SecretId sec0 = kNoSecret, SecretId sec1 = kNoSecret);

// ---- transfer between players in conflict ------------------------------------

struct MediatedOt {
    bool ok;
    Bit received = 0;
    int session = -1; // index into sim.ot_sessions
};

// Every player still speaking to both endpoints relays one fresh pad pair via
// forward_ot; the sender broadcasts the pair masked by all surviving pads and
// the receiver unmasks his choice. Mediators that fall into conflict along
// the way are dropped together with their pads. Scripted corruption is the
// caller's business: the bits given here go out as they are.
MediatedOt ot_in_conflict(Sim& sim, PlayerId sender, PlayerId receiver, Bit a0,
                          Bit a1, Bit choice, SecretId sec0 = kNoSecret,
                          SecretId sec1 = kNoSecret,
                          const std::string& label = "medot");

// ---- privacy amplification ----------------------------------------------------

struct Amplifier {
    Word r = 0;
    Bit s = 0;
    Bit apply(Word w) const; // <r,w> xor s
};

// h(w) = <r,w> xor s with h(c0) = a0 and h(c1) = a1, drawn uniformly among
// the masks that keep at least one input bit outside the opened positions,
// so publicly opened code bits never determine the outputs.
Amplifier build_amplifier(Word c0, Word c1, Bit a0, Bit a1, Word opened_mask, int m,
                          Rng& rng);

// ---- committed transfer the whole group can verify ----------------------------

struct GcotResult {
    GbcxId a0 = kNone, a1 = kNone; // sender's commitments to her two inputs
    GbcxId out = kNone;            // receiver's commitment to the chosen input
    GbcxId choice = kNone;         // replacement handle for the choice commitment
    int attempts = 1;
};

// Committed oblivious transfer checked by everyone: the sender hides her
// inputs behind random codewords, spot checks and a coin-tossed sample tie
// the receiver's word to his committed choice, and a privacy amplification
// mask turns the codewords back into the input bits. A failed attempt burns
// its codewords, adds a conflict or identifies a cheater, and restarts;
// every restart strictly grows the conflict graph, which bounds the loop.
GcotResult gcot(Sim& sim, const LinearCode& code, PlayerId alice, PlayerId bob,
                Bit a0, Bit a1, GbcxId b_commit, const std::string& label = "gcot");

} // namespace rmpc
