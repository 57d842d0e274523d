#pragma once

#include <string>
#include <utility>

#include "rmpc/cot.hpp"
#include "rmpc/dbc.hpp"

namespace rmpc {

// ---- two-party committed AND gate --------------------------------------------

struct PandResult {
    bool ok = false;           // transfer went through and matched the commitments
    GbcxId alice_share = kNone; // alice's fresh mask a'
    GbcxId bob_share = kNone;   // bob's commitment to a' xor (a and b)
};

// AND on two committed bits, shared between the holders: alice draws a fresh
// mask a' and sends the pair (a', a' xor a) through committed OT with bob's
// bit as the choice; bob commits what he received. The two fresh commitments
// xor to a AND b. force_mask pins a' for tests; -1 draws it from the rng.
// A refused or inconsistent transfer has raised its conflict already and
// comes back with ok false; the caller escalates to the group-checked gate.
PandResult pand(Sim& sim, PlayerId alice, PlayerId bob, GbcxId a_com, GbcxId b_com,
                int force_mask = -1, const std::string& label = "pand");

// Group-checked variant: the transfer runs as a committed OT the whole group
// verifies, and alice proves on top that her transferred pair really hides
// her committed input (a0 xor a1 xor a == 0). Input handles are consumed and
// replaced through the references. alice == bob degenerates into a local
// gate whose proof obligations still bind the result.
PandResult gpand(Sim& sim, const LinearCode& code, PlayerId alice, PlayerId bob,
                 GbcxId& a_in, GbcxId& b_in, const std::string& label = "gpand");

// ---- who sends in a pairwise transfer ----------------------------------------

// Fixes the OT sender for every unordered pair so that a disruptor cannot
// veto progress by sitting on the receiving end. chosen_b is the tolerated
// maximal set the run singles out in advance.
struct DirectionPolicy {
    PlayerSet chosen_b;
};

// The lexicographically last maximal set of the structure.
DirectionPolicy default_policy(const AdversaryStructure& structure);

// Returns (sender, receiver). A player whose conflicts are exactly the
// chosen set sends; a player in conflict with some full maximal set sends
// to one who is not; between two such players the one whose largest
// swallowed set is lexicographically larger sends. Lower id breaks every
// remaining tie.
std::pair<PlayerId, PlayerId> ot_direction(const Sim& sim, PlayerId p, PlayerId q,
                                           const DirectionPolicy& policy);

// ---- gates on shared bits ------------------------------------------------------

// AND of two shared bits: one group-checked pand per ordered pair of live
// shares, directed by the policy, then every player folds the mask shares
// he collected into one fresh share under a linear proof. Shares already
// forced public enter as constants and cost no transfers. Consumes x and y.
Dbc dbc_and(Sim& sim, const LinearCode& code, Dbc& x, Dbc& y,
            const DirectionPolicy& policy, const std::string& label = "and");

// XOR of two shared bits: share-wise, no interaction beyond the fresh
// commitments and their proofs. Consumes x and y.
Dbc dbc_xor(Sim& sim, Dbc& x, Dbc& y, const std::string& label = "xor");

} // namespace rmpc
