#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rmpc/simnet.hpp"

namespace rmpc {

using BcxId = std::uint32_t;
using GbcxId = std::uint32_t;
inline constexpr std::uint32_t kNone = 0xffffffffu;

// Where proof challenges come from. Protocol paths draw from the simulation
// rng (or a public coin toss); tests inject fixed vectors to enumerate the
// whole challenge space.
struct ChallengeSource {
    virtual Bit next() = 0;
    virtual ~ChallengeSource() = default;
};

struct RngChallenges final : ChallengeSource {
    explicit RngChallenges(Rng& r) : rng(r) {}
    Bit next() override { return rng.bit(); }
    Rng& rng;
};

struct FixedChallenges final : ChallengeSource {
    explicit FixedChallenges(std::vector<Bit> v) : bits(std::move(v)) {}
    Bit next() override;
    std::vector<Bit> bits;
    std::size_t at = 0;
};

struct Unveil {
    bool ok;
    Bit value;
};

struct ProofResult {
    bool accepted;
};

struct CopyResult {
    bool ok;
    BcxId first = kNone;
    BcxId second = kNone;
};

// ---- two-party commitments -------------------------------------------------

// Commit `value` toward one verifier as m pairs, each xoring to the value.
// The committer's scripted pair rigging is applied here.
BcxId bcx_commit(Sim& sim, PlayerId committer, PlayerId verifier, Bit value,
                 SecretId secret = kNoSecret, int m_link = 0);

Bit bcx_pair_xor(const Sim& sim, BcxId id, int pair); // payload pair value
Bit bcx_link_xor(const Sim& sim, BcxId id, int pair); // linkage pair value
Bit bcx_half(const Sim& sim, BcxId id, int pair, int side, bool link);

// Open every payload pair. A scripted wrong opening or rigged pairs make the
// opening rejected; the commitment is consumed either way.
Unveil bcx_unveil(Sim& sim, BcxId id, PlayerId audience = -1); // -1: public

// Prove xor of the committed values equals c by opening one half per pair.
// Consumes all operands. Operands must share committer, verifier and size.
ProofResult bcx_prove_linear(Sim& sim, const std::vector<BcxId>& operands, Bit c,
                             ChallengeSource& challenges);

// Duplicate a live commitment: 3m fresh pairs, a random third of them is
// equality-checked against the original, the other two thirds become the
// copies. Consumes the original.
CopyResult bcx_copy(Sim& sim, BcxId src);

// Fault injection for tests: lay the duplicate pairs for a different value
// and let the partition check do its work.
CopyResult bcx_copy_substituted(Sim& sim, BcxId src, Bit laid_value);

// ---- commitments toward the whole group ------------------------------------

struct PendingComplaint {
    PlayerId complainer;
    PlayerId target;
    std::string cause;
};

// Raises buffered complaints one by one (identification may interrupt).
void surface_complaints(Sim& sim, std::vector<PendingComplaint>& pending);

struct WaveItem {
    PlayerId committer;
    Bit value;
    SecretId secret = kNoSecret;
    // Test hook: deliver a different value to selected holders to exercise
    // the cross-receiver consistency rounds.
    std::vector<std::pair<PlayerId, Bit>> value_overrides;
};

// Commit each item toward every other participant, then run m public
// challenge rounds that tie all per-holder commitments of an item to the
// same value; the rounds and their coin tosses are shared across the wave.
// With a defer sink, complaints are buffered for the caller instead of
// being raised mid-wave. Aborting committers yield kNone entries.
std::vector<GbcxId> gbcx_create_wave(Sim& sim, const std::vector<WaveItem>& items,
                                     PlayerSet participants,
                                     std::vector<PendingComplaint>* defer = nullptr);

GbcxId gbcx_create(Sim& sim, PlayerId committer, Bit value, SecretId secret = kNoSecret);

// Jointly generated public random bit: everyone commits a coin toward the
// other participants, then all unveil; the xor of the openings that stand
// is the result. Commitments here skip the linkage rounds, which would
// recurse into coin tosses; the full public unveil exposes inconsistent
// copies just as well.
Bit coin_toss(Sim& sim, PlayerSet participants);

struct GbcxProof {
    bool accepted;
    PlayerSet rejecters;
};

// Holders that can still check proofs for this commitment: live copies of
// active players not in conflict with the committer.
PlayerSet gbcx_verifiers(const Sim& sim, GbcxId id);

// Per-holder linear proofs (same committer across operands). A rejecting
// holder goes into conflict with the committer; identification interrupts
// when the rejecters exceed every tolerated set. Consumes the operands.
GbcxProof gbcx_prove_linear(Sim& sim, const std::vector<GbcxId>& operands, Bit c);

struct GbcxCopy {
    bool ok;
    GbcxId first = kNone;
    GbcxId second = kNone;
};

GbcxCopy gbcx_copy(Sim& sim, GbcxId src);

// Open toward everyone. Rigged values or a scripted wrong opening surface
// publicly and put the committer in conflict with every honest active
// player. Appends a ledger entry per active player on success.
Unveil gbcx_unveil_public(Sim& sim, GbcxId id);

// Open the audience's copy only; the rest of the group keeps its copies.
// The audience drops out of the verifier set for this commitment.
Unveil gbcx_unveil_to(Sim& sim, GbcxId id, PlayerId audience);

struct JointProof {
    bool accepted;
    std::vector<GbcxId> kept; // kept[i] replaces operands[i], which is consumed
};

// Prove xor over commitments of *different* committers equals c, on one
// designated holder copy per operand, with broadcast openings and jointly
// tossed challenges. Used when a relation spans several owners, e.g. tying
// fresh shares to a pre-committed input after a restart. Each operand is
// duplicated first: one duplicate is opened into the proof, the other is
// handed back so the value stays committed.
JointProof gbcx_joint_xor_proof(Sim& sim, const std::vector<GbcxId>& operands, Bit c);

Bit gbcx_value(const Sim& sim, GbcxId id);
PlayerId gbcx_committer(const Sim& sim, GbcxId id);
SecretId gbcx_secret(const Sim& sim, GbcxId id);
bool gbcx_live(const Sim& sim, GbcxId id);

} // namespace rmpc
