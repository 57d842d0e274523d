#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmpc/adversary.hpp"
#include "rmpc/ledger.hpp"
#include "rmpc/players.hpp"
#include "rmpc/rng.hpp"
#include "rmpc/structures.hpp"

namespace rmpc {

struct SecurityParams {
    int m = 8; // pairs per commitment; also the challenge rounds per proof
};

enum class Channel : std::uint8_t { Broadcast, Pairwise, Ot };

const char* channel_name(Channel c);

struct Message {
    std::uint32_t round;
    Channel channel;
    PlayerId sender;
    PlayerId receiver; // -1 for broadcast
    std::string tag;
    std::vector<std::uint8_t> payload;
};

struct OtCall {
    PlayerId sender;
    PlayerId receiver;
    Bit choice;
    bool refused;
    PlayerId refused_by;
    SecretId s0, s1;     // what the two inputs mean, if tracked
    SecretId s_choice;   // what the choice bit means, if tracked
};

// One mediated transfer between players in conflict, with the membership
// snapshots the security analysis needs.
struct OtConflictSession {
    PlayerId sender;
    PlayerId receiver;
    PlayerSet sender_conflicts;
    PlayerSet receiver_conflicts;
    PlayerSet mediators; // the ones whose pads went in
    PlayerSet dropped;   // approached but lost to a conflict on the way
    std::vector<SecretId> pads0, pads1; // per mediator, aligned with mediators order
    std::vector<std::uint32_t> pad_commits0, pad_commits1; // mediator pad commitments
    Bit masked0 = 0, masked1 = 0; // the broadcast pair, pads folded in
    SecretId s0 = kNoSecret, s1 = kNoSecret;
};

enum class EventKind : std::uint8_t {
    NewConflict,
    Refusal,
    InconsistentUnveil,
    ProofFailure,
    Dispute,
    BaselessComplaint,
    ForcedPublicUnveil,
    DecodeFailure,
    MediatorDropped,
    EscalatedToConflictPath,
    CheaterIdentified,
    Restart,
};

const char* event_name(EventKind k);

struct Event {
    EventKind kind;
    PlayerId a = -1;
    PlayerId b = -1;
    std::string detail;
};

// Unwinds a protocol once the conflict state proves some players cheated.
// The orchestrator catches it, excludes them and restarts.
class CheaterIdentifiedError : public std::runtime_error {
public:
    CheaterIdentifiedError(PlayerSet who, const std::string& why)
        : std::runtime_error("cheater identified: " + who.to_string() + " (" + why + ")"),
          players(who) {}
    PlayerSet players;
};

// The realized conflicts admit no tolerated cover: the run left the model.
class AssumptionViolatedError : public std::runtime_error {
public:
    explicit AssumptionViolatedError(const std::string& why)
        : std::runtime_error("assumption violated: " + why) {}
};

class PreconditionViolatedError : public std::runtime_error {
public:
    explicit PreconditionViolatedError(const std::string& why)
        : std::runtime_error("precondition violated: " + why) {}
};

struct CommitSlot {
    std::uint8_t bit;
};

enum class BcxState : std::uint8_t { Live, Consumed };

struct BcxRec {
    PlayerId committer;
    PlayerId verifier;
    BcxState state;
    Bit value;               // intended value; rigged pairs deviate from it
    std::uint16_t m;         // payload pairs
    std::uint16_t m_link;    // linkage pairs appended after the payload
    std::uint32_t base;      // first slot; pair k sits at base+2k unless sel
    std::vector<std::uint16_t> sel; // pair remap inside the base block
    std::uint32_t rig_mask;  // payload pairs xoring to value^1
    SecretId secret;
};

struct GbcxRec {
    PlayerId committer;
    Bit value;
    BcxState state;
    SecretId secret;
    PlayerSet participants;
    std::vector<std::pair<PlayerId, std::uint32_t>> holder_bcx; // sorted by holder
};

// Whole-run state: membership, channels, commitments, knowledge flow and the
// scripted deviations. All protocol modules operate on this one object; a
// fixed seed makes the complete run reproducible bit for bit.
struct Sim {
    Sim(int n_players, AdversaryStructure adversary, std::uint64_t seed,
        SecurityParams params = {}, Strategy strategy = {});

    int n;
    SecurityParams params;
    AdversaryStructure structure;        // as configured
    AdversaryStructure active_structure; // restricted to active players
    PlayerSet active;
    ConflictGraph conflicts;
    Rng rng;
    FlowLedger ledger;
    StrategyEngine strategy;

    bool record_transcript = true;
    std::vector<Message> transcript;
    std::vector<Event> events;
    std::vector<OtCall> ot_calls;
    std::vector<OtConflictSession> ot_sessions;

    std::vector<CommitSlot> slots;
    std::vector<BcxRec> bcxs;
    std::vector<GbcxRec> gbcxs;

    std::uint32_t round = 0;
    std::uint32_t seq = 0; // naming counter for secrets and sessions

    void next_round() { ++round; }
    std::uint32_t next_seq() { return seq++; }

    void exclude(PlayerId p);
    PlayerSet active_honest() const; // active minus scripted collusion

    ConflictGraph active_conflict_graph() const;
    PlayerSet active_conflicts_of(PlayerId p) const;
    bool in_conflict(PlayerId a, PlayerId b) const;

    // Records a conflict, then re-checks model consistency and cheater
    // identification. Returns false if the edge already existed.
    bool add_conflict(PlayerId a, PlayerId b, const std::string& cause);

    void note(EventKind kind, PlayerId a, PlayerId b, const std::string& detail);
    bool has_event(EventKind kind) const;

    void send_broadcast(PlayerId from, const std::string& tag,
                        std::vector<std::uint8_t> payload = {});
    void send_pairwise(PlayerId from, PlayerId to, const std::string& tag,
                       std::vector<std::uint8_t> payload = {});

    // Raw ideal OT channel. Refusal is consulted per endpoint and surfaces
    // as an explicit event plus an empty result; the caller escalates.
    // Sender == receiver is allowed and never refused: a local, degenerate
    // transfer used when a player runs the machinery against himself.
    std::optional<Bit> ot_transfer(PlayerId sender, PlayerId receiver, Bit b0, Bit b1,
                                   Bit choice, SecretId s0 = kNoSecret,
                                   SecretId s1 = kNoSecret, SecretId s_choice = kNoSecret,
                                   const char* tag = "ot");

    std::string transcript_text() const;
};

} // namespace rmpc
