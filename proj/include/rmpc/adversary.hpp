#pragma once

#include <string>
#include <vector>

#include "rmpc/players.hpp"

namespace rmpc {

enum class Phase : int { Init = 0, Compute = 1, Reveal = 2 };

const char* phase_name(Phase ph);

enum class Behavior {
    Honest,
    Curious,
    RefuseOt,
    FalseComplaint,
    WrongUnveil,
    RiggedPairs,
    WrongCotTransfer,
    FlipForwardedBits,
    ChangeInputOnRestart,
    AbortAt,
    RefuseShareUnveil,
    WrongRelation,
};

const char* behavior_name(Behavior b);

// Declarative description of the scripted deviation. Parsed from
//   collusion=<ids>; behavior=<name>(<args>)
struct Strategy {
    PlayerSet collusion;
    Behavior behavior = Behavior::Honest;
    int at = 0;                    // refuse_ot/wrong_cot_transfer: act on call index >= at
    std::vector<PlayerId> targets; // false_complaint
    int rig_count = 1;             // rigged_pairs
    Phase abort_phase = Phase::Compute;
    bool phase_gated = false;      // wrong_unveil(<phase>): lie only in that phase
    Phase act_phase = Phase::Init;

    std::string to_string() const;
};

Strategy parse_strategy(const std::string& text);

// Where in a protocol a scripted player gets to deviate.
enum class DecisionPoint {
    OtTransfer,   // act as OT endpoint: may refuse
    BcxPairs,     // laying down commitment pairs: may rig some
    Unveil,       // opening a commitment: may attempt a different value
    Complaint,    // may raise baseless complaints against candidates
    CotInputs,    // feeding a committed transfer: may corrupt
    ForwardPads,  // relaying pads as a mediator: may flip
    RestartInput, // re-entering an input after a restart: may change it
    ShareUnveil,  // opening a shared-bit contribution to its owner: may refuse
    RelatedCommit, // committing a value bound by a proved relation: may break it
};

struct Visible {
    Bit true_bit = 0;
    int m = 0;                 // pair count, bounds rigging
    PlayerSet candidates;      // complaint candidates
};

struct Action {
    bool refuse = false;
    bool flip = false;
    int rig_count = 0;
    PlayerSet targets;
    Bit bit = 0; // substituted value where one is expected
};

// Evaluates the scripted strategy at each decision point. Honest players
// and unreached trigger conditions yield the do-nothing action. The engine
// carries the little bookkeeping state the behaviors need (per-player call
// counters, complaints already raised).
class StrategyEngine {
public:
    StrategyEngine() = default;
    explicit StrategyEngine(Strategy s) : strat_(std::move(s)) {}

    const Strategy& strategy() const { return strat_; }
    bool is_colluder(PlayerId p) const { return strat_.collusion.contains(p); }

    void set_phase(Phase ph) { phase_ = ph; }
    Phase phase() const { return phase_; }
    bool aborted(PlayerId p) const;

    Action decide(PlayerId p, DecisionPoint point, const Visible& v);

    // Convenience wrappers around decide().
    bool refuses_ot(PlayerId p);
    int rig_count(PlayerId p, int m);
    bool wrong_open(PlayerId p);
    PlayerSet complaint_targets(PlayerId p, PlayerSet candidates);
    bool corrupts_cot(PlayerId p);
    bool flips_forward(PlayerId p);
    Bit restart_input(PlayerId p, Bit original);
    bool refuses_share_open(PlayerId p);
    bool wrong_relation(PlayerId p);

private:
    PlayerId lowest_colluder() const;

    Strategy strat_;
    Phase phase_ = Phase::Init;
    int ot_calls_[kMaxPlayers] = {};
    int cot_calls_[kMaxPlayers] = {};
    std::uint32_t complained_[kMaxPlayers] = {};
};

} // namespace rmpc
