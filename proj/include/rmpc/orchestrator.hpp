#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rmpc/circuit.hpp"
#include "rmpc/code.hpp"
#include "rmpc/gates.hpp"
#include "rmpc/simnet.hpp"

namespace rmpc {

// Everything one protocol run needs besides the simulation state itself.
struct RunConfig {
    Circuit circuit;
    std::map<PlayerId, std::vector<Bit>> inputs; // per player, wire order
    LinearCode code = hamming15();
    std::optional<PlayerSet> chosen_b; // transfer-direction override
    Bit default_input = 0;             // substituted for excluded players
    std::map<PlayerId, std::vector<Bit>> default_inputs; // per-player override
};

struct RunReport {
    bool completed = false;
    std::string failure;             // reason text when not completed
    std::vector<WireId> output_wires;
    std::vector<Bit> result;         // aligned with output_wires
    ConflictGraph conflicts;         // realized over the whole run
    PlayerSet identified_cheaters;   // union over every restart
    std::vector<PlayerSet> restarts; // players excluded before each re-run
    AdversaryStructure aposteriori_secure;
    AdversaryStructure aposteriori_robust;

    std::string to_text() const;
};

// Inverse of RunReport::to_text; sections are expected in emission order.
RunReport parse_run_report(const std::string& text);

// The whole protocol. Every player first commits each input bit toward the
// group, with complaints buffered until the commit round is over. Then
// input bits are shared, the circuit is evaluated gate by gate and the
// output shares are opened. Identified cheaters are excluded and the run
// restarts with their inputs replaced by the configured defaults; each
// restart proves the survivors' fresh shares equal their first commitments.
// Throws when the precondition fails on the initial or a reduced instance,
// or when the realized conflicts leave the tolerated model.
RunReport run(Sim& sim, const RunConfig& cfg);

// Security actually obtained, read off the realized conflicts and the pad
// trail of the mediated transfers. Without any conflict the run leaks
// nothing and every coalition short of all players stays blind. Otherwise
// a coalition is tolerable unless its complement is one of the configured
// collusions, with one repair: complements of maximal collusions stay
// tolerable unless a mediated transfer ran with a receiver in conflict
// with exactly that collusion, which spread the sender's pads over its
// complement. The robust structure tightens that to coalitions strictly
// inside a tolerable one.
struct AposterioriSecurity {
    AdversaryStructure secure;
    AdversaryStructure robust;
};

AposterioriSecurity aposteriori_security(const Sim& sim);

// Per-wire bits for the reference evaluation: configured inputs for the
// survivors, defaults for the excluded.
std::map<WireId, Bit> effective_inputs(const RunConfig& cfg, PlayerSet excluded);

} // namespace rmpc
