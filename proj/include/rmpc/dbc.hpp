#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rmpc/commit.hpp"

namespace rmpc {

// A bit split into one group commitment per active player; the xor of the
// share values is the hidden bit. With an owner set, that player has seen
// every share opening and can reconstruct the bit; derived bits have none.
struct Dbc {
    std::vector<GbcxId> shares; // indexed by player id, kNone where none
    PlayerId owner = -1;
    SecretId value_secret = kNoSecret;
    // Shares that had to be opened toward everyone fold in here as a public
    // constant; the hidden bit is public_xor xor the live share values.
    Bit public_xor = 0;

    GbcxId share_of(PlayerId p) const;
    PlayerSet holders() const;
};

// Every player but the owner commits a random bit and opens it to the owner
// in private; the owner commits the bit completing the xor to b. A share
// whose private opening is refused, or whose holder sits in conflict with
// the owner, is opened publicly instead; refusing that too puts the player
// in conflict with every honest player, which identifies him under any
// structure that passes the precondition.
Dbc dbc_create(Sim& sim, PlayerId owner, Bit b, const std::string& label = "dbc");

// Ground truth for oracle checks.
Bit dbc_value(const Sim& sim, const Dbc& d);

// The lowest active shareholder replaces his share with the opposite bit
// and proves the inequality on commitment copies. Consumes d.
Dbc dbc_not(Sim& sim, Dbc& d, const std::string& label = "not");

struct DbcOpen {
    bool ok;
    Bit value;
};

// Public opening of every share; the xor of the openings is the result.
// Consumes d. A rejected opening leaves ok false, with the conflicts (and
// usually the identification) already raised by the commitment layer.
DbcOpen dbc_unveil(Sim& sim, Dbc& d);

// Duplicate every share for circuit fan-out. Consumes d.
std::pair<Dbc, Dbc> dbc_copy(Sim& sim, Dbc& d, const std::string& label = "copy");

// Joint proof that the bit behind d equals the bit behind the precommitment
// handle. Both stay committed: the proof runs on duplicates and the handles
// in d and pre are replaced by the kept copies. A failed proof is pinned on
// the owner: contributor shares enter a DBC only through verified openings,
// so only the completing share can break the relation.
bool dbc_matches_commitment(Sim& sim, Dbc& d, GbcxId& pre);

} // namespace rmpc
