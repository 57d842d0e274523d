#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rmpc/players.hpp"

namespace rmpc {

using SecretId = std::uint32_t;
inline constexpr SecretId kNoSecret = 0xffffffffu;

enum class Cause : std::uint8_t {
    OtOutput,
    Unveil,
    ForwardOtMediator,
    Broadcast,
    ProtocolOutput,
    Chosen, // the player picked the value itself
};

const char* cause_name(Cause c);

struct LedgerEntry {
    SecretId secret;
    PlayerId learner;
    Cause cause;
};

// Records which player learned which atomic secret and why. Reconstruction
// queries close the recorded knowledge under the registered XOR relations:
// inside one relation, knowing all secrets but one yields the last. Relations
// are never combined with each other; there is no wider linear algebra.
class FlowLedger {
public:
    SecretId intern(const std::string& name);
    const std::string& name(SecretId id) const;
    std::size_t secret_count() const { return names_.size(); }

    void record(SecretId secret, PlayerId learner, Cause cause);
    void record_all(SecretId secret, PlayerSet learners, Cause cause);

    // Registers the dependency xor(ids) == 0 over the secrets' values.
    void relate_xor(const std::vector<SecretId>& ids);

    bool learned_directly(PlayerId p, SecretId secret) const;
    bool coalition_knows(PlayerSet coalition, SecretId secret) const;

    const std::vector<LedgerEntry>& entries() const { return entries_; }

    // One line per entry: <secret name>|<learner>|<cause>
    std::string to_text() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, SecretId> index_;
    std::vector<LedgerEntry> entries_;
    std::unordered_set<std::uint64_t> seen_;
    std::vector<std::uint32_t> direct_;            // per secret: learner mask
    std::vector<std::vector<SecretId>> relations_;
};

} // namespace rmpc
