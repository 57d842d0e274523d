#include "rmpc/ledger.hpp"

#include <stdexcept>

namespace rmpc {

const char* cause_name(Cause c) {
    switch (c) {
        case Cause::OtOutput: return "ot_output";
        case Cause::Unveil: return "unveil";
        case Cause::ForwardOtMediator: return "forward_ot_mediator";
        case Cause::Broadcast: return "broadcast";
        case Cause::ProtocolOutput: return "protocol_output";
        case Cause::Chosen: return "chosen";
    }
    return "?";
}

SecretId FlowLedger::intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    SecretId id = static_cast<SecretId>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    direct_.push_back(0);
    return id;
}

const std::string& FlowLedger::name(SecretId id) const {
    if (id >= names_.size()) throw std::out_of_range("unknown secret id");
    return names_[id];
}

void FlowLedger::record(SecretId secret, PlayerId learner, Cause cause) {
    if (secret == kNoSecret) return;
    if (secret >= names_.size()) throw std::out_of_range("unknown secret id");
    std::uint64_t key = (std::uint64_t(secret) << 16) |
                        (std::uint64_t(std::uint8_t(learner)) << 8) |
                        std::uint64_t(static_cast<std::uint8_t>(cause));
    if (!seen_.insert(key).second) return; // one entry per (secret, learner, cause)
    entries_.push_back({secret, learner, cause});
    direct_[secret] |= 1u << learner;
}

void FlowLedger::record_all(SecretId secret, PlayerSet learners, Cause cause) {
    for (PlayerId p : learners.members()) record(secret, p, cause);
}

void FlowLedger::relate_xor(const std::vector<SecretId>& ids) {
    if (ids.size() < 2) throw std::invalid_argument("xor relation needs two secrets");
    for (SecretId id : ids)
        if (id == kNoSecret || id >= names_.size())
            throw std::out_of_range("unknown secret id in relation");
    relations_.push_back(ids);
}

bool FlowLedger::learned_directly(PlayerId p, SecretId secret) const {
    if (secret >= names_.size()) return false;
    return (direct_[secret] >> p) & 1u;
}

bool FlowLedger::coalition_knows(PlayerSet coalition, SecretId secret) const {
    if (secret >= names_.size()) return false;
    std::vector<char> known(names_.size(), 0);
    for (SecretId s = 0; s < names_.size(); ++s)
        known[s] = (direct_[s] & coalition.bits()) != 0;
    // Per-relation completion to a fixpoint. A relation with one unknown
    // member determines that member; nothing else is inferred.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rel : relations_) {
            int unknown = -1;
            bool skip = false;
            for (size_t i = 0; i < rel.size(); ++i) {
                if (!known[rel[i]]) {
                    if (unknown >= 0) { skip = true; break; }
                    unknown = static_cast<int>(i);
                }
            }
            if (!skip && unknown >= 0) {
                known[rel[static_cast<size_t>(unknown)]] = 1;
                changed = true;
            }
        }
    }
    return known[secret];
}

std::string FlowLedger::to_text() const {
    std::string out;
    for (const LedgerEntry& e : entries_) {
        out += names_[e.secret];
        out += '|';
        out += std::to_string(e.learner);
        out += '|';
        out += cause_name(e.cause);
        out += '\n';
    }
    return out;
}

} // namespace rmpc
