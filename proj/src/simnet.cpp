#include "rmpc/simnet.hpp"

#include <cassert>
#include <sstream>

namespace rmpc {

const char* channel_name(Channel c) {
    switch (c) {
    case Channel::Broadcast: return "bcast";
    case Channel::Pairwise: return "pair";
    case Channel::Ot: return "ot";
    }
    return "?";
}

const char* event_name(EventKind k) {
    switch (k) {
    case EventKind::NewConflict: return "new_conflict";
    case EventKind::Refusal: return "refusal";
    case EventKind::InconsistentUnveil: return "inconsistent_unveil";
    case EventKind::ProofFailure: return "proof_failure";
    case EventKind::Dispute: return "dispute";
    case EventKind::BaselessComplaint: return "baseless_complaint";
    case EventKind::ForcedPublicUnveil: return "forced_public_unveil";
    case EventKind::DecodeFailure: return "decode_failure";
    case EventKind::MediatorDropped: return "mediator_dropped";
    case EventKind::EscalatedToConflictPath: return "escalated_to_conflict_path";
    case EventKind::CheaterIdentified: return "cheater_identified";
    case EventKind::Restart: return "restart";
    }
    return "?";
}

Sim::Sim(int n_players, AdversaryStructure adversary, std::uint64_t seed,
         SecurityParams p, Strategy strat)
    : n(n_players),
      params(p),
      structure(std::move(adversary)),
      active_structure(structure),
      active(PlayerSet::full(n_players)),
      conflicts(n_players),
      rng(seed),
      strategy(std::move(strat)) {
    if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("player count out of range");
    if (structure.n() != n) throw std::invalid_argument("structure size mismatch");
    if (params.m < 2) throw std::invalid_argument("need at least two pairs per commitment");
}

void Sim::exclude(PlayerId p) {
    if (!active.contains(p)) return;
    active = active.without(p);
    active_structure = structure.restrict_to(active);
}

PlayerSet Sim::active_honest() const {
    return active.minus(strategy.strategy().collusion);
}

ConflictGraph Sim::active_conflict_graph() const {
    ConflictGraph g(n);
    for (auto [a, b] : conflicts.edges()) {
        if (active.contains(a) && active.contains(b)) g.add_conflict(a, b);
    }
    return g;
}

PlayerSet Sim::active_conflicts_of(PlayerId p) const {
    return conflicts.neighbours(p).intersect(active);
}

bool Sim::in_conflict(PlayerId a, PlayerId b) const {
    return conflicts.neighbours(a).contains(b);
}

bool Sim::add_conflict(PlayerId a, PlayerId b, const std::string& cause) {
    if (a == b) throw std::logic_error("conflict requires two distinct players");
    assert(active.contains(a) && active.contains(b));
    if (conflicts.neighbours(a).contains(b)) return false;
    conflicts.add_conflict(a, b);
    note(EventKind::NewConflict, a, b, cause);

    ConflictGraph g = active_conflict_graph();
    if (!is_consistent(g, active_structure)) {
        throw AssumptionViolatedError("conflicts not coverable by any tolerated set after " + cause);
    }

    PlayerSet ids;
    for (PlayerId p : active.members()) {
        if (!active_structure.contains(g.neighbours(p))) ids = ids.with(p);
    }
    ids = ids.unite(identify_cheaters(g, active_structure)).intersect(active);
    if (ids.size() > 0) {
        note(EventKind::CheaterIdentified, -1, -1, ids.to_string());
        throw CheaterIdentifiedError(ids, cause);
    }
    return true;
}

void Sim::note(EventKind kind, PlayerId a, PlayerId b, const std::string& detail) {
    events.push_back(Event{kind, a, b, detail});
}

bool Sim::has_event(EventKind kind) const {
    for (const auto& e : events)
        if (e.kind == kind) return true;
    return false;
}

void Sim::send_broadcast(PlayerId from, const std::string& tag,
                         std::vector<std::uint8_t> payload) {
    if (!record_transcript) return;
    transcript.push_back(Message{round, Channel::Broadcast, from, -1, tag, std::move(payload)});
}

void Sim::send_pairwise(PlayerId from, PlayerId to, const std::string& tag,
                        std::vector<std::uint8_t> payload) {
    if (!record_transcript) return;
    transcript.push_back(Message{round, Channel::Pairwise, from, to, tag, std::move(payload)});
}

std::optional<Bit> Sim::ot_transfer(PlayerId sender, PlayerId receiver, Bit b0, Bit b1,
                                    Bit choice, SecretId s0, SecretId s1, SecretId s_choice,
                                    const char* tag) {
    OtCall call{sender, receiver, choice, false, -1, s0, s1, s_choice};
    if (sender != receiver) {
        if (strategy.refuses_ot(sender)) call.refused_by = sender;
        else if (strategy.refuses_ot(receiver)) call.refused_by = receiver;
    }
    if (call.refused_by >= 0) {
        call.refused = true;
        note(EventKind::Refusal, call.refused_by,
             call.refused_by == sender ? receiver : sender, tag);
        if (record_transcript)
            transcript.push_back(Message{round, Channel::Ot, sender, receiver,
                                         std::string(tag) + ".refused", {}});
        ot_calls.push_back(call);
        return std::nullopt;
    }
    if (record_transcript)
        transcript.push_back(Message{round, Channel::Ot, sender, receiver, tag, {}});
    ledger.record(choice ? s1 : s0, receiver, Cause::OtOutput);
    ot_calls.push_back(call);
    return choice ? b1 : b0;
}

std::string Sim::transcript_text() const {
    std::ostringstream out;
    static const char* hexd = "0123456789abcdef";
    for (const auto& msg : transcript) {
        out << msg.round << '|' << channel_name(msg.channel) << '|' << msg.sender << '|';
        if (msg.receiver < 0) out << '*';
        else out << msg.receiver;
        out << '|' << msg.tag << '|';
        for (std::uint8_t byte : msg.payload) {
            out << hexd[byte >> 4] << hexd[byte & 15];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace rmpc
