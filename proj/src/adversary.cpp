#include "rmpc/adversary.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmpc {

const char* phase_name(Phase ph) {
    switch (ph) {
        case Phase::Init: return "init";
        case Phase::Compute: return "compute";
        case Phase::Reveal: return "reveal";
    }
    return "?";
}

const char* behavior_name(Behavior b) {
    switch (b) {
        case Behavior::Honest: return "honest";
        case Behavior::Curious: return "curious";
        case Behavior::RefuseOt: return "refuse_ot";
        case Behavior::FalseComplaint: return "false_complaint";
        case Behavior::WrongUnveil: return "wrong_unveil";
        case Behavior::RiggedPairs: return "rigged_pairs";
        case Behavior::WrongCotTransfer: return "wrong_cot_transfer";
        case Behavior::FlipForwardedBits: return "flip_forwarded_bits";
        case Behavior::ChangeInputOnRestart: return "change_input_on_restart";
        case Behavior::AbortAt: return "abort_at";
        case Behavior::RefuseShareUnveil: return "refuse_share_unveil";
        case Behavior::WrongRelation: return "wrong_relation";
    }
    return "?";
}

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<PlayerId> parse_ids(const std::string& s) {
    std::vector<PlayerId> ids;
    std::string cur;
    auto flush = [&] {
        std::string t = strip(cur);
        cur.clear();
        if (t.empty()) return;
        size_t pos = 0;
        int v = std::stoi(t, &pos);
        if (pos != t.size() || v < 0 || v >= kMaxPlayers)
            throw std::runtime_error("bad player id '" + t + "'");
        ids.push_back(v);
    };
    for (char c : s) {
        if (c == ',') flush();
        else cur += c;
    }
    flush();
    return ids;
}

} // namespace

std::string Strategy::to_string() const {
    std::string s = "collusion=";
    auto mem = collusion.members();
    for (size_t i = 0; i < mem.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(mem[i]);
    }
    s += ";behavior=";
    s += behavior_name(behavior);
    switch (behavior) {
        case Behavior::RefuseOt: s += "(" + std::to_string(at) + ")"; break;
        case Behavior::FalseComplaint: {
            s += "(";
            for (size_t i = 0; i < targets.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(targets[i]);
            }
            s += ")";
            break;
        }
        case Behavior::RiggedPairs: s += "(" + std::to_string(rig_count) + ")"; break;
        case Behavior::WrongCotTransfer:
            if (at) s += "(" + std::to_string(at) + ")";
            break;
        case Behavior::WrongUnveil:
            if (phase_gated) s += std::string("(") + phase_name(act_phase) + ")";
            break;
        case Behavior::AbortAt: s += std::string("(") + phase_name(abort_phase) + ")"; break;
        default: break;
    }
    return s;
}

Strategy parse_strategy(const std::string& text) {
    Strategy st;
    std::string collusion_part, behavior_part;
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw std::runtime_error("strategy needs 'collusion=...;behavior=...'");
    collusion_part = strip(text.substr(0, semi));
    behavior_part = strip(text.substr(semi + 1));
    if (collusion_part.rfind("collusion=", 0) != 0)
        throw std::runtime_error("strategy must start with collusion=");
    if (behavior_part.rfind("behavior=", 0) != 0)
        throw std::runtime_error("strategy must contain behavior=");
    for (PlayerId p : parse_ids(collusion_part.substr(10))) st.collusion.add(p);

    std::string b = strip(behavior_part.substr(9));
    std::string args;
    auto paren = b.find('(');
    if (paren != std::string::npos) {
        if (b.back() != ')') throw std::runtime_error("unbalanced behavior arguments");
        args = b.substr(paren + 1, b.size() - paren - 2);
        b = strip(b.substr(0, paren));
    }

    if (b == "honest") st.behavior = Behavior::Honest;
    else if (b == "curious") st.behavior = Behavior::Curious;
    else if (b == "refuse_ot") {
        st.behavior = Behavior::RefuseOt;
        st.at = args.empty() ? 0 : std::stoi(strip(args));
    } else if (b == "false_complaint") {
        st.behavior = Behavior::FalseComplaint;
        st.targets = parse_ids(args);
        if (st.targets.empty())
            throw std::runtime_error("false_complaint needs target players");
    } else if (b == "wrong_unveil") {
        st.behavior = Behavior::WrongUnveil;
        std::string ph = strip(args);
        if (!ph.empty()) {
            st.phase_gated = true;
            if (ph == "init") st.act_phase = Phase::Init;
            else if (ph == "compute") st.act_phase = Phase::Compute;
            else if (ph == "reveal") st.act_phase = Phase::Reveal;
            else throw std::runtime_error("wrong_unveil phase must be init, compute or reveal");
        }
    } else if (b == "rigged_pairs") {
        st.behavior = Behavior::RiggedPairs;
        st.rig_count = args.empty() ? 1 : std::stoi(strip(args));
        if (st.rig_count < 1) throw std::runtime_error("rigged_pairs needs a positive count");
    } else if (b == "wrong_cot_transfer") {
        st.behavior = Behavior::WrongCotTransfer;
        st.at = args.empty() ? 0 : std::stoi(strip(args));
    }
    else if (b == "flip_forwarded_bits") st.behavior = Behavior::FlipForwardedBits;
    else if (b == "refuse_share_unveil") st.behavior = Behavior::RefuseShareUnveil;
    else if (b == "wrong_relation") st.behavior = Behavior::WrongRelation;
    else if (b == "change_input_on_restart") st.behavior = Behavior::ChangeInputOnRestart;
    else if (b == "abort_at") {
        st.behavior = Behavior::AbortAt;
        std::string ph = strip(args);
        if (ph == "init") st.abort_phase = Phase::Init;
        else if (ph == "compute") st.abort_phase = Phase::Compute;
        else if (ph == "reveal") st.abort_phase = Phase::Reveal;
        else throw std::runtime_error("abort_at needs init, compute or reveal");
    } else throw std::runtime_error("unknown behavior '" + b + "'");

    if (st.behavior != Behavior::Honest && st.behavior != Behavior::Curious &&
        st.collusion.empty())
        throw std::runtime_error("active behavior needs a nonempty collusion");
    return st;
}

bool StrategyEngine::aborted(PlayerId p) const {
    return strat_.behavior == Behavior::AbortAt && is_colluder(p) &&
           static_cast<int>(phase_) >= static_cast<int>(strat_.abort_phase);
}

PlayerId StrategyEngine::lowest_colluder() const {
    std::uint32_t b = strat_.collusion.bits();
    return b ? __builtin_ctz(b) : -1;
}

Action StrategyEngine::decide(PlayerId p, DecisionPoint point, const Visible& v) {
    Action a;
    a.bit = v.true_bit;
    if (!is_colluder(p)) return a;
    if (aborted(p)) {
        a.refuse = true;
        return a;
    }
    switch (point) {
        case DecisionPoint::OtTransfer:
            if (strat_.behavior == Behavior::RefuseOt)
                a.refuse = ot_calls_[p]++ >= strat_.at;
            // the lowest colluder turns saboteur so a restart happens at
            // all; the others survive it and re-enter changed inputs
            if (strat_.behavior == Behavior::ChangeInputOnRestart)
                a.refuse = p == lowest_colluder();
            break;
        case DecisionPoint::BcxPairs:
            if (strat_.behavior == Behavior::RiggedPairs)
                a.rig_count = std::min(strat_.rig_count, v.m);
            break;
        case DecisionPoint::Unveil:
            if (strat_.behavior == Behavior::WrongUnveil &&
                (!strat_.phase_gated || phase_ == strat_.act_phase)) {
                a.flip = true;
                a.bit = v.true_bit ^ 1;
            }
            break;
        case DecisionPoint::Complaint:
            if (strat_.behavior == Behavior::FalseComplaint) {
                for (PlayerId t : strat_.targets) {
                    if (!v.candidates.contains(t)) continue;
                    if ((complained_[p] >> t) & 1u) continue;
                    complained_[p] |= 1u << t;
                    a.targets.add(t);
                }
            }
            break;
        case DecisionPoint::CotInputs:
            if (strat_.behavior == Behavior::WrongCotTransfer)
                a.flip = cot_calls_[p]++ >= strat_.at;
            break;
        case DecisionPoint::ForwardPads:
            if (strat_.behavior == Behavior::FlipForwardedBits) {
                a.flip = true;
                a.bit = v.true_bit ^ 1;
            }
            break;
        case DecisionPoint::RestartInput:
            if (strat_.behavior == Behavior::ChangeInputOnRestart) {
                a.flip = true;
                a.bit = v.true_bit ^ 1;
            }
            break;
        case DecisionPoint::ShareUnveil:
            if (strat_.behavior == Behavior::RefuseShareUnveil) a.refuse = true;
            break;
        case DecisionPoint::RelatedCommit:
            if (strat_.behavior == Behavior::WrongRelation) {
                a.flip = true;
                a.bit = v.true_bit ^ 1;
            }
            break;
    }
    return a;
}

bool StrategyEngine::refuses_ot(PlayerId p) {
    return decide(p, DecisionPoint::OtTransfer, {}).refuse;
}

int StrategyEngine::rig_count(PlayerId p, int m) {
    Visible v;
    v.m = m;
    return decide(p, DecisionPoint::BcxPairs, v).rig_count;
}

bool StrategyEngine::wrong_open(PlayerId p) {
    Action a = decide(p, DecisionPoint::Unveil, {});
    return a.flip || a.refuse;
}

PlayerSet StrategyEngine::complaint_targets(PlayerId p, PlayerSet candidates) {
    Visible v;
    v.candidates = candidates;
    return decide(p, DecisionPoint::Complaint, v).targets;
}

bool StrategyEngine::corrupts_cot(PlayerId p) {
    return decide(p, DecisionPoint::CotInputs, {}).flip;
}

bool StrategyEngine::flips_forward(PlayerId p) {
    return decide(p, DecisionPoint::ForwardPads, {}).flip;
}

Bit StrategyEngine::restart_input(PlayerId p, Bit original) {
    Visible v;
    v.true_bit = original;
    return decide(p, DecisionPoint::RestartInput, v).bit;
}

bool StrategyEngine::refuses_share_open(PlayerId p) {
    return decide(p, DecisionPoint::ShareUnveil, {}).refuse;
}

bool StrategyEngine::wrong_relation(PlayerId p) {
    return decide(p, DecisionPoint::RelatedCommit, {}).flip;
}

} // namespace rmpc
