#include "rmpc/orchestrator.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "rmpc/dbc.hpp"

namespace rmpc {

namespace {

// The two-cover test over a surviving subset of the players; the structure
// is expected to be restricted to that subset already.
bool precondition_on(PlayerSet players, const AdversaryStructure& s) {
    if (players.size() <= 2) return false;
    for (const PlayerSet& a : s.maximal_sets())
        for (const PlayerSet& b : s.maximal_sets())
            if (players.minus(a.unite(b)).size() <= 1) return false;
    return true;
}

// Wire carrying a bit everyone knows: no shares, just the constant.
Dbc public_constant(Bit b) {
    Dbc d;
    d.shares.assign(kMaxPlayers, kNone);
    d.owner = -1;
    d.public_xor = b & 1;
    return d;
}

// Hands out the wire's bit for one read; intermediate reads get one half
// of a commitment copy so the wire stays usable.
Dbc take_wire(Sim& sim, std::map<WireId, Dbc>& live, std::map<WireId, int>& reads_left,
              WireId w, const std::string& label) {
    auto it = live.find(w);
    if (it == live.end()) throw std::logic_error("wire read before written");
    int& left = reads_left[w];
    assert(left >= 1);
    --left;
    if (left == 0) {
        Dbc d = std::move(it->second);
        live.erase(it);
        return d;
    }
    auto [use, keep] = dbc_copy(sim, it->second, label);
    it->second = std::move(keep);
    return use;
}

Bit configured_bit(const RunConfig& cfg, PlayerId p, std::size_t index) {
    auto it = cfg.inputs.find(p);
    if (it == cfg.inputs.end() || index >= it->second.size())
        throw std::logic_error("input bits missing after validation");
    return it->second[index] & 1;
}

std::vector<Bit> attempt_once(Sim& sim, const RunConfig& cfg, int attempt,
                              const DirectionPolicy& policy,
                              std::map<WireId, GbcxId>& precommit) {
    const std::string at = "a" + std::to_string(attempt);
    sim.strategy.set_phase(Phase::Init);

    // First everyone commits every input bit toward the group, in one wave
    // whose complaints are buffered until the whole round is over: inputs
    // may not be steered by who complains about whom mid-commit. If an
    // identification interrupts the wave itself, the next attempt runs a
    // fresh one; binding starts with the first wave that completes.
    if (precommit.empty()) {
        std::vector<WaveItem> items;
        std::vector<WireId> item_wires;
        for (PlayerId p : sim.active.members()) {
            std::vector<WireId> wires = cfg.circuit.input_wires_of(p);
            for (std::size_t i = 0; i < wires.size(); ++i) {
                SecretId s = sim.ledger.intern("input/w" + std::to_string(wires[i]));
                items.push_back(WaveItem{p, configured_bit(cfg, p, i), s, {}});
                item_wires.push_back(wires[i]);
            }
        }
        std::vector<PendingComplaint> pending;
        std::vector<GbcxId> ids = gbcx_create_wave(sim, items, sim.active, &pending);
        for (std::size_t i = 0; i < ids.size(); ++i) precommit[item_wires[i]] = ids[i];
        surface_complaints(sim, pending);
    }

    // Input sharing. Excluded players' wires carry the configured default
    // as a public constant. Survivors re-entering after a restart prove
    // their fresh sharing equals the bit committed up front.
    std::map<WireId, Dbc> live;
    std::map<WireId, int> reads_left;
    for (const Circuit::Input& in : cfg.circuit.inputs)
        reads_left[in.wire] = cfg.circuit.reads_of(in.wire);

    PlayerSet excluded = PlayerSet::full(sim.n).minus(sim.active);
    std::map<WireId, Bit> defaults = effective_inputs(cfg, excluded);

    for (PlayerId p = 0; p < sim.n; ++p) {
        std::vector<WireId> wires = cfg.circuit.input_wires_of(p);
        for (std::size_t i = 0; i < wires.size(); ++i) {
            WireId w = wires[i];
            if (!sim.active.contains(p)) {
                live[w] = public_constant(defaults.at(w));
                continue;
            }
            Bit b = configured_bit(cfg, p, i);
            if (attempt > 0) b = sim.strategy.restart_input(p, b);
            Dbc d = dbc_create(sim, p, b, at + "/in/w" + std::to_string(w));
            if (attempt > 0 && precommit.count(w) && precommit[w] != kNone) {
                if (!dbc_matches_commitment(sim, d, precommit[w]))
                    throw AssumptionViolatedError(
                        "recommitted input rejected without identification");
            }
            live[w] = std::move(d);
        }
    }

    sim.strategy.set_phase(Phase::Compute);
    for (std::size_t gi = 0; gi < cfg.circuit.gates.size(); ++gi) {
        const Gate& g = cfg.circuit.gates[gi];
        const std::string lbl = at + "/g" + std::to_string(gi);
        if (g.op == GateOp::And) {
            Dbc x = take_wire(sim, live, reads_left, g.a, lbl + "/cx");
            Dbc y = take_wire(sim, live, reads_left, g.b, lbl + "/cy");
            live[g.out] = dbc_and(sim, cfg.code, x, y, policy, lbl);
        } else {
            Dbc x = take_wire(sim, live, reads_left, g.a, lbl + "/cx");
            live[g.out] = dbc_not(sim, x, lbl);
        }
        reads_left[g.out] = cfg.circuit.reads_of(g.out);
    }

    sim.strategy.set_phase(Phase::Reveal);
    std::vector<Bit> result;
    for (WireId o : cfg.circuit.outputs) {
        Dbc d = take_wire(sim, live, reads_left, o, at + "/out/w" + std::to_string(o));
        SecretId vs = d.value_secret;
        DbcOpen open = dbc_unveil(sim, d);
        if (!open.ok)
            throw AssumptionViolatedError("output opening rejected without identification");
        if (vs != kNoSecret) sim.ledger.record_all(vs, sim.active, Cause::ProtocolOutput);
        result.push_back(open.value);
    }
    return result;
}

std::string sets_line(const AdversaryStructure& s) {
    std::vector<PlayerSet> max = s.maximal_sets();
    std::sort(max.begin(), max.end(), PlayerSet::lex_less);
    if (max.empty()) return " none";
    std::string out;
    for (const PlayerSet& m : max) out += " " + m.to_string();
    return out;
}

// ---- report text ------------------------------------------------------------

[[noreturn]] void bad_report(const std::string& what) {
    throw std::runtime_error("run report: " + what);
}

PlayerSet parse_set(const std::string& tok) {
    if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}') bad_report("bad set " + tok);
    PlayerSet s;
    std::istringstream in(tok.substr(1, tok.size() - 2));
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) bad_report("bad set " + tok);
        s.add(std::stoi(part));
    }
    return s;
}

std::string section(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line)) bad_report("missing section " + name);
    if (line == name) return "";
    if (line.rfind(name + " ", 0) != 0) bad_report("expected section " + name);
    return line.substr(name.size() + 1);
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> v;
    std::string t;
    while (in >> t) v.push_back(t);
    return v;
}

AdversaryStructure parse_sets(const std::string& rest, int n) {
    std::vector<PlayerSet> sets;
    for (const std::string& t : tokens(rest)) {
        if (t == "none") return AdversaryStructure(n, {});
        sets.push_back(parse_set(t));
    }
    return AdversaryStructure(n, std::move(sets));
}

} // namespace

std::string RunReport::to_text() const {
    std::ostringstream out;
    out << "RESULT ";
    if (completed) {
        out << "completed";
        for (std::size_t i = 0; i < result.size(); ++i)
            out << " w" << output_wires[i] << "=" << result[i];
    } else {
        out << "failed " << failure;
    }
    out << "\nCONFLICTS n=" << conflicts.n();
    for (auto [a, b] : conflicts.edges()) out << " (" << a << "," << b << ")";
    out << "\nCHEATERS " << identified_cheaters.to_string();
    out << "\nRESTARTS";
    if (restarts.empty()) out << " none";
    for (const PlayerSet& s : restarts) out << " " << s.to_string();
    out << "\nAPOSTERIORI_SECURE" << sets_line(aposteriori_secure);
    out << "\nAPOSTERIORI_ROBUST" << sets_line(aposteriori_robust);
    out << "\n";
    return out.str();
}

RunReport parse_run_report(const std::string& text) {
    std::istringstream in(text);
    RunReport r;

    std::string rest = section(in, "RESULT");
    if (rest.rfind("completed", 0) == 0) {
        r.completed = true;
        for (const std::string& t : tokens(rest.substr(9))) {
            std::size_t eq = t.find('=');
            if (t.size() < 4 || t[0] != 'w' || eq == std::string::npos)
                bad_report("bad result entry " + t);
            r.output_wires.push_back(std::stoi(t.substr(1, eq - 1)));
            r.result.push_back(std::stoi(t.substr(eq + 1)) & 1);
        }
    } else if (rest.rfind("failed ", 0) == 0) {
        r.failure = rest.substr(7);
    } else {
        bad_report("bad RESULT line");
    }

    rest = section(in, "CONFLICTS");
    std::vector<std::string> toks = tokens(rest);
    if (toks.empty() || toks[0].rfind("n=", 0) != 0) bad_report("CONFLICTS misses n=");
    int n = std::stoi(toks[0].substr(2));
    r.conflicts = ConflictGraph(n);
    for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        std::size_t comma = t.find(',');
        if (t.size() < 5 || t.front() != '(' || t.back() != ')' || comma == std::string::npos)
            bad_report("bad conflict " + t);
        r.conflicts.add_conflict(std::stoi(t.substr(1, comma - 1)),
                                 std::stoi(t.substr(comma + 1, t.size() - comma - 2)));
    }

    r.identified_cheaters = parse_set(section(in, "CHEATERS"));
    for (const std::string& t : tokens(section(in, "RESTARTS"))) {
        if (t == "none") break;
        r.restarts.push_back(parse_set(t));
    }
    r.aposteriori_secure = parse_sets(section(in, "APOSTERIORI_SECURE"), n);
    r.aposteriori_robust = parse_sets(section(in, "APOSTERIORI_ROBUST"), n);
    return r;
}

// ---- the protocol -----------------------------------------------------------

RunReport run(Sim& sim, const RunConfig& cfg) {
    if (sim.n <= 2) throw PreconditionViolatedError("fewer than three players");
    if (!robustness_precondition(sim.n, sim.structure))
        throw PreconditionViolatedError("two tolerated sets cover all players but one");
    for (const Circuit::Input& in : cfg.circuit.inputs)
        if (in.player >= sim.n)
            throw std::invalid_argument("circuit names player " + std::to_string(in.player) +
                                        " beyond the table");
    bind_inputs(cfg.circuit, cfg.inputs); // input vectors must line up before anything runs

    DirectionPolicy policy = default_policy(sim.structure);
    if (cfg.chosen_b) {
        const auto& max = sim.structure.maximal_sets();
        if (std::find(max.begin(), max.end(), *cfg.chosen_b) == max.end())
            throw std::invalid_argument("chosen transfer set must be maximal in the structure");
        policy.chosen_b = *cfg.chosen_b;
    }

    RunReport rep;
    rep.output_wires = cfg.circuit.outputs;

    std::map<WireId, GbcxId> precommit;
    int attempt = 0;
    for (;;) {
        if (attempt > sim.n) throw std::logic_error("restart loop exceeded the player count");
        try {
            rep.result = attempt_once(sim, cfg, attempt, policy, precommit);
            rep.completed = true;
            break;
        } catch (const CheaterIdentifiedError& e) {
            rep.identified_cheaters = rep.identified_cheaters.unite(e.players);
            for (PlayerId p : e.players.members()) sim.exclude(p);
            rep.restarts.push_back(e.players);
            sim.note(EventKind::Restart, -1, -1, e.players.to_string() + " excluded");
            if (!precondition_on(sim.active, sim.active_structure))
                throw PreconditionViolatedError("exclusion left too few players to continue");
            ++attempt;
        }
    }

    rep.conflicts = sim.conflicts;
    AposterioriSecurity ap = aposteriori_security(sim);
    rep.aposteriori_secure = std::move(ap.secure);
    rep.aposteriori_robust = std::move(ap.robust);
    return rep;
}

AposterioriSecurity aposteriori_security(const Sim& sim) {
    const int n = sim.n;
    const PlayerSet all = PlayerSet::full(n);
    const auto& max = sim.structure.maximal_sets();
    std::vector<PlayerSet> secure_sets;

    if (sim.conflicts.edge_count() == 0) {
        // nothing was ever mediated and every sharing stayed an all-player
        // split: the full powerset is safe
        secure_sets.push_back(all);
    } else {
        // maximal collusions whose complement absorbed a mediated transfer:
        // the receiver was in conflict with the whole set while the sender
        // was in conflict with none of it, so the pads landed exactly on
        // its complement
        std::vector<PlayerSet> losers;
        for (const OtConflictSession& s : sim.ot_sessions) {
            PlayerSet window = s.receiver_conflicts.minus(s.sender_conflicts);
            for (const PlayerSet& a : max) {
                if (a.empty() || !a.subset_of(window)) continue;
                if (std::find(losers.begin(), losers.end(), a) == losers.end())
                    losers.push_back(a);
            }
        }
        for (std::uint32_t bits = 0; bits <= all.bits(); ++bits) {
            PlayerSet s(bits);
            PlayerSet comp = s.complement(n);
            bool comp_maximal = std::find(max.begin(), max.end(), comp) != max.end();
            bool lost = std::find(losers.begin(), losers.end(), comp) != losers.end();
            if (sim.structure.contains(comp) && (!comp_maximal || lost)) continue;
            secure_sets.push_back(s);
        }
    }

    AdversaryStructure secure(n, std::move(secure_sets));
    std::vector<PlayerSet> robust_sets;
    for (const PlayerSet& s : secure.maximal_sets())
        for (PlayerId p : s.members()) robust_sets.push_back(s.without(p));
    AdversaryStructure robust(n, std::move(robust_sets));
    return {std::move(secure), std::move(robust)};
}

std::map<WireId, Bit> effective_inputs(const RunConfig& cfg, PlayerSet excluded) {
    std::map<PlayerId, std::vector<Bit>> eff = cfg.inputs;
    for (PlayerId p : excluded.members()) {
        std::vector<WireId> wires = cfg.circuit.input_wires_of(p);
        auto it = cfg.default_inputs.find(p);
        if (it != cfg.default_inputs.end())
            eff[p] = it->second;
        else
            eff[p].assign(wires.size(), cfg.default_input & 1);
    }
    return bind_inputs(cfg.circuit, eff);
}

} // namespace rmpc
