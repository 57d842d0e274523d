#include "rmpc/circuit.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rmpc {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::runtime_error("circuit line " + std::to_string(line_no) + ": " + what);
}

int tagged(const std::string& tok, const char* prefix, int line_no) {
    std::size_t plen = std::string(prefix).size();
    if (tok.size() <= plen || tok.compare(0, plen, prefix) != 0)
        fail(line_no, "expected " + std::string(prefix) + "<index>, got '" + tok + "'");
    int v = 0;
    for (std::size_t i = plen; i < tok.size(); ++i) {
        char c = tok[i];
        if (c < '0' || c > '9')
            fail(line_no, "expected " + std::string(prefix) + "<index>, got '" + tok + "'");
        v = v * 10 + (c - '0');
        if (v > 1 << 20) fail(line_no, "index out of range in '" + tok + "'");
    }
    return v;
}

void expect_arrow(std::istringstream& in, int line_no) {
    std::string tok;
    if (!(in >> tok) || tok != "->") fail(line_no, "expected '->'");
}

void expect_end(std::istringstream& in, int line_no) {
    std::string tok;
    if (in >> tok) fail(line_no, "trailing token '" + tok + "'");
}

} // namespace

int Circuit::wire_count() const {
    int hi = -1;
    for (const Input& in : inputs) hi = std::max(hi, in.wire);
    for (const Gate& g : gates) hi = std::max({hi, g.a, g.b, g.out});
    for (WireId w : outputs) hi = std::max(hi, w);
    return hi + 1;
}

std::vector<WireId> Circuit::input_wires_of(PlayerId p) const {
    std::vector<WireId> v;
    for (const Input& in : inputs)
        if (in.player == p) v.push_back(in.wire);
    return v;
}

int Circuit::reads_of(WireId w) const {
    int n = 0;
    for (const Gate& g : gates) {
        if (g.a == w) ++n;
        if (g.op == GateOp::And && g.b == w) ++n;
    }
    for (WireId o : outputs)
        if (o == w) ++n;
    return n;
}

Circuit parse_circuit(const std::string& text) {
    Circuit c;
    std::set<WireId> written;
    std::set<WireId> listed;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;

    auto read_wire = [&](std::istringstream& in, int no) {
        std::string tok;
        if (!(in >> tok)) fail(no, "missing wire");
        return tagged(tok, "w", no);
    };
    auto need_written = [&](WireId w, int no) {
        if (!written.count(w)) fail(no, "wire w" + std::to_string(w) + " read before written");
    };
    auto write_once = [&](WireId w, int no) {
        if (!written.insert(w).second) fail(no, "wire w" + std::to_string(w) + " written twice");
    };

    while (std::getline(lines, line)) {
        ++line_no;
        std::istringstream in(line);
        std::string kw;
        if (!(in >> kw) || kw[0] == '#') continue;
        if (kw == "INPUT") {
            WireId w = read_wire(in, line_no);
            std::string ptok;
            if (!(in >> ptok)) fail(line_no, "missing player");
            PlayerId p = tagged(ptok, "player", line_no);
            if (p >= kMaxPlayers) fail(line_no, "player index out of range");
            expect_end(in, line_no);
            write_once(w, line_no);
            c.inputs.push_back({w, p});
        } else if (kw == "AND") {
            WireId a = read_wire(in, line_no);
            WireId b = read_wire(in, line_no);
            expect_arrow(in, line_no);
            WireId out = read_wire(in, line_no);
            expect_end(in, line_no);
            need_written(a, line_no);
            need_written(b, line_no);
            write_once(out, line_no);
            c.gates.push_back({GateOp::And, a, b, out});
        } else if (kw == "NOT") {
            WireId a = read_wire(in, line_no);
            expect_arrow(in, line_no);
            WireId out = read_wire(in, line_no);
            expect_end(in, line_no);
            need_written(a, line_no);
            write_once(out, line_no);
            c.gates.push_back({GateOp::Not, a, -1, out});
        } else if (kw == "OUTPUT") {
            WireId w = read_wire(in, line_no);
            expect_end(in, line_no);
            need_written(w, line_no);
            if (!listed.insert(w).second)
                fail(line_no, "wire w" + std::to_string(w) + " listed as output twice");
            c.outputs.push_back(w);
        } else {
            fail(line_no, "unknown statement '" + kw + "'");
        }
    }
    if (c.outputs.empty()) throw std::runtime_error("circuit has no outputs");
    return c;
}

Circuit load_circuit(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open circuit file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    try {
        return parse_circuit(buf.str());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string format_circuit(const Circuit& c) {
    std::ostringstream out;
    for (const Circuit::Input& in : c.inputs)
        out << "INPUT w" << in.wire << " player" << in.player << "\n";
    for (const Gate& g : c.gates) {
        if (g.op == GateOp::And)
            out << "AND w" << g.a << " w" << g.b << " -> w" << g.out << "\n";
        else
            out << "NOT w" << g.a << " -> w" << g.out << "\n";
    }
    for (WireId w : c.outputs) out << "OUTPUT w" << w << "\n";
    return out.str();
}

std::vector<Bit> eval_circuit(const Circuit& c, const std::map<WireId, Bit>& input_bits) {
    std::map<WireId, Bit> val;
    for (const Circuit::Input& in : c.inputs) {
        auto it = input_bits.find(in.wire);
        if (it == input_bits.end())
            throw std::runtime_error("no value for input wire w" + std::to_string(in.wire));
        val[in.wire] = it->second & 1;
    }
    for (const Gate& g : c.gates)
        val[g.out] = g.op == GateOp::And ? (val.at(g.a) & val.at(g.b)) : (val.at(g.a) ^ 1);
    std::vector<Bit> out;
    for (WireId w : c.outputs) out.push_back(val.at(w));
    return out;
}

std::map<WireId, Bit> bind_inputs(const Circuit& c,
                                  const std::map<PlayerId, std::vector<Bit>>& per_player) {
    std::map<WireId, Bit> bound;
    for (const auto& [p, bits] : per_player) {
        std::vector<WireId> wires = c.input_wires_of(p);
        if (bits.size() != wires.size())
            throw std::runtime_error("player " + std::to_string(p) + " supplies " +
                                     std::to_string(bits.size()) + " bits for " +
                                     std::to_string(wires.size()) + " input wires");
        for (std::size_t i = 0; i < wires.size(); ++i) bound[wires[i]] = bits[i] & 1;
    }
    for (const Circuit::Input& in : c.inputs)
        if (!bound.count(in.wire))
            throw std::runtime_error("no bits given for player " + std::to_string(in.player));
    return bound;
}

} // namespace rmpc
