#pragma once

#include <map>
#include <string>
#include <vector>

#include "rmpc/players.hpp"

namespace rmpc {

using WireId = int;

enum class GateOp { And, Not };

struct Gate {
    GateOp op;
    WireId a = -1;
    WireId b = -1; // And only
    WireId out = -1;
};

// Boolean circuit over input wires, AND gates and NOT gates. Gates keep
// file order, and validation requires that order to be topological: a gate
// reads only wires an INPUT line or an earlier gate has written.
struct Circuit {
    struct Input {
        WireId wire;
        PlayerId player;
    };

    std::vector<Input> inputs;
    std::vector<Gate> gates;
    std::vector<WireId> outputs;

    int wire_count() const; // highest wire index + 1
    std::vector<WireId> input_wires_of(PlayerId p) const;
    int reads_of(WireId w) const; // gate operand uses plus output listings
};

// Netlist text, one statement per line:
//   INPUT w<i> player<p>
//   AND w<a> w<b> -> w<c>
//   NOT w<a> -> w<b>
//   OUTPUT w<o>
// Blank lines and lines starting with # are skipped. Errors carry the line
// number. The result is validated: every wire written exactly once and
// before any use, outputs written, at least one output.
Circuit parse_circuit(const std::string& text);
Circuit load_circuit(const std::string& path);
std::string format_circuit(const Circuit& c);

// Plaintext reference evaluation; input_bits must cover exactly the input
// wires. Returns the output wire values in listed order.
std::vector<Bit> eval_circuit(const Circuit& c, const std::map<WireId, Bit>& input_bits);

// Lines up per-player bit vectors with that player's input wires in
// declaration order. Every input wire must receive a bit and no vector may
// carry extras.
std::map<WireId, Bit> bind_inputs(const Circuit& c,
                                  const std::map<PlayerId, std::vector<Bit>>& per_player);

} // namespace rmpc
