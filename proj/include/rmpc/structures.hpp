#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rmpc/players.hpp"

namespace rmpc {

// Monotone family of tolerable collusions, stored by its maximal sets.
// The maximal sets form an antichain; membership of any subset is decided
// by inclusion in one of them.
class AdversaryStructure {
public:
    AdversaryStructure() = default;
    AdversaryStructure(int n_players, std::vector<PlayerSet> maximal_sets);

    int n() const { return n_; }
    const std::vector<PlayerSet>& maximal_sets() const { return maximal_; }

    bool contains(PlayerSet s) const;

    // Structure induced on a surviving subset of the players: every maximal
    // set is intersected with the survivors and the antichain is rebuilt.
    AdversaryStructure restrict_to(PlayerSet survivors) const;

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<PlayerSet> maximal_;
};

// Undirected conflict graph on the players. Self-loops are rejected:
// a player never declares a conflict with himself.
class ConflictGraph {
public:
    ConflictGraph() = default;
    explicit ConflictGraph(int n_players);

    int n() const { return n_; }
    void add_conflict(PlayerId a, PlayerId b);
    bool in_conflict(PlayerId a, PlayerId b) const;
    PlayerSet neighbours(PlayerId p) const;
    std::vector<std::pair<PlayerId, PlayerId>> edges() const; // sorted (a<b)
    int edge_count() const;
    bool covered_by(PlayerSet s) const; // every edge has an endpoint in s

private:
    int n_ = 0;
    std::vector<std::uint32_t> adj_;
};

struct ConflictStructure {
    ConflictGraph graph;
    AdversaryStructure structure;
};

// False iff two sets of the structure cover all players but one, or fewer
// than three players take part. Required for any run that must survive
// disruption.
bool robustness_precondition(int n_players, const AdversaryStructure& structure);

// False iff two sets of the structure cover all players. Weaker than the
// robustness precondition; enough for jointly tossed coins and globally
// verified commitments.
bool coverage_pair_condition(int n_players, const AdversaryStructure& structure);

// All minimal vertex covers of the conflict graph, in lexicographic order
// of their sorted member lists. Exhaustive over subsets; refuses n beyond
// kMaxPlayers.
std::vector<PlayerSet> vertex_covers(const ConflictGraph& graph);

// True iff some vertex cover of the graph lies in the structure. Covers are
// closed under supersets, so it is enough to test the maximal sets.
bool is_consistent(const ConflictGraph& graph, const AdversaryStructure& structure);

// Players guaranteed to have misbehaved: the intersection of every vertex
// cover that the structure tolerates. Empty result means the conflicts do
// not yet pin anyone down. Throws if no tolerated cover exists.
PlayerSet identify_cheaters(const ConflictGraph& graph, const AdversaryStructure& structure);

// Adversary structure text format:
//   P=<n>
//   <comma separated indices, one maximal set per line>
// Blank lines are ignored. Malformed input reports the offending line.
AdversaryStructure parse_adversary_structure(std::istream& in);
AdversaryStructure parse_adversary_structure_text(const std::string& text);
std::string format_adversary_structure(const AdversaryStructure& structure);

} // namespace rmpc
