#include "rmpc/structures.hpp"

#include <algorithm>
#include <sstream>

namespace rmpc {

namespace {

// Drop sets contained in another set of the list, keep lexicographic order.
std::vector<PlayerSet> antichain(std::vector<PlayerSet> sets) {
    std::sort(sets.begin(), sets.end(), PlayerSet::lex_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<PlayerSet> keep;
    for (const PlayerSet& s : sets) {
        bool dominated = false;
        for (const PlayerSet& t : sets)
            if (s.bits() != t.bits() && s.subset_of(t)) { dominated = true; break; }
        if (!dominated) keep.push_back(s);
    }
    return keep;
}

} // namespace

AdversaryStructure::AdversaryStructure(int n_players, std::vector<PlayerSet> maximal_sets)
    : n_(n_players) {
    PlayerSet::check_count(n_players);
    PlayerSet all = PlayerSet::full(n_players);
    for (PlayerSet s : maximal_sets) {
        if (!s.subset_of(all))
            throw std::invalid_argument("adversary set exceeds player range: " + s.to_string());
    }
    maximal_ = antichain(std::move(maximal_sets));
}

bool AdversaryStructure::contains(PlayerSet s) const {
    if (s.empty()) return true; // nobody misbehaving is always tolerable
    for (PlayerSet m : maximal_)
        if (s.subset_of(m)) return true;
    return false;
}

AdversaryStructure AdversaryStructure::restrict_to(PlayerSet survivors) const {
    std::vector<PlayerSet> cut;
    cut.reserve(maximal_.size());
    for (PlayerSet m : maximal_) cut.push_back(m.intersect(survivors));
    return AdversaryStructure(n_, std::move(cut));
}

std::string AdversaryStructure::to_string() const {
    std::string s;
    for (size_t i = 0; i < maximal_.size(); ++i) {
        if (i) s += " ";
        s += maximal_[i].to_string();
    }
    return s;
}

ConflictGraph::ConflictGraph(int n_players) : n_(n_players), adj_(n_players, 0) {
    PlayerSet::check_count(n_players);
}

void ConflictGraph::add_conflict(PlayerId a, PlayerId b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        throw std::invalid_argument("conflict endpoint out of range");
    if (a == b)
        throw std::invalid_argument("a player cannot be in conflict with himself");
    adj_[a] |= 1u << b;
    adj_[b] |= 1u << a;
}

bool ConflictGraph::in_conflict(PlayerId a, PlayerId b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    return (adj_[a] >> b) & 1u;
}

PlayerSet ConflictGraph::neighbours(PlayerId p) const {
    if (p < 0 || p >= n_) return PlayerSet();
    return PlayerSet(adj_[p]);
}

std::vector<std::pair<PlayerId, PlayerId>> ConflictGraph::edges() const {
    std::vector<std::pair<PlayerId, PlayerId>> e;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if ((adj_[a] >> b) & 1u) e.emplace_back(a, b);
    return e;
}

int ConflictGraph::edge_count() const {
    int c = 0;
    for (int a = 0; a < n_; ++a) c += __builtin_popcount(adj_[a]);
    return c / 2;
}

bool ConflictGraph::covered_by(PlayerSet s) const {
    for (int a = 0; a < n_; ++a) {
        if (s.contains(a)) continue;
        // every neighbour of an uncovered vertex must be inside s
        if (adj_[a] & ~s.bits()) return false;
    }
    return true;
}

bool robustness_precondition(int n_players, const AdversaryStructure& structure) {
    if (n_players <= 2) return false;
    PlayerSet all = PlayerSet::full(n_players);
    const auto& max = structure.maximal_sets();
    for (const PlayerSet& a : max) {
        for (const PlayerSet& b : max) {
            // two tolerated sets must never swallow all players but one
            if (all.minus(a.unite(b)).size() <= 1) return false;
        }
    }
    return true;
}

bool coverage_pair_condition(int n_players, const AdversaryStructure& structure) {
    PlayerSet all = PlayerSet::full(n_players);
    const auto& max = structure.maximal_sets();
    for (const PlayerSet& a : max)
        for (const PlayerSet& b : max)
            if (a.unite(b) == all) return false;
    return true;
}

std::vector<PlayerSet> vertex_covers(const ConflictGraph& graph) {
    int n = graph.n();
    PlayerSet::check_count(n);
    std::vector<PlayerSet> minimal;
    std::uint32_t limit = n == 32 ? ~0u : (1u << n);
    for (std::uint32_t bits = 0; bits < limit; ++bits) {
        PlayerSet s(bits);
        if (!graph.covered_by(s)) continue;
        bool is_minimal = true;
        for (PlayerId p : s.members()) {
            PlayerSet t = s;
            t.remove(p);
            if (graph.covered_by(t)) { is_minimal = false; break; }
        }
        if (is_minimal) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end(), PlayerSet::lex_less);
    return minimal;
}

bool is_consistent(const ConflictGraph& graph, const AdversaryStructure& structure) {
    if (graph.edge_count() == 0) return true; // the empty set covers
    for (const PlayerSet& m : structure.maximal_sets())
        if (graph.covered_by(m)) return true;
    return false;
}

PlayerSet identify_cheaters(const ConflictGraph& graph, const AdversaryStructure& structure) {
    if (graph.edge_count() == 0) return PlayerSet();
    if (!is_consistent(graph, structure))
        throw std::logic_error("conflict graph has no cover inside the adversary structure");
    // Intersect every tolerated cover. Tolerated covers are exactly the
    // covering subsets of maximal sets, so enumerate those directly.
    PlayerSet acc = PlayerSet::full(graph.n());
    for (const PlayerSet& m : structure.maximal_sets()) {
        if (!graph.covered_by(m)) continue;
        // enumerate subsets of m
        std::uint32_t mb = m.bits();
        for (std::uint32_t sub = mb;; sub = (sub - 1) & mb) {
            PlayerSet s(sub);
            if (graph.covered_by(s)) acc = acc.intersect(s);
            if (sub == 0) break;
        }
    }
    return acc;
}

AdversaryStructure parse_adversary_structure(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<PlayerSet> sets;
    while (std::getline(in, line)) {
        ++lineno;
        // trim whitespace
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        std::string t = line.substr(b, e - b + 1);
        if (n < 0) {
            if (t.rfind("P=", 0) != 0)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": expected header P=<n>");
            try {
                n = std::stoi(t.substr(2));
            } catch (const std::exception&) {
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": bad player count");
            }
            PlayerSet::check_count(n);
            continue;
        }
        PlayerSet s;
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
            int p;
            try {
                p = std::stoi(item);
            } catch (const std::exception&) {
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": bad player index '" + item + "'");
            }
            if (p < 0 || p >= n)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": player index out of range");
            s.add(p);
        }
        sets.push_back(s);
    }
    if (n < 0) throw std::runtime_error("missing P=<n> header");
    return AdversaryStructure(n, std::move(sets));
}

AdversaryStructure parse_adversary_structure_text(const std::string& text) {
    std::istringstream in(text);
    return parse_adversary_structure(in);
}

std::string format_adversary_structure(const AdversaryStructure& structure) {
    std::string out = "P=" + std::to_string(structure.n()) + "\n";
    for (const PlayerSet& m : structure.maximal_sets()) {
        auto mem = m.members();
        for (size_t i = 0; i < mem.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(mem[i]);
        }
        out += "\n";
    }
    return out;
}

} // namespace rmpc
