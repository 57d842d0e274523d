#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmpc {

using PlayerId = int;
using Bit = int;

// Hard bound for exhaustive subset enumeration; bitmask representation
// relies on it.
inline constexpr int kMaxPlayers = 16;

// Subset of the player indices 0..n-1, stored as a bitmask.
class PlayerSet {
public:
    PlayerSet() = default;
    explicit PlayerSet(std::uint32_t bits) : bits_(bits) {}

    static PlayerSet full(int n) {
        check_count(n);
        return PlayerSet(n == 32 ? ~0u : ((1u << n) - 1u));
    }
    static PlayerSet single(PlayerId p) { return PlayerSet(1u << p); }
    static PlayerSet of(std::initializer_list<PlayerId> ids) {
        PlayerSet s;
        for (PlayerId p : ids) s.add(p);
        return s;
    }

    std::uint32_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }
    bool contains(PlayerId p) const { return (bits_ >> p) & 1u; }
    void add(PlayerId p) { bits_ |= 1u << p; }
    void remove(PlayerId p) { bits_ &= ~(1u << p); }
    PlayerSet with(PlayerId p) const { return PlayerSet(bits_ | (1u << p)); }
    PlayerSet without(PlayerId p) const { return PlayerSet(bits_ & ~(1u << p)); }

    bool subset_of(PlayerSet o) const { return (bits_ & o.bits_) == bits_; }
    bool proper_subset_of(PlayerSet o) const { return subset_of(o) && bits_ != o.bits_; }
    bool intersects(PlayerSet o) const { return bits_ & o.bits_; }

    PlayerSet unite(PlayerSet o) const { return PlayerSet(bits_ | o.bits_); }
    PlayerSet intersect(PlayerSet o) const { return PlayerSet(bits_ & o.bits_); }
    PlayerSet minus(PlayerSet o) const { return PlayerSet(bits_ & ~o.bits_); }
    PlayerSet complement(int n) const { return PlayerSet(full(n).bits_ & ~bits_); }

    bool operator==(const PlayerSet&) const = default;

    std::vector<PlayerId> members() const {
        std::vector<PlayerId> v;
        for (int p = 0; p < 32; ++p)
            if (contains(p)) v.push_back(p);
        return v;
    }

    // Lexicographic order on the sorted member lists. Used wherever a
    // deterministic ordering of sets is needed (reports, cover lists).
    static bool lex_less(PlayerSet a, PlayerSet b) {
        auto ma = a.members(), mb = b.members();
        return ma < mb;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (PlayerId p : members()) {
            if (!first) s += ",";
            s += std::to_string(p);
            first = false;
        }
        return s + "}";
    }

    static void check_count(int n) {
        if (n < 0 || n > kMaxPlayers)
            throw std::invalid_argument("player count out of range: " + std::to_string(n));
    }

private:
    std::uint32_t bits_ = 0;
};

} // namespace rmpc
