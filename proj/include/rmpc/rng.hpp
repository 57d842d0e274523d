#pragma once

#include <cstdint>
#include <random>

#include "rmpc/players.hpp"

namespace rmpc {

// All randomness of a run flows through one seeded engine, drawn in schedule
// order. mt19937_64 is fully specified by the standard, so identical seeds
// give identical runs on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }
    Bit bit() { return static_cast<Bit>(eng_() & 1u); }

    // Deterministic bounded draw; modulo bias is irrelevant here, the
    // simulation only needs reproducibility.
    std::uint32_t below(std::uint32_t bound) {
        return bound ? static_cast<std::uint32_t>(eng_() % bound) : 0;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace rmpc
