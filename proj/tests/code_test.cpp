#include <doctest.h>

#include <optional>
#include <random>
#include <set>

#include "rmpc/code.hpp"
#include "rmpc/simnet.hpp"

using namespace rmpc;

namespace {

int dist(Word a, Word b) { return word_weight(static_cast<Word>(a ^ b)); }

// Brute-force reference: nearest codeword if it is within t and unique.
std::optional<Word> oracle_decode(const LinearCode& code, Word w) {
    int best = code.m() + 1, ties = 0;
    Word who = 0;
    for (Word c : code.codewords()) {
        int d = dist(c, w);
        if (d < best) { best = d; ties = 1; who = c; }
        else if (d == best) ++ties;
    }
    if (best > code.t()) return std::nullopt;
    REQUIRE(ties == 1);
    return who;
}

} // namespace

TEST_CASE("default code has the advertised shape") {
    LinearCode code = hamming15();
    CHECK(code.m() == 15);
    CHECK(code.k() == 11);
    CHECK(code.d() == 3);
    CHECK(code.t() == 1);
    CHECK(code.sigma_m() == 1);
    CHECK(code.parity().size() == 4);
    for (int i = 0; i < 11; ++i) // systematic: message bits pass through
        CHECK((code.generator()[i] & 0x7ff) == (1u << i));
    CHECK(code.to_string() == "[15,11,3] sigma=1/15 eps=0.1");
}

TEST_CASE("encoding basics") {
    LinearCode code = hamming15();
    CHECK(code.encode(0) == 0);
    CHECK(code.encode(1) == code.generator()[0]);

    auto all = code.codewords();
    CHECK(all.size() == 2048);
    std::set<Word> uniq(all.begin(), all.end());
    CHECK(uniq.size() == 2048);
    for (Word c : all) CHECK(code.is_codeword(c));
}

TEST_CASE("minimum distance verified by enumeration") {
    LinearCode code = hamming15();
    auto all = code.codewords();
    int min_w = 16;
    for (Word c : all)
        if (c != 0) min_w = std::min(min_w, word_weight(c));
    CHECK(min_w == 3);
    // spot-check that pairwise distance agrees with the weight argument
    for (std::size_t i = 0; i < all.size(); i += 211)
        for (std::size_t j = i + 1; j < all.size(); j += 193)
            CHECK(dist(all[i], all[j]) >= 3);
}

TEST_CASE("single flips are corrected") {
    LinearCode code = hamming15();
    auto all = code.codewords();
    for (std::size_t i = 0; i < all.size(); i += 37) {
        Word c = all[i];
        CHECK(code.decode(c) == c);
        for (int pos = 0; pos < 15; ++pos) {
            Word damaged = c ^ static_cast<Word>(1u << pos);
            auto got = code.decode(damaged);
            REQUIRE(got.has_value());
            CHECK(*got == c);
            CHECK(oracle_decode(code, damaged) == got);
        }
    }
}

TEST_CASE("double flips decode to the wrong codeword") {
    // the code is perfect, so two flips land within one step of a different
    // codeword instead of producing a detectable failure
    LinearCode code = hamming15();
    Word c = code.encode(0x2f1);
    for (int p = 0; p < 15; ++p)
        for (int q = p + 1; q < 15; ++q) {
            Word damaged = c ^ static_cast<Word>(1u << p) ^ static_cast<Word>(1u << q);
            auto got = code.decode(damaged);
            REQUIRE(got.has_value());
            CHECK(*got != c);
            CHECK(code.is_codeword(*got));
        }
}

TEST_CASE("decoder matches the brute-force oracle on random words") {
    LinearCode code = hamming15();
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        Word w = static_cast<Word>(rng() & 0x7fff);
        CHECK(code.decode(w) == oracle_decode(code, w));
    }
}

TEST_CASE("parameter gate rejects weak configurations") {
    auto rows = hamming15().generator();
    // sigma too large: k must exceed (1/2 + 2*sigma)*m
    CHECK_THROWS_AS(LinearCode(15, 11, 3, rows, 2, 15, 0.1), PreconditionViolatedError);
    // epsilon too large: d must exceed epsilon*m
    CHECK_THROWS_AS(LinearCode(15, 11, 3, rows, 1, 15, 0.3), PreconditionViolatedError);
    // sigma*m must be a positive integer
    CHECK_THROWS_AS(LinearCode(15, 11, 3, rows, 1, 7, 0.1), PreconditionViolatedError);
    // the shipped configuration passes
    CHECK_NOTHROW(LinearCode(15, 11, 3, rows, 1, 15, 0.1));
}

TEST_CASE("construction rejects malformed codes") {
    auto rows = hamming15().generator();
    CHECK_THROWS_AS(LinearCode(15, 11, 4, rows, 1, 15, 0.1), std::invalid_argument);
    auto dep = rows;
    dep[10] = dep[0] ^ dep[1];
    CHECK_THROWS_AS(LinearCode(15, 11, 3, dep, 1, 15, 0.1), std::invalid_argument);
    rows.pop_back();
    CHECK_THROWS_AS(LinearCode(15, 11, 3, rows, 1, 15, 0.1), std::invalid_argument);
}

TEST_CASE("code specs parse") {
    LinearCode byname = parse_code_spec("code=15,11,3,1/15,0.1");
    CHECK(byname.to_string() == "[15,11,3] sigma=1/15 eps=0.1");
    CHECK(byname.encode(5) == hamming15().encode(5));

    // same code with rows spelled out in hex
    std::string spec = "15,11,3,1/15,0.1";
    char buf[16];
    LinearCode ref = hamming15();
    for (Word row : ref.generator()) {
        std::snprintf(buf, sizeof buf, ",%x", row);
        spec += buf;
    }
    LinearCode byrows = parse_code_spec(spec);
    CHECK(byrows.encode(0x13) == byname.encode(0x13));

    CHECK_THROWS_AS(parse_code_spec("15,11,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code_spec("14,10,3,1/14,0.1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code_spec("15,11,3,1,0.1"), std::invalid_argument);
}
