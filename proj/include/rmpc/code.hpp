#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rmpc {

using Word = std::uint16_t; // bit i = position i, length <= 16

int word_weight(Word w);
std::string word_bits(Word w, int m); // "0101..." lsb first

// Binary [m,k,d] block code given by generator rows. Decoding corrects up
// to t = floor((d-1)/2) flips via a syndrome table. The parameter gate
// k > (1/2 + 2*sigma)*m and d > epsilon*m comes from the transfer protocol
// built on top; construction fails loudly when a configuration misses it.
class LinearCode {
public:
    LinearCode(int m, int k, int d, std::vector<Word> generator_rows,
               int sigma_num, int sigma_den, double epsilon);

    int m() const { return m_; }
    int k() const { return k_; }
    int d() const { return d_; }
    int t() const { return t_; }
    int sigma_m() const { return sigma_m_; } // sigma * m, an integer >= 1
    double epsilon() const { return epsilon_; }

    const std::vector<Word>& generator() const { return gen_; }
    const std::vector<Word>& parity() const { return par_; } // m-k check rows

    Word encode(Word message) const;          // message uses low k bits
    bool is_codeword(Word w) const;
    std::optional<Word> decode(Word w) const; // nearest codeword within t
    std::vector<Word> codewords() const;      // all 2^k, ascending message

    std::string to_string() const; // "[15,11,3] sigma=1/15 eps=0.1"

private:
    int m_, k_, d_, t_, sigma_m_;
    int sigma_num_, sigma_den_;
    double epsilon_;
    std::vector<Word> gen_;
    std::vector<Word> par_;
    std::vector<std::int32_t> syndrome_flip_; // syndrome -> error pattern, -1 none
};

// The default code: systematic [15,11,3] Hamming, sigma = 1/15, eps = 0.1.
LinearCode hamming15();

// Config line: "code=<m>,<k>,<d>,<num>/<den>,<eps>[,rowhex,rowhex,...]"
// (value part only). Without explicit rows the known [15,11,3] construction
// is used; anything else needs its generator spelled out.
LinearCode parse_code_spec(const std::string& text);

} // namespace rmpc
