#include "rmpc/code.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "rmpc/simnet.hpp"

namespace rmpc {

int word_weight(Word w) { return std::popcount(w); }

std::string word_bits(Word w, int m) {
    std::string s;
    for (int i = 0; i < m; ++i) s += ((w >> i) & 1) ? '1' : '0';
    return s;
}

namespace {

Bit dot(Word a, Word b) { return static_cast<Bit>(std::popcount(static_cast<Word>(a & b)) & 1); }

// Basis of { h : <h, row> = 0 for all rows }, via RREF with pivot tracking.
std::vector<Word> null_space(std::vector<Word> rows, int m) {
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < m && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && !((rows[sel] >> c) & 1)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<Word> basis;
    for (int c = 0; c < m; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
        Word h = static_cast<Word>(1u << c);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if ((rows[i] >> c) & 1) h |= static_cast<Word>(1u << pivot_col[i]);
        basis.push_back(h);
    }
    return basis;
}

int rank_of(std::vector<Word> rows) {
    int r = 0;
    for (int c = 0; c < 16; ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && !((rows[sel] >> c) & 1)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = r + 1; i < rows.size(); ++i)
            if ((rows[i] >> c) & 1) rows[i] ^= rows[r];
        if (++r == static_cast<int>(rows.size())) break;
    }
    return r;
}

} // namespace

LinearCode::LinearCode(int m, int k, int d, std::vector<Word> generator_rows,
                       int sigma_num, int sigma_den, double epsilon)
    : m_(m), k_(k), d_(d), t_((d - 1) / 2),
      sigma_num_(sigma_num), sigma_den_(sigma_den), epsilon_(epsilon),
      gen_(std::move(generator_rows)) {
    if (m < 1 || m > 16) throw std::invalid_argument("code length out of range");
    if (k < 1 || k > m) throw std::invalid_argument("code dimension out of range");
    if (d < 1 || d > m) throw std::invalid_argument("code distance out of range");
    if (static_cast<int>(gen_.size()) != k)
        throw std::invalid_argument("generator row count != k");
    Word mask = static_cast<Word>((m == 16) ? 0xffffu : ((1u << m) - 1));
    for (Word row : gen_)
        if (row & ~mask) throw std::invalid_argument("generator row exceeds code length");
    if (rank_of(gen_) != k) throw std::invalid_argument("generator rows dependent");
    if (sigma_num < 1 || sigma_den < 1) throw std::invalid_argument("sigma not positive");

    // Transfer-protocol gate. Checked in integers where possible.
    if (m * sigma_num % sigma_den != 0)
        throw PreconditionViolatedError("sigma*m is not an integer");
    sigma_m_ = m * sigma_num / sigma_den;
    if (sigma_m_ < 1) throw PreconditionViolatedError("sigma*m < 1");
    if (2 * k * sigma_den <= (sigma_den + 4 * sigma_num) * m)
        throw PreconditionViolatedError("code dimension too small: k <= (1/2+2*sigma)*m");
    if (!(static_cast<double>(d) > epsilon * m))
        throw PreconditionViolatedError("code distance too small: d <= epsilon*m");

    // The claimed distance must be the real one.
    int actual = m + 1;
    for (Word msg = 1; msg < (1u << k); ++msg)
        actual = std::min(actual, word_weight(encode(msg)));
    if (actual != d) throw std::invalid_argument("claimed distance is wrong");

    par_ = null_space(gen_, m);
    assert(static_cast<int>(par_.size()) == m - k);

    syndrome_flip_.assign(std::size_t{1} << (m - k), -1);
    for (std::uint32_t e = 0; e < (1u << m); ++e) {
        if (word_weight(static_cast<Word>(e)) > t_) continue;
        std::uint32_t syn = 0;
        for (std::size_t j = 0; j < par_.size(); ++j)
            syn |= static_cast<std::uint32_t>(dot(par_[j], static_cast<Word>(e))) << j;
        assert(syndrome_flip_[syn] == -1 && "error patterns within t collide");
        syndrome_flip_[syn] = static_cast<std::int32_t>(e);
    }
}

Word LinearCode::encode(Word message) const {
    assert((message >> k_) == 0);
    Word w = 0;
    for (int i = 0; i < k_; ++i)
        if ((message >> i) & 1) w ^= gen_[i];
    return w;
}

bool LinearCode::is_codeword(Word w) const {
    for (Word h : par_)
        if (dot(h, w)) return false;
    return true;
}

std::optional<Word> LinearCode::decode(Word w) const {
    std::uint32_t syn = 0;
    for (std::size_t j = 0; j < par_.size(); ++j)
        syn |= static_cast<std::uint32_t>(dot(par_[j], w)) << j;
    std::int32_t flip = syndrome_flip_[syn];
    if (flip < 0) return std::nullopt;
    Word c = w ^ static_cast<Word>(flip);
    assert(is_codeword(c));
    return c;
}

std::vector<Word> LinearCode::codewords() const {
    std::vector<Word> all;
    all.reserve(std::size_t{1} << k_);
    for (std::uint32_t msg = 0; msg < (1u << k_); ++msg)
        all.push_back(encode(static_cast<Word>(msg)));
    return all;
}

std::string LinearCode::to_string() const {
    std::ostringstream os;
    os << "[" << m_ << "," << k_ << "," << d_ << "] sigma=" << sigma_num_ << "/"
       << sigma_den_ << " eps=" << epsilon_;
    return os.str();
}

namespace {

std::vector<Word> hamming15_rows() {
    // Systematic [I_11 | P]: data columns first, then the four checks. Row i
    // appends the binary representation of the i-th non-power-of-two in 1..15,
    // which makes all parity-check columns distinct and nonzero.
    static const int vals[11] = {3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15};
    std::vector<Word> rows;
    for (int i = 0; i < 11; ++i)
        rows.push_back(static_cast<Word>((1u << i) | (static_cast<unsigned>(vals[i]) << 11)));
    return rows;
}

} // namespace

LinearCode hamming15() {
    return LinearCode(15, 11, 3, hamming15_rows(), 1, 15, 0.1);
}

LinearCode parse_code_spec(const std::string& text) {
    std::string body = text;
    if (body.rfind("code=", 0) == 0) body = body.substr(5);
    std::vector<std::string> fields;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) fields.push_back(item);
    if (fields.size() < 5) throw std::invalid_argument("code spec needs m,k,d,sigma,eps");

    int m = std::stoi(fields[0]);
    int k = std::stoi(fields[1]);
    int d = std::stoi(fields[2]);
    auto slash = fields[3].find('/');
    if (slash == std::string::npos) throw std::invalid_argument("sigma must be num/den");
    int num = std::stoi(fields[3].substr(0, slash));
    int den = std::stoi(fields[3].substr(slash + 1));
    double eps = std::stod(fields[4]);

    std::vector<Word> rows;
    for (std::size_t i = 5; i < fields.size(); ++i)
        rows.push_back(static_cast<Word>(std::stoul(fields[i], nullptr, 16)));
    if (rows.empty()) {
        if (m == 15 && k == 11 && d == 3) rows = hamming15_rows();
        else throw std::invalid_argument("generator rows required for a custom code");
    }
    return LinearCode(m, k, d, std::move(rows), num, den, eps);
}

} // namespace rmpc
