#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spn {

using VertexId = std::uint32_t;

/// Thrown when p, n, a digit word, or a size limit is out of contract.
class parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Refuse instances bigger than this unless the caller raises the limit.
inline constexpr std::uint64_t default_max_vertices = 19683;  // 3^9

/// Codec between digit words over [p]_0 of length n and integer ids.
/// Most significant digit first, so id order equals lexicographic word
/// order and every prefix maps to a contiguous id range.
class WordCodec {
public:
    WordCodec(int p, int n) : p_(p), n_(n) {
        if (p < 3) throw parameter_error("p must be at least 3");
        if (n < 1) throw parameter_error("n must be at least 1");
        std::uint64_t count = 1;
        for (int t = 0; t < n; ++t) {
            count *= static_cast<std::uint64_t>(p);
            if (count > (std::uint64_t{1} << 31))
                throw parameter_error("p^n does not fit in a vertex id");
        }
        vertex_count_ = static_cast<VertexId>(count);
    }

    int p() const { return p_; }
    int n() const { return n_; }
    VertexId vertex_count() const { return vertex_count_; }

    VertexId encode(const std::vector<std::uint8_t>& digits) const {
        if (static_cast<int>(digits.size()) != n_)
            throw parameter_error("digit word has wrong length");
        VertexId id = 0;
        for (std::uint8_t d : digits) {
            if (d >= p_) throw parameter_error("digit out of range");
            id = id * p_ + d;
        }
        return id;
    }

    std::vector<std::uint8_t> decode(VertexId id) const {
        std::vector<std::uint8_t> digits(n_);
        for (int t = n_ - 1; t >= 0; --t) {
            digits[t] = static_cast<std::uint8_t>(id % p_);
            id /= p_;
        }
        return digits;
    }

    /// Digit at position t (0 = most significant) without decoding the word.
    std::uint8_t digit(VertexId id, int t) const {
        for (int s = n_ - 1; s > t; --s) id /= p_;
        return static_cast<std::uint8_t>(id % p_);
    }

    /// Parse a word like "0121"; digits beyond '9' use letters a, b, ...
    VertexId parse(const std::string& word) const {
        if (static_cast<int>(word.size()) != n_)
            throw parameter_error("vertex word '" + word + "' must have " +
                                  std::to_string(n_) + " digits");
        std::vector<std::uint8_t> digits(n_);
        for (int t = 0; t < n_; ++t) {
            int d = digit_value(word[t]);
            if (d < 0 || d >= p_)
                throw parameter_error("vertex word '" + word +
                                      "' has a digit outside [0, p)");
            digits[t] = static_cast<std::uint8_t>(d);
        }
        return encode(digits);
    }

    std::string format(VertexId id) const {
        std::string word(n_, '0');
        for (int t = n_ - 1; t >= 0; --t) {
            word[t] = digit_char(static_cast<int>(id % p_));
            id /= p_;
        }
        return word;
    }

    /// Image of a vertex under a permutation of the digit alphabet [p]_0.
    VertexId apply_digit_permutation(const std::vector<int>& perm, VertexId id) const {
        VertexId out = 0;
        VertexId scale = 1;
        for (int t = 0; t < n_; ++t) {
            out += static_cast<VertexId>(perm[id % p_]) * scale;
            id /= p_;
            scale *= p_;
        }
        return out;
    }

private:
    static int digit_value(char c) {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
        return -1;
    }
    static char digit_char(int d) {
        return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
    }

    int p_;
    int n_;
    VertexId vertex_count_;
};

}  // namespace spn
