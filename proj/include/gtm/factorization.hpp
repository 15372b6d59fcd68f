#pragma once

// Desubstitution: writing a factor as x * sigma^k(u) * y with admissible
// boundary context, the induced prefix/suffix pair of a long factor, and the
// pair equivalence that mirrors equality of subword counts up to length k.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gtm/word.hpp"

namespace gtm {

// One admissible way of writing U as x * sigma^k(u) * y. The cut x must be a
// proper suffix of the image of some letter a, the tail y a proper prefix of
// the image of some letter b, and the context word a u b a factor of the
// infinite word. The boundary letter is recorded exactly when its fragment is
// nonempty.
struct SigmaFactorization {
    int m = 2;
    int k = 1;
    Word x;
    Word u;
    Word y;
    std::optional<Letter> a;  // present iff x is nonempty
    std::optional<Letter> b;  // present iff y is nonempty

    Word reassemble() const;  // x * sigma^k(u) * y
    nlohmann::json to_json() const;
};

// All admissible factorizations of U, ordered by increasing |x|. Empty when
// U admits none (in particular when U is not a factor).
std::vector<SigmaFactorization> enumerate_factorizations(int m, int k, const Word& U);

// The unique factorization of a factor of length >= 2 m^k.
SigmaFactorization unique_factorization(int m, int k, const Word& U);

// The boundary pair (p, s) = (x, y) of the unique factorization.
struct PSPair {
    Word p;
    Word s;

    friend bool operator==(const PSPair&, const PSPair&) = default;
    friend auto operator<=>(const PSPair&, const PSPair&) = default;
};

PSPair ps_pair(int m, int k, const Word& U);

// Scale-by-scale decomposition of a prefix (or suffix) of sigma^k(anchor):
// each part is a run of consecutive letters, and the word reassembles as
//   prefix side:  sigma^{k-1}(parts[0]) * ... * sigma^0(parts[k-1])
//   suffix side:  sigma^0(parts[0]) * ... * sigma^{k-1}(parts[k-1])
// digits[i] = |parts[i]|; on the prefix side the digits read the length in
// base m most significant first, on the suffix side least significant first.
struct ImageDecomposition {
    int m = 2;
    int k = 1;
    Letter anchor = 0;
    bool suffix_side = false;
    std::vector<int> digits;
    std::vector<Word> parts;

    Word reassemble() const;
    nlohmann::json to_json() const;
};

// The length-L prefix (resp. suffix) of sigma^k(j), 0 <= L < m^k, together
// with its decomposition.
std::pair<Word, ImageDecomposition> image_prefix(int m, int k, Letter j, std::size_t L);
std::pair<Word, ImageDecomposition> image_suffix(int m, int k, Letter j, std::size_t L);

// Boundary-pair equivalence at order k: both pairs must split as
// (x sigma^{k-1}(p), sigma^{k-1}(q) y) with the same x and y, and the letter
// counts of the decoded context words must agree up to a shift by
// (1, ..., 1) in either direction. Throws MalformedPairError when a
// component does not decode.
bool equivalent_pairs(int m, int k, const PSPair& lhs, const PSPair& rhs);

// Number of equivalence classes of boundary pairs of length-n factors,
// n >= 2 m^k.
std::int64_t count_pair_classes(int m, int k, std::size_t n);

}  // namespace gtm
