#pragma once

// Certified factor sets of the generalized Thue-Morse words and the
// complexity functions counting factors up to various equivalences.

#include <cstdint>
#include <vector>

#include "gtm/word.hpp"

namespace gtm {

// The set of all length-n factors of the infinite word over m letters.
// The construction is exact: since the word is a fixed point of the
// substitution, every length-n occurrence sits inside the image of a factor
// of length ceil((n + m - 1) / m), starting within the first image block,
// so the set is assembled from images of a shorter set; length two is the
// least fixpoint of block-interior and block-junction pairs. The assembled
// count must equal the closed-form factor complexity exactly.
struct FactorSet {
    int m = 2;
    std::size_t n = 0;
    std::vector<Word> words;       // sorted lexicographically
    std::size_t cover_length = 0;  // length of the factors whose images cover this set

    bool contains(const Word& w) const;
};

// Shared, memoized access. References stay valid for the program lifetime.
const FactorSet& factor_set(int m, std::size_t n);

// Number of distinct length-n factors.
std::int64_t factor_complexity(int m, std::size_t n);

// Number of distinct Parikh vectors among length-n factors.
std::int64_t abelian_complexity(int m, std::size_t n);

// Number of equivalence classes of length-n factors under equality of all
// subword counts up to length k.
std::int64_t kbinomial_complexity(int m, int k, std::size_t n);

// The classes themselves: members sorted lexicographically, classes ordered
// by their lexicographically smallest member.
std::vector<std::vector<Word>> class_partition(int m, int k, std::size_t n);

struct EquivalentPair {
    std::size_t n = 0;
    Word first;
    Word second;
};

// Smallest n at which two distinct length-n factors share all subword counts
// up to length k, with the first witness pair in class order.
EquivalentPair shortest_equivalent_pair(int m, int k);

}  // namespace gtm
