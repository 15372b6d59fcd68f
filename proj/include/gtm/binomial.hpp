#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtm/word.hpp"

namespace gtm {

// Subword occurrence counts are exact arbitrary-precision integers; the
// identities under test involve differences like m^binom(k,2) on words of
// length m^k * n, which overflow 64 bits for modest parameters.
using Count = boost::multiprecision::cpp_int;

// Number of index tuples i_1 < ... < i_|w| selecting w inside u.
// The empty target counts once; |w| > |u| counts zero.
Count subword_count(const Word& u, const Word& w);

// Number of nonempty words of length <= k over an m-letter alphabet,
// i.e. the domain size of a depth-k signature.
std::size_t signature_domain_size(int m, int k);

// The index-th word of the canonical domain enumeration: words ordered by
// length, lexicographically within each length.
Word signature_domain_word(int m, int k, std::size_t index);

// Occurrence counts of every nonempty subword of length <= k. Equality of
// signatures is exactly k-binomial equivalence of the underlying words.
struct Signature {
    int m = 2;
    int k = 1;
    std::size_t length = 0;
    // counts[i] belongs to signature_domain_word(m, k, i).
    std::vector<Count> counts;

    bool operator==(const Signature&) const = default;

    // Canonical serialization: decimal counts joined in domain order.
    // Equal keys <=> equal signatures, so keys serve as hash/map keys.
    std::string key() const;

    nlohmann::json to_json() const;
};

// Computes all counts in one sweep over u: a trie over the domain words is
// updated once per letter, costing O(|u| * domain) additions in total.
Signature signature(const Word& u, int k);

// k-binomial equivalence. Fails fast on length or Parikh mismatch.
bool equivalent(const Word& u, const Word& v, int k);

}  // namespace gtm
