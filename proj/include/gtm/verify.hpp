#pragma once

// Brute-force cross-checks: each check recomputes both sides of an identity
// (one side by direct enumeration or dynamic-programming counts, the other
// by closed form or structural decomposition) and reports any mismatch with
// a reproducing instance.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtm/word.hpp"

namespace gtm {

struct CheckReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    std::int64_t instances = 0;
    std::vector<nlohmann::json> failures;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

// The counts of the descending pattern 0, -1, ..., -k (mod m) in the images
// of single letters: the image of 0 beats every other image by exactly
// m^(k choose 2), and all other images tie.
CheckReport check_image_count_gap(int m, int k);

// Same pattern on images of equal-length words: the gap scales with the
// difference in the number of zeros, and words with distinct letter counts
// keep distinguishable images one order up.
CheckReport check_count_gap_scaling(int m, int k, int samples, std::uint64_t seed);

// Letter-count equality lifts through images: x and y have equal letter
// counts iff their k-fold images share all subword counts up to length k+1.
// Exhaustive over all word pairs of equal length up to max_len.
CheckReport check_abelian_lift(int m, int k, int max_len);

// All m descending patterns of a fixed length ell <= k occur equally often
// in a k-fold image, regardless of the starting letter.
CheckReport check_progression_counts(int m, int k, int ell, const Word& u);

// The closed form for the pattern-count difference between two images
// sigma^{k-1}(g sigma(u) d) built from contexts with matching combined
// letter counts. Instances are drawn from image fragments by default;
// arbitrary_words switches to unconstrained context words.
CheckReport check_context_difference(int m, int k, int instances, std::uint64_t seed,
                                     bool arbitrary_words = false);

// Two factors share all subword counts up to length k iff they admit
// desubstitutions at exponent k-1 with equal outer fragments and cores with
// equal letter counts. Exhaustive over factor pairs of each length <= max_n.
CheckReport check_factorization_characterization(int m, int k, std::size_t max_n);

// Three-way agreement at length n: boundary-pair classes, the closed-form
// class count, and the enumerated k-binomial complexity; plus consistency of
// the pair equivalence with the factor equivalence on every factor pair.
CheckReport check_pair_class_agreement(int m, int k, std::size_t n);

// Enumerated complexities against the closed forms, one row per length.
CheckReport check_complexity_formulas(int m, int k, std::size_t from, std::size_t to);

struct SuiteOptions {
    int m = 3;
    int k = 2;
    std::size_t max_n = 0;  // 0 = per-suite default
    std::uint64_t seed = 1729;
    int instances = 200;
};

// Suite names: all | prop41 | cor42 | bothdir | lemma43 | bigdiff |
// characterization | main-equiv | theorems.
std::vector<CheckReport> run_suite(const std::string& suite, const SuiteOptions& options);

}  // namespace gtm
