#include "gtm/binomial.hpp"

#include <stdexcept>

#include "gtm/errors.hpp"
#include "gtm/limits.hpp"

namespace gtm {

Count subword_count(const Word& u, const Word& w) {
    if (u.alphabet() != w.alphabet()) throw std::invalid_argument("alphabet mismatch");
    // dp[j] = occurrences of the length-j prefix of w seen so far.
    std::vector<Count> dp(w.size() + 1);
    dp[0] = 1;
    for (Letter c : u) {
        // Descending j keeps each position of u usable at most once per tuple.
        for (std::size_t j = w.size(); j-- > 0;) {
            if (w[j] == c) dp[j + 1] += dp[j];
        }
    }
    return dp[w.size()];
}

std::size_t signature_domain_size(int m, int k) {
    if (m < 2 || k < 1) throw std::invalid_argument("signature domain needs m >= 2, k >= 1");
    std::size_t total = 0;
    std::size_t layer = 1;
    for (int len = 1; len <= k; ++len) {
        if (layer > (limits().max_signature_domain - total) / static_cast<std::size_t>(m))
            throw ResourceCapError("signature domain exceeds max_signature_domain cap");
        layer *= static_cast<std::size_t>(m);
        total += layer;
    }
    return total;
}

namespace {

// Domain words of one length form a contiguous index block; the word of
// rank r within the length-len block has base-m digits of r as letters.
std::size_t layer_offset(int m, int len) {
    std::size_t total = 0;
    std::size_t layer = 1;
    for (int i = 1; i < len; ++i) {
        layer *= static_cast<std::size_t>(m);
        total += layer;
    }
    return total;
}

}  // namespace

Word signature_domain_word(int m, int k, std::size_t index) {
    const std::size_t domain = signature_domain_size(m, k);
    if (index >= domain) throw std::out_of_range("signature domain index out of range");
    int len = 1;
    std::size_t layer = static_cast<std::size_t>(m);
    std::size_t skipped = 0;
    while (index >= skipped + layer) {
        skipped += layer;
        layer *= static_cast<std::size_t>(m);
        ++len;
    }
    std::size_t rank = index - skipped;
    std::vector<Letter> letters(static_cast<std::size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
        letters[static_cast<std::size_t>(i)] = static_cast<Letter>(rank % static_cast<std::size_t>(m));
        rank /= static_cast<std::size_t>(m);
    }
    return Word(m, std::move(letters));
}

Signature signature(const Word& u, int k) {
    const int m = u.alphabet();
    const std::size_t domain = signature_domain_size(m, k);
    Signature sig;
    sig.m = m;
    sig.k = k;
    sig.length = u.size();
    sig.counts.assign(domain, Count(0));

    // Trie node ids coincide with domain indices; the children of the word
    // at index i within the length-len block sit at a computable offset in
    // the next block, so no explicit trie storage is needed.
    std::vector<std::size_t> offsets(static_cast<std::size_t>(k) + 1);
    for (int len = 1; len <= k; ++len) offsets[static_cast<std::size_t>(len)] = layer_offset(m, len);

    std::vector<std::size_t> layer_sizes(static_cast<std::size_t>(k) + 1);
    layer_sizes[0] = 1;
    for (int len = 1; len <= k; ++len)
        layer_sizes[static_cast<std::size_t>(len)] = layer_sizes[static_cast<std::size_t>(len) - 1] * static_cast<std::size_t>(m);

    for (Letter c : u) {
        // Extend deepest prefixes first so every update reads pre-letter
        // values: occurrences use strictly increasing positions.
        for (int len = k - 1; len >= 1; --len) {
            const std::size_t parent_base = offsets[static_cast<std::size_t>(len)];
            const std::size_t child_base = offsets[static_cast<std::size_t>(len) + 1];
            const std::size_t parents = layer_sizes[static_cast<std::size_t>(len)];
            for (std::size_t p = 0; p < parents; ++p) {
                Count& parent = sig.counts[parent_base + p];
                if (parent != 0) sig.counts[child_base + p * static_cast<std::size_t>(m) + c] += parent;
            }
        }
        sig.counts[static_cast<std::size_t>(c)] += 1;
    }
    return sig;
}

std::string Signature::key() const {
    std::string out;
    out.reserve(counts.size() * 4);
    for (const Count& c : counts) {
        out += c.str();
        out.push_back(',');
    }
    return out;
}

nlohmann::json Signature::to_json() const {
    nlohmann::json counts_json = nlohmann::json::object();
    for (std::size_t i = 0; i < counts.size(); ++i)
        counts_json[signature_domain_word(m, k, i).str()] = counts[i].str();
    return nlohmann::json{{"m", m}, {"k", k}, {"length", length}, {"counts", counts_json}};
}

bool equivalent(const Word& u, const Word& v, int k) {
    if (u.alphabet() != v.alphabet()) throw std::invalid_argument("alphabet mismatch");
    if (u.size() != v.size()) return false;
    if (parikh(u) != parikh(v)) return false;
    if (k == 1) return true;
    return signature(u, k) == signature(v, k);
}

}  // namespace gtm
