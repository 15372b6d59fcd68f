#include "gtm/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "gtm/errors.hpp"
#include "gtm/factors.hpp"
#include "gtm/formulas.hpp"
#include "gtm/limits.hpp"

namespace gtm {

namespace {

// Letters U[upos .. upos+len) equal letters V[vpos .. vpos+len).
bool segment_equals(const Word& U, std::size_t upos, const Word& V, std::size_t vpos, std::size_t len) {
    return std::equal(U.letters().begin() + static_cast<std::ptrdiff_t>(upos),
                      U.letters().begin() + static_cast<std::ptrdiff_t>(upos + len),
                      V.letters().begin() + static_cast<std::ptrdiff_t>(vpos));
}

std::size_t checked_block_length(int m, int k) {
    const std::int64_t blk = ipow_checked(m, k);
    if (static_cast<std::uint64_t>(blk) > limits().max_prefix)
        throw ResourceCapError("image block length exceeds the prefix cap");
    return static_cast<std::size_t>(blk);
}

std::vector<Word> letter_images(int m, int k) {
    std::vector<Word> images;
    images.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
        images.push_back(sigma_power(m, k, Word(m, {static_cast<Letter>(j)})));
    return images;
}

void validate_alphabet_args(int m, int k, const Word& U) {
    if (m < 2) throw std::invalid_argument("alphabet must have at least two letters");
    if (k < 1) throw std::invalid_argument("substitution power must be at least 1");
    if (U.alphabet() != m) throw std::invalid_argument("word alphabet does not match m");
}

}  // namespace

Word SigmaFactorization::reassemble() const {
    return x.concat(sigma_power(m, k, u)).concat(y);
}

nlohmann::json SigmaFactorization::to_json() const {
    nlohmann::json j;
    j["k"] = k;
    j["x"] = x.str();
    j["u"] = u.str();
    j["y"] = y.str();
    j["a"] = a ? nlohmann::json(static_cast<int>(*a)) : nlohmann::json(nullptr);
    j["b"] = b ? nlohmann::json(static_cast<int>(*b)) : nlohmann::json(nullptr);
    return j;
}

std::vector<SigmaFactorization> enumerate_factorizations(int m, int k, const Word& U) {
    validate_alphabet_args(m, k, U);
    const std::size_t blk = checked_block_length(m, k);
    const std::vector<Word> images = letter_images(m, k);

    std::vector<SigmaFactorization> results;
    const std::size_t max_cut = std::min(blk - 1, U.size());
    for (std::size_t c = 0; c <= max_cut; ++c) {
        std::optional<Letter> a;
        if (c > 0) {
            // The last letter of the image of a determines a.
            const auto cand = static_cast<Letter>((U[c - 1] + k) % m);
            if (!segment_equals(U, 0, images[cand], blk - c, c)) continue;
            a = cand;
        }
        const std::size_t nblocks = (U.size() - c) / blk;
        std::vector<Letter> core;
        core.reserve(nblocks);
        bool ok = true;
        for (std::size_t i = 0; i < nblocks && ok; ++i) {
            const std::size_t pos = c + i * blk;
            const Letter f = U[pos];  // images start with their source letter
            ok = segment_equals(U, pos, images[f], 0, blk);
            core.push_back(f);
        }
        if (!ok) continue;
        const std::size_t tpos = c + nblocks * blk;
        const std::size_t tlen = U.size() - tpos;
        std::optional<Letter> b;
        if (tlen > 0) {
            const Letter cand = U[tpos];
            if (!segment_equals(U, tpos, images[cand], 0, tlen)) continue;
            b = cand;
        }
        std::vector<Letter> context;
        context.reserve(core.size() + 2);
        if (a) context.push_back(*a);
        context.insert(context.end(), core.begin(), core.end());
        if (b) context.push_back(*b);
        const Word context_word(m, std::move(context));
        if (!factor_set(m, context_word.size()).contains(context_word)) continue;

        SigmaFactorization f;
        f.m = m;
        f.k = k;
        f.x = U.slice(0, c);
        f.u = Word(m, std::move(core));
        f.y = U.slice(tpos, tlen);
        f.a = a;
        f.b = b;
        results.push_back(std::move(f));
    }
    return results;
}

SigmaFactorization unique_factorization(int m, int k, const Word& U) {
    validate_alphabet_args(m, k, U);
    const std::size_t blk = checked_block_length(m, k);
    if (U.size() / 2 < blk)
        throw TooShortError("uniqueness needs length at least twice the image block length");
    auto all = enumerate_factorizations(m, k, U);
    if (all.empty()) throw NotAFactorError("word is not a factor of the infinite word");
    if (all.size() > 1) throw InvariantError("long factor admits more than one factorization");
    return std::move(all.front());
}

PSPair ps_pair(int m, int k, const Word& U) {
    SigmaFactorization f = unique_factorization(m, k, U);
    return PSPair{std::move(f.x), std::move(f.y)};
}

Word ImageDecomposition::reassemble() const {
    Word acc(m, {});
    for (int i = 0; i < k; ++i) {
        const int power = suffix_side ? i : k - 1 - i;
        acc = acc.concat(sigma_power(m, power, parts[static_cast<std::size_t>(i)]));
    }
    return acc;
}

nlohmann::json ImageDecomposition::to_json() const {
    nlohmann::json j;
    j["anchor"] = static_cast<int>(anchor);
    j["side"] = suffix_side ? "suffix" : "prefix";
    j["digits"] = digits;
    j["parts"] = nlohmann::json::array();
    for (const Word& part : parts) j["parts"].push_back(part.str());
    return j;
}

namespace {

Word run_of_letters(int m, int start, int count) {
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        letters.push_back(static_cast<Letter>((start + i) % m));
    return Word(m, std::move(letters));
}

void build_prefix_parts(int m, int k, int j, std::size_t L, ImageDecomposition& out) {
    if (k == 0) return;
    const std::size_t blk = checked_block_length(m, k - 1);
    const int c = static_cast<int>(L / blk);
    out.digits.push_back(c);
    out.parts.push_back(run_of_letters(m, j, c));
    build_prefix_parts(m, k - 1, (j + c) % m, L % blk, out);
}

void build_suffix_parts(int m, int k, int j, std::size_t L, ImageDecomposition& out) {
    if (k == 0) return;
    const std::size_t blk = checked_block_length(m, k - 1);
    const int alpha = static_cast<int>(L / blk);
    build_suffix_parts(m, k - 1, (j + m - alpha - 1) % m, L % blk, out);
    out.digits.push_back(alpha);
    out.parts.push_back(run_of_letters(m, (j + m - alpha) % m, alpha));
}

ImageDecomposition validated_shell(int m, int k, Letter j, std::size_t L, bool suffix_side) {
    if (m < 2) throw std::invalid_argument("alphabet must have at least two letters");
    if (k < 1) throw std::invalid_argument("substitution power must be at least 1");
    if (j >= m) throw std::invalid_argument("anchor letter outside the alphabet");
    if (L >= checked_block_length(m, k))
        throw std::invalid_argument("fragment must be shorter than the image block");
    ImageDecomposition d;
    d.m = m;
    d.k = k;
    d.anchor = j;
    d.suffix_side = suffix_side;
    return d;
}

}  // namespace

std::pair<Word, ImageDecomposition> image_prefix(int m, int k, Letter j, std::size_t L) {
    ImageDecomposition d = validated_shell(m, k, j, L, false);
    build_prefix_parts(m, k, j, L, d);
    Word w = d.reassemble();
    return {std::move(w), std::move(d)};
}

std::pair<Word, ImageDecomposition> image_suffix(int m, int k, Letter j, std::size_t L) {
    ImageDecomposition d = validated_shell(m, k, j, L, true);
    build_suffix_parts(m, k, j, L, d);
    Word w = d.reassemble();
    return {std::move(w), std::move(d)};
}

namespace {

// p = x * sigma^{k-1}(core) with |x| = |p| mod m^{k-1} when front is true;
// s = sigma^{k-1}(core) * y with |y| = |s| mod m^{k-1} otherwise.
struct PairComponent {
    Word fragment;  // x or y
    Word core;
};

PairComponent decode_component(const Word& w, const std::vector<Word>& images, std::size_t blk, bool front) {
    const std::size_t frag_len = w.size() % blk;
    const std::size_t start = front ? frag_len : 0;
    const std::size_t nblocks = w.size() / blk;
    std::vector<Letter> core;
    core.reserve(nblocks);
    for (std::size_t i = 0; i < nblocks; ++i) {
        const std::size_t pos = start + i * blk;
        const Letter f = w[pos];
        if (!segment_equals(w, pos, images[f], 0, blk))
            throw MalformedPairError("pair component does not split into image blocks");
        core.push_back(f);
    }
    PairComponent result;
    result.fragment = front ? w.slice(0, frag_len) : w.slice(nblocks * blk, frag_len);
    result.core = Word(w.alphabet(), std::move(core));
    return result;
}

}  // namespace

bool equivalent_pairs(int m, int k, const PSPair& lhs, const PSPair& rhs) {
    if (m < 2) throw std::invalid_argument("alphabet must have at least two letters");
    if (k < 1) throw std::invalid_argument("pair equivalence needs k >= 1");
    const std::size_t outer = checked_block_length(m, k);
    for (const Word* w : {&lhs.p, &lhs.s, &rhs.p, &rhs.s}) {
        if (w->alphabet() != m) throw std::invalid_argument("pair alphabet does not match m");
        if (w->size() >= outer) throw MalformedPairError("pair component as long as the image block");
    }
    const std::size_t blk = checked_block_length(m, k - 1);
    const std::vector<Word> images = letter_images(m, k - 1);

    const PairComponent p1 = decode_component(lhs.p, images, blk, true);
    const PairComponent s1 = decode_component(lhs.s, images, blk, false);
    const PairComponent p2 = decode_component(rhs.p, images, blk, true);
    const PairComponent s2 = decode_component(rhs.s, images, blk, false);
    if (p1.fragment != p2.fragment || s1.fragment != s2.fragment) return false;

    const ParikhVector c1 = parikh(p1.core.concat(s1.core));
    const ParikhVector c2 = parikh(p2.core.concat(s2.core));
    return parikh_shift_equal(c1, c2, 0) || parikh_shift_equal(c1, c2, 1) ||
           parikh_shift_equal(c1, c2, -1);
}

std::int64_t count_pair_classes(int m, int k, std::size_t n) {
    const std::size_t blk = checked_block_length(m, k);
    if (n / 2 < blk)
        throw TooShortError("pair classes need length at least twice the image block length");
    const FactorSet& fs = factor_set(m, n);
    std::set<PSPair> distinct;
    for (const Word& w : fs.words) distinct.insert(ps_pair(m, k, w));
    std::vector<PSPair> pairs(distinct.begin(), distinct.end());

    std::vector<std::size_t> parent(pairs.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            if (equivalent_pairs(m, k, pairs[i], pairs[j])) parent[find(i)] = find(j);
        }
    }
    std::int64_t classes = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (find(i) == i) ++classes;
    }
    return classes;
}

}  // namespace gtm
