#include "gtm/factors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

#include "gtm/binomial.hpp"
#include "gtm/errors.hpp"
#include "gtm/formulas.hpp"
#include "gtm/limits.hpp"

namespace gtm {

bool FactorSet::contains(const Word& w) const {
    if (w.alphabet() != m || w.size() != n) return false;
    return std::binary_search(words.begin(), words.end(), w);
}

namespace {

using Cache = std::map<std::pair<int, std::size_t>, std::unique_ptr<FactorSet>>;

const FactorSet& factor_set_locked(int m, std::size_t n, Cache& cache);

// Length-2 factors as a least fixpoint. A pair of adjacent letters either
// sits inside one image block, where consecutive letters always step by one,
// or straddles a block junction, where it reads (u - 1, v) for a pair (u, v)
// adjacent one substitution level up and therefore already in the set.
std::vector<Word> letter_pairs(int m) {
    std::set<std::pair<Letter, Letter>> known;
    std::vector<std::pair<Letter, Letter>> work;
    auto add = [&](int a, int b) {
        auto pair = std::make_pair(static_cast<Letter>(a), static_cast<Letter>(b));
        if (known.insert(pair).second) work.push_back(pair);
    };
    for (int x = 0; x < m; ++x) add(x, (x + 1) % m);
    while (!work.empty()) {
        const auto [u, v] = work.back();
        work.pop_back();
        add((u + m - 1) % m, v);
    }
    std::vector<Word> out;
    out.reserve(known.size());
    for (const auto& [a, b] : known) out.push_back(Word(m, {a, b}));
    return out;
}

std::unique_ptr<FactorSet> build_factor_set(int m, std::size_t n, Cache& cache) {
    auto set = std::make_unique<FactorSet>();
    set->m = m;
    set->n = n;
    if (n == 0) {
        set->words.push_back(Word(m, {}));
    } else if (n == 1) {
        for (int a = 0; a < m; ++a) set->words.push_back(Word(m, {static_cast<Letter>(a)}));
    } else if (n == 2) {
        set->words = letter_pairs(m);
    } else {
        // Every length-n occurrence in the fixed point lies inside the image
        // of a factor of length ceil((n + m - 1) / m), starting within the
        // first image block; that cover length is strictly below n here.
        const auto blocks = static_cast<std::size_t>(m);
        const std::size_t cover = (n + 2 * blocks - 2) / blocks;
        set->cover_length = cover;
        std::set<Word> distinct;
        for (const Word& v : factor_set_locked(m, cover, cache).words) {
            const Word image = sigma_apply(v);
            for (std::size_t offset = 0; offset < blocks; ++offset)
                distinct.insert(image.slice(offset, n));
        }
        set->words.assign(distinct.begin(), distinct.end());
    }
    if (static_cast<std::int64_t>(set->words.size()) !=
        factor_count_formula(m, static_cast<std::int64_t>(n)))
        throw InvariantError("assembled factor count disagrees with the closed form");
    return set;
}

const FactorSet& factor_set_locked(int m, std::size_t n, Cache& cache) {
    auto& slot = cache[{m, n}];
    if (!slot) slot = build_factor_set(m, n, cache);
    return *slot;
}

}  // namespace

const FactorSet& factor_set(int m, std::size_t n) {
    if (m < 2) throw std::invalid_argument("factor_set needs an alphabet of at least two letters");
    if (n > limits().max_factor_length) throw ResourceCapError("factor length exceeds the configured cap");
    static std::mutex mutex;
    static Cache cache;
    std::lock_guard<std::mutex> guard(mutex);
    return factor_set_locked(m, n, cache);
}

std::int64_t factor_complexity(int m, std::size_t n) {
    return static_cast<std::int64_t>(factor_set(m, n).words.size());
}

std::int64_t abelian_complexity(int m, std::size_t n) {
    const FactorSet& fs = factor_set(m, n);
    std::set<ParikhVector> classes;
    for (const Word& w : fs.words) classes.insert(parikh(w));
    return static_cast<std::int64_t>(classes.size());
}

std::int64_t kbinomial_complexity(int m, int k, std::size_t n) {
    if (k < 1) throw std::invalid_argument("kbinomial_complexity needs k >= 1");
    if (k == 1) return abelian_complexity(m, n);
    const FactorSet& fs = factor_set(m, n);
    std::unordered_set<std::string> keys;
    for (const Word& w : fs.words) keys.insert(signature(w, k).key());
    return static_cast<std::int64_t>(keys.size());
}

std::vector<std::vector<Word>> class_partition(int m, int k, std::size_t n) {
    if (k < 1) throw std::invalid_argument("class_partition needs k >= 1");
    const FactorSet& fs = factor_set(m, n);
    // fs.words is sorted, so each class collects its members in lexicographic
    // order and the first member is the class minimum.
    std::map<std::string, std::vector<Word>> by_key;
    for (const Word& w : fs.words) {
        std::string key;
        if (k == 1) {
            for (int c : parikh(w)) {
                key += std::to_string(c);
                key += ',';
            }
        } else {
            key = signature(w, k).key();
        }
        by_key[key].push_back(w);
    }
    std::vector<std::vector<Word>> classes;
    classes.reserve(by_key.size());
    for (auto& [key, members] : by_key) classes.push_back(std::move(members));
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<Word>& a, const std::vector<Word>& b) { return a.front() < b.front(); });
    return classes;
}

EquivalentPair shortest_equivalent_pair(int m, int k) {
    if (k < 1) throw std::invalid_argument("shortest_equivalent_pair needs k >= 1");
    for (std::size_t n = 1; n <= limits().max_factor_length; ++n) {
        for (const auto& cls : class_partition(m, k, n)) {
            if (cls.size() >= 2) return EquivalentPair{n, cls[0], cls[1]};
        }
    }
    throw ResourceCapError("no equivalent pair found below the factor length cap");
}

}  // namespace gtm
