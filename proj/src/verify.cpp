#include "gtm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <tuple>

#include "gtm/binomial.hpp"
#include "gtm/errors.hpp"
#include "gtm/factorization.hpp"
#include "gtm/factors.hpp"
#include "gtm/formulas.hpp"

namespace gtm {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Count count_power(int base, std::int64_t exp) {
    Count r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r *= base;
    return r;
}

// The word -(start), -(start+1), ..., -(start+len-1), reduced mod m.
Word descending_pattern(int m, int start, int len) {
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        const int value = ((-(start + i)) % m + m) % m;
        letters.push_back(static_cast<Letter>(value));
    }
    return Word(m, std::move(letters));
}

// Deterministic small draw; bias is irrelevant for instance generation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Word random_word(std::mt19937_64& rng, int m, std::size_t len) {
    std::vector<Letter> letters(len);
    for (auto& c : letters) c = static_cast<Letter>(draw(rng, static_cast<std::uint64_t>(m)));
    return Word(m, std::move(letters));
}

Word random_factor(std::mt19937_64& rng, int m, std::size_t len) {
    const FactorSet& fs = factor_set(m, len);
    return fs.words[draw(rng, fs.words.size())];
}

// All m^len words of the given length, in lexicographic order.
std::vector<Word> all_words(int m, int len) {
    std::vector<Word> words;
    std::vector<Letter> current(static_cast<std::size_t>(len), 0);
    for (;;) {
        words.push_back(Word(m, current));
        int pos = len - 1;
        while (pos >= 0 && current[static_cast<std::size_t>(pos)] == m - 1) {
            current[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++current[static_cast<std::size_t>(pos)];
    }
    return words;
}

nlohmann::json word_json(const Word& w) { return w.str(); }

}  // namespace

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["params"] = params;
    j["instances"] = instances;
    j["failures"] = failures;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

CheckReport check_image_count_gap(int m, int k) {
    const auto start = Clock::now();
    CheckReport r;
    r.check = "prop41";
    r.params = {{"m", m}, {"k", k}};
    if (m < 2 || k < 1) throw std::invalid_argument("check needs m >= 2, k >= 1");
    const Word e = descending_pattern(m, 0, k + 1);
    const Count gap = count_power(m, static_cast<std::int64_t>(k) * (k - 1) / 2);
    std::vector<Count> counts;
    counts.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
        counts.push_back(subword_count(sigma_power(m, k, Word(m, {static_cast<Letter>(j)})), e));
    for (int j = 1; j < m; ++j) {
        ++r.instances;
        if (counts[0] - counts[static_cast<std::size_t>(j)] != gap) {
            r.failures.push_back({{"j", j},
                                  {"count_zero", counts[0].str()},
                                  {"count_j", counts[static_cast<std::size_t>(j)].str()},
                                  {"expected_gap", gap.str()}});
        }
    }
    for (int j = 2; j < m; ++j) {
        ++r.instances;
        if (counts[1] != counts[static_cast<std::size_t>(j)]) {
            r.failures.push_back({{"j", j},
                                  {"count_one", counts[1].str()},
                                  {"count_j", counts[static_cast<std::size_t>(j)].str()}});
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

namespace {

// Shared core for the gap-scaling check: verify one pair of equal-length
// words against the closed-form gap, and separability of the images when the
// letter counts differ.
void check_gap_pair(int m, int k, const Word& u, const Word& v, const Word& e, const Count& unit,
                    CheckReport& r, bool check_separation) {
    const Word iu = sigma_power(m, k, u);
    const Word iv = sigma_power(m, k, v);
    const Count lhs = subword_count(iu, e) - subword_count(iv, e);
    const Count rhs = unit * (parikh(u)[0] - parikh(v)[0]);
    ++r.instances;
    if (lhs != rhs) {
        r.failures.push_back({{"u", word_json(u)},
                              {"v", word_json(v)},
                              {"difference", lhs.str()},
                              {"expected", rhs.str()}});
        return;
    }
    if (check_separation && parikh(u) != parikh(v)) {
        ++r.instances;
        if (equivalent(iu, iv, k + 1)) {
            r.failures.push_back({{"u", word_json(u)},
                                  {"v", word_json(v)},
                                  {"reason", "images are order-(k+1) equivalent"}});
        }
    }
}

}  // namespace

CheckReport check_count_gap_scaling(int m, int k, int samples, std::uint64_t seed) {
    const auto start = Clock::now();
    CheckReport r;
    r.check = "cor42";
    r.params = {{"m", m}, {"k", k}, {"samples", samples}, {"seed", seed}};
    if (m < 2 || k < 1) throw std::invalid_argument("check needs m >= 2, k >= 1");
    const Word e = descending_pattern(m, 0, k + 1);
    const Count unit = count_power(m, static_cast<std::int64_t>(k) * (k - 1) / 2);

    // Exhaustive portion: all pairs of equal length while the pair count
    // stays around a thousand per length.
    int max_exhaustive = 0;
    for (int len = 1; len <= 8; ++len) {
        double pairs = 1;
        for (int i = 0; i < 2 * len; ++i) pairs *= m;
        if (pairs <= 1024) max_exhaustive = len;
    }
    for (int len = 1; len <= max_exhaustive; ++len) {
        const std::vector<Word> words = all_words(m, len);
        // Signatures of images are reused across the pair loop via keys.
        std::vector<std::string> keys;
        std::vector<Count> pattern_counts;
        std::vector<int> zeros;
        keys.reserve(words.size());
        for (const Word& w : words) {
            const Word img = sigma_power(m, k, w);
            keys.push_back(signature(img, k + 1).key());
            pattern_counts.push_back(subword_count(img, e));
            zeros.push_back(parikh(w)[0]);
        }
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i; j < words.size(); ++j) {
                ++r.instances;
                const Count lhs = pattern_counts[i] - pattern_counts[j];
                const Count rhs = unit * (zeros[i] - zeros[j]);
                if (lhs != rhs) {
                    r.failures.push_back({{"u", word_json(words[i])},
                                          {"v", word_json(words[j])},
                                          {"difference", lhs.str()},
                                          {"expected", rhs.str()}});
                    continue;
                }
                if (parikh(words[i]) != parikh(words[j])) {
                    ++r.instances;
                    if (keys[i] == keys[j]) {
                        r.failures.push_back({{"u", word_json(words[i])},
                                              {"v", word_json(words[j])},
                                              {"reason", "images are order-(k+1) equivalent"}});
                    }
                }
            }
        }
    }

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const std::size_t len = static_cast<std::size_t>(max_exhaustive) + 1 + draw(rng, 3);
        const Word u = random_word(rng, m, len);
        const Word v = random_word(rng, m, len);
        check_gap_pair(m, k, u, v, e, unit, r, true);
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckReport check_abelian_lift(int m, int k, int max_len) {
    const auto start = Clock::now();
    CheckReport r;
    r.check = "bothdir";
    r.params = {{"m", m}, {"k", k}, {"max_len", max_len}};
    if (m < 2 || k < 1 || max_len < 1) throw std::invalid_argument("check needs m >= 2, k >= 1, max_len >= 1");
    for (int len = 1; len <= max_len; ++len) {
        const std::vector<Word> words = all_words(m, len);
        std::vector<ParikhVector> counts;
        std::vector<std::string> keys;
        for (const Word& w : words) {
            counts.push_back(parikh(w));
            keys.push_back(signature(sigma_power(m, k, w), k + 1).key());
        }
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                ++r.instances;
                const bool abelian = counts[i] == counts[j];
                const bool lifted = keys[i] == keys[j];
                if (abelian != lifted) {
                    r.failures.push_back({{"x", word_json(words[i])},
                                          {"y", word_json(words[j])},
                                          {"abelian_equivalent", abelian},
                                          {"images_equivalent", lifted}});
                }
            }
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckReport check_progression_counts(int m, int k, int ell, const Word& u) {
    const auto start = Clock::now();
    CheckReport r;
    r.check = "lemma43";
    r.params = {{"m", m}, {"k", k}, {"ell", ell}, {"u", u.str()}};
    if (m < 2 || k < 1) throw std::invalid_argument("check needs m >= 2, k >= 1");
    if (ell < 1 || ell > k) throw std::invalid_argument("pattern length must satisfy 1 <= ell <= k");
    const Word image = sigma_power(m, k, u);
    const Count base = subword_count(image, descending_pattern(m, 0, ell));
    for (int j = 0; j < m; ++j) {
        ++r.instances;
        const Count shifted = subword_count(image, descending_pattern(m, j, ell));
        if (shifted != base) {
            r.failures.push_back({{"j", j},
                                  {"u", word_json(u)},
                                  {"base_count", base.str()},
                                  {"shifted_count", shifted.str()}});
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

namespace {

// Proper suffix (length < m) of the one-step image of a.
Word image_suffix_fragment(int m, int a, int len) {
    std::vector<Letter> letters;
    for (int i = 0; i < len; ++i)
        letters.push_back(static_cast<Letter>((a + m - len + i) % m));
    return Word(m, std::move(letters));
}

// Proper prefix (length < m) of the one-step image of b.
Word image_prefix_fragment(int m, int b, int len) {
    std::vector<Letter> letters;
    for (int i = 0; i < len; ++i) letters.push_back(static_cast<Letter>((b + i) % m));
    return Word(m, std::move(letters));
}

struct ContextInstance {
    Word gamma, gamma_p, delta, delta_p, u, u_p;
};

ContextInstance draw_context_instance(std::mt19937_64& rng, int m, bool arbitrary_words) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        ContextInstance inst;
        if (arbitrary_words) {
            inst.gamma = random_word(rng, m, draw(rng, static_cast<std::uint64_t>(m) + 2));
            inst.delta = random_word(rng, m, draw(rng, static_cast<std::uint64_t>(m) + 2));
            inst.gamma_p = random_word(rng, m, draw(rng, static_cast<std::uint64_t>(m) + 2));
            inst.delta_p = random_word(rng, m, draw(rng, static_cast<std::uint64_t>(m) + 2));
        } else {
            inst.gamma = image_suffix_fragment(m, static_cast<int>(draw(rng, m)),
                                               static_cast<int>(draw(rng, m)));
            inst.delta = image_prefix_fragment(m, static_cast<int>(draw(rng, m)),
                                               static_cast<int>(draw(rng, m)));
            inst.gamma_p = image_suffix_fragment(m, static_cast<int>(draw(rng, m)),
                                                 static_cast<int>(draw(rng, m)));
            inst.delta_p = image_prefix_fragment(m, static_cast<int>(draw(rng, m)),
                                                 static_cast<int>(draw(rng, m)));
        }
        if (parikh(inst.gamma.concat(inst.delta)) != parikh(inst.gamma_p.concat(inst.delta_p)))
            continue;
        const std::size_t core_len = draw(rng, 6);
        if (arbitrary_words) {
            inst.u = random_word(rng, m, core_len);
            inst.u_p = random_word(rng, m, core_len);
        } else {
            inst.u = random_factor(rng, m, core_len);
            inst.u_p = random_factor(rng, m, core_len);
        }
        return inst;
    }
    throw InvariantError("context-instance sampling failed to satisfy the letter-count constraint");
}

}  // namespace

CheckReport check_context_difference(int m, int k, int instances, std::uint64_t seed,
                                     bool arbitrary_words) {
    const auto start = Clock::now();
    CheckReport r;
    r.check = "bigdiff";
    r.params = {{"m", m},
                {"k", k},
                {"instances", instances},
                {"seed", seed},
                {"arbitrary_words", arbitrary_words}};
    if (m < 2 || k < 2) throw std::invalid_argument("check needs m >= 2, k >= 2");
    const Word e = descending_pattern(m, 0, k + 1);
    const std::int64_t choose2 = static_cast<std::int64_t>(k) * (k - 1) / 2;
    const Count unit = count_power(m, choose2);
    const Count unit_low = count_power(m, choose2 - 1);
    const Letter last = static_cast<Letter>(m - 1);

    std::mt19937_64 rng(seed);
    for (int s = 0; s < instances; ++s) {
        const ContextInstance inst = draw_context_instance(rng, m, arbitrary_words);
        const Word w1 = sigma_power(m, k - 1, inst.gamma.concat(sigma_apply(inst.u)).concat(inst.delta));
        const Word w2 =
            sigma_power(m, k - 1, inst.gamma_p.concat(sigma_apply(inst.u_p)).concat(inst.delta_p));
        const Count lhs = subword_count(w1, e) - subword_count(w2, e);

        const std::int64_t zeros_u = parikh(inst.u)[0];
        const std::int64_t zeros_u_p = parikh(inst.u_p)[0];
        const std::int64_t zeros_gamma = parikh(inst.gamma)[0];
        const std::int64_t zeros_gamma_p = parikh(inst.gamma_p)[0];
        const std::int64_t last_delta = parikh(inst.delta)[last];
        const std::int64_t last_delta_p = parikh(inst.delta_p)[last];
        const auto core_len = static_cast<std::int64_t>(inst.u.size());
        Count rhs = unit * (zeros_u - zeros_u_p +
                            core_len * (zeros_gamma - zeros_gamma_p + last_delta - last_delta_p));

        const Word gd = inst.gamma.concat(inst.delta);
        const Word gd_p = inst.gamma_p.concat(inst.delta_p);
        Count correction = 0;
        for (int b = 0; b < m; ++b) {
            const Word right(m, {static_cast<Letter>(b), last});
            const Word left(m, {0, static_cast<Letter>(b)});
            correction += subword_count(gd, right) - subword_count(gd_p, right);
            correction += subword_count(gd, left) - subword_count(gd_p, left);
        }
        rhs += unit_low * correction;

        ++r.instances;
        if (lhs != rhs) {
            r.failures.push_back({{"gamma", word_json(inst.gamma)},
                                  {"gamma_prime", word_json(inst.gamma_p)},
                                  {"delta", word_json(inst.delta)},
                                  {"delta_prime", word_json(inst.delta_p)},
                                  {"u", word_json(inst.u)},
                                  {"u_prime", word_json(inst.u_p)},
                                  {"difference", lhs.str()},
                                  {"expected", rhs.str()}});
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckReport check_factorization_characterization(int m, int k, std::size_t max_n) {
    const auto start = Clock::now();
    CheckReport r;
    r.check = "characterization";
    r.params = {{"m", m}, {"k", k}, {"max_n", max_n}};
    if (m < 2 || k < 2) throw std::invalid_argument("check needs m >= 2, k >= 2");

    using Deco = std::tuple<std::string, std::string, ParikhVector>;
    std::size_t first_nontrivial = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        const FactorSet& fs = factor_set(m, n);
        std::vector<std::string> keys;
        std::vector<std::vector<Deco>> decos;
        keys.reserve(fs.words.size());
        decos.reserve(fs.words.size());
        for (const Word& w : fs.words) {
            keys.push_back(signature(w, k).key());
            std::vector<Deco> d;
            for (const SigmaFactorization& f : enumerate_factorizations(m, k - 1, w))
                d.emplace_back(f.x.str(), f.y.str(), parikh(f.u));
            std::sort(d.begin(), d.end());
            d.erase(std::unique(d.begin(), d.end()), d.end());
            decos.push_back(std::move(d));
        }
        bool any_equivalent = false;
        for (std::size_t i = 0; i < fs.words.size(); ++i) {
            for (std::size_t j = i + 1; j < fs.words.size(); ++j) {
                ++r.instances;
                const bool same_class = keys[i] == keys[j];
                any_equivalent = any_equivalent || same_class;
                bool shared = false;
                auto it = decos[i].begin();
                auto jt = decos[j].begin();
                while (it != decos[i].end() && jt != decos[j].end()) {
                    if (*it == *jt) {
                        shared = true;
                        break;
                    }
                    if (*it < *jt) ++it;
                    else ++jt;
                }
                if (same_class != shared) {
                    r.failures.push_back({{"n", n},
                                          {"U", word_json(fs.words[i])},
                                          {"V", word_json(fs.words[j])},
                                          {"equivalent", same_class},
                                          {"shared_decomposition", shared}});
                }
            }
        }
        if (any_equivalent && first_nontrivial == 0) first_nontrivial = n;
    }
    const auto threshold = static_cast<std::size_t>(ipow_checked(m, k - 1)) * 2;
    if (max_n >= threshold) {
        ++r.instances;
        if (first_nontrivial != threshold) {
            r.failures.push_back({{"first_length_with_equivalent_pair", first_nontrivial},
                                  {"expected", threshold}});
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckReport check_pair_class_agreement(int m, int k, std::size_t n) {
    const auto start = Clock::now();
    CheckReport r;
    r.check = "main-equiv";
    r.params = {{"m", m}, {"k", k}, {"n", n}};
    if (m < 2 || k < 2) throw std::invalid_argument("check needs m >= 2, k >= 2");

    const std::int64_t enumerated_pairs = count_pair_classes(m, k, n);
    const std::int64_t closed_form = pair_class_formula(m, k, static_cast<std::int64_t>(n));
    const std::int64_t enumerated_factors = kbinomial_complexity(m, k, n);
    ++r.instances;
    if (enumerated_pairs != closed_form) {
        r.failures.push_back({{"n", n},
                              {"pair_classes", enumerated_pairs},
                              {"closed_form", closed_form}});
    }
    ++r.instances;
    if (enumerated_factors != closed_form) {
        r.failures.push_back({{"n", n},
                              {"factor_classes", enumerated_factors},
                              {"closed_form", closed_form}});
    }

    const FactorSet& fs = factor_set(m, n);
    std::vector<PSPair> pairs;
    std::vector<std::string> keys;
    pairs.reserve(fs.words.size());
    for (const Word& w : fs.words) {
        pairs.push_back(ps_pair(m, k, w));
        keys.push_back(signature(w, k).key());
    }
    for (std::size_t i = 0; i < fs.words.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.words.size(); ++j) {
            ++r.instances;
            const bool by_pairs = equivalent_pairs(m, k, pairs[i], pairs[j]);
            const bool by_counts = keys[i] == keys[j];
            if (by_pairs != by_counts) {
                r.failures.push_back({{"n", n},
                                      {"U", word_json(fs.words[i])},
                                      {"V", word_json(fs.words[j])},
                                      {"pair_equivalent", by_pairs},
                                      {"count_equivalent", by_counts}});
            }
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckReport check_complexity_formulas(int m, int k, std::size_t from, std::size_t to) {
    const auto start = Clock::now();
    CheckReport r;
    r.check = "theorems";
    r.params = {{"m", m}, {"k", k}, {"from", from}, {"to", to}};
    if (m < 2 || k < 2) throw std::invalid_argument("check needs m >= 2, k >= 2");
    if (from > to) throw std::invalid_argument("empty length range");
    for (std::size_t n = from; n <= to; ++n) {
        const auto n64 = static_cast<std::int64_t>(n);
        const std::int64_t p_emp = factor_complexity(m, n);
        const std::int64_t p_form = factor_count_formula(m, n64);
        ++r.instances;
        if (p_emp != p_form)
            r.failures.push_back({{"quantity", "factor"}, {"n", n}, {"computed", p_emp}, {"formula", p_form}});
        const std::int64_t a_emp = abelian_complexity(m, n);
        const std::int64_t a_form = abelian_count_formula(m, n64);
        ++r.instances;
        if (a_emp != a_form)
            r.failures.push_back({{"quantity", "abelian"}, {"n", n}, {"computed", a_emp}, {"formula", a_form}});
        const std::int64_t b_emp = kbinomial_complexity(m, k, n);
        const std::int64_t b_form = kbinomial_formula(m, k, n64);
        ++r.instances;
        if (b_emp != b_form)
            r.failures.push_back({{"quantity", "binomial"}, {"n", n}, {"computed", b_emp}, {"formula", b_form}});
        if (m == 2) {
            ++r.instances;
            const std::int64_t special = binary_kbinomial_formula(k, n64);
            if (special != b_form)
                r.failures.push_back(
                    {{"quantity", "binary_closed_form"}, {"n", n}, {"computed", special}, {"formula", b_form}});
        }
        if (m >= 3 && k == 2 && n64 >= static_cast<std::int64_t>(m) * m) {
            ++r.instances;
            const std::int64_t special = order2_kbinomial_formula(m, n64);
            if (special != b_form)
                r.failures.push_back(
                    {{"quantity", "order2_closed_form"}, {"n", n}, {"computed", special}, {"formula", b_form}});
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

namespace {

CheckReport merge_reports(const std::string& name, nlohmann::json params,
                          std::vector<CheckReport> parts) {
    CheckReport merged;
    merged.check = name;
    merged.params = std::move(params);
    for (CheckReport& part : parts) {
        merged.instances += part.instances;
        merged.elapsed_ms += part.elapsed_ms;
        for (auto& f : part.failures) merged.failures.push_back(std::move(f));
    }
    return merged;
}

CheckReport run_progression_grid(int m, int k) {
    std::vector<CheckReport> parts;
    for (std::size_t len = 1; len <= 3; ++len) {
        for (const Word& u : factor_set(m, len).words) {
            for (int ell = 1; ell <= k; ++ell)
                parts.push_back(check_progression_counts(m, k, ell, u));
        }
    }
    return merge_reports("lemma43", {{"m", m}, {"k", k}, {"max_core_len", 3}}, std::move(parts));
}

int default_lift_length(int m) {
    if (m == 2) return 4;
    if (m == 3) return 3;
    return 2;
}

}  // namespace

std::vector<CheckReport> run_suite(const std::string& suite, const SuiteOptions& options) {
    const int m = options.m;
    const int k = options.k;
    if (m < 2) throw std::invalid_argument("suite needs m >= 2");
    if (k < 2) throw std::invalid_argument("suite needs k >= 2");
    const auto inner_block = static_cast<std::size_t>(ipow_checked(m, k - 1));
    const auto outer_block = static_cast<std::size_t>(ipow_checked(m, k));

    std::vector<CheckReport> reports;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "prop41") {
        known = true;
        reports.push_back(check_image_count_gap(m, k));
    }
    if (all || suite == "cor42") {
        known = true;
        reports.push_back(check_count_gap_scaling(m, k, options.instances, options.seed));
    }
    if (all || suite == "bothdir") {
        known = true;
        const int max_len = options.max_n > 0 ? static_cast<int>(options.max_n) : default_lift_length(m);
        reports.push_back(check_abelian_lift(m, k, max_len));
    }
    if (all || suite == "lemma43") {
        known = true;
        reports.push_back(run_progression_grid(m, k));
    }
    if (all || suite == "bigdiff") {
        known = true;
        reports.push_back(check_context_difference(m, k, options.instances, options.seed));
    }
    if (all || suite == "characterization") {
        known = true;
        const std::size_t max_n =
            options.max_n > 0 ? options.max_n : 2 * inner_block + 2 * static_cast<std::size_t>(m);
        reports.push_back(check_factorization_characterization(m, k, max_n));
    }
    if (all || suite == "main-equiv") {
        known = true;
        const std::size_t first = 2 * outer_block;
        std::size_t last = options.max_n > 0 ? options.max_n : first + static_cast<std::size_t>(m) - 1;
        if (last < first) throw std::invalid_argument("max n below the unique-desubstitution threshold");
        for (std::size_t n = first; n <= last; ++n)
            reports.push_back(check_pair_class_agreement(m, k, n));
    }
    if (all || suite == "theorems") {
        known = true;
        const std::size_t to = options.max_n > 0 ? options.max_n : 3 * outer_block;
        reports.push_back(check_complexity_formulas(m, k, 0, to));
    }
    if (!known) throw std::invalid_argument("unknown suite: " + suite);
    return reports;
}

}  // namespace gtm
