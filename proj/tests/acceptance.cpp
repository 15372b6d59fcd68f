// Acceptance gate: every release-blocking property in one binary, one
// pass/fail line per criterion, nonzero exit if anything fails. All
// comparisons are exact integer equality; randomized checks run with a
// fixed published seed.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "gtm/binomial.hpp"
#include "gtm/factorization.hpp"
#include "gtm/factors.hpp"
#include "gtm/formulas.hpp"
#include "gtm/rauzy.hpp"
#include "gtm/verify.hpp"
#include "gtm/word.hpp"

namespace {

int g_failed = 0;

void criterion(int id, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("C%-2d %s  %s%s\n", id, ok ? "PASS" : "FAIL", label.c_str(), note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failed;
}

constexpr std::uint64_t kSeed = 1729;

}  // namespace

int main() {
    criterion(1, "ternary values over one full period at orders 2 and 3", [] {
        const std::vector<std::int64_t> order2 = {49, 45, 45, 48, 45, 45, 48, 45, 45};
        for (std::size_t i = 0; i < order2.size(); ++i)
            if (gtm::kbinomial_complexity(3, 2, 18 + i) != order2[i]) return false;
        std::vector<std::int64_t> order3(27, 171);
        order3[0] = 175;
        order3[9] = 174;
        order3[18] = 174;
        for (std::size_t i = 0; i < order3.size(); ++i)
            if (gtm::kbinomial_complexity(3, 3, 54 + i) != order3[i]) return false;
        return true;
    });

    criterion(2, "binary alphabet matches its closed form", [] {
        for (int k = 2; k <= 4; ++k)
            for (std::int64_t n = 0; n <= (std::int64_t{1} << (k + 2)); ++n)
                if (gtm::kbinomial_complexity(2, k, static_cast<std::size_t>(n)) !=
                    gtm::binary_kbinomial_formula(k, n))
                    return false;
        return true;
    });

    criterion(3, "order-2 closed form for alphabets of size 3 and 4", [] {
        for (int m : {3, 4})
            for (std::int64_t n = m * m; n <= 3 * m * m; ++n)
                if (gtm::kbinomial_complexity(m, 2, static_cast<std::size_t>(n)) !=
                    gtm::order2_kbinomial_formula(m, n))
                    return false;
        return true;
    });

    criterion(4, "factor complexity closed form", [] {
        for (int m = 2; m <= 5; ++m)
            for (std::size_t n = 0; n <= 100; ++n)
                if (gtm::factor_complexity(m, n) !=
                    gtm::factor_count_formula(m, static_cast<std::int64_t>(n)))
                    return false;
        return true;
    });

    criterion(5, "abelian complexity closed form and frozen small-length values", [] {
        for (int m = 2; m <= 8; ++m)
            for (std::size_t n = 0; n <= static_cast<std::size_t>(3 * m); ++n)
                if (gtm::abelian_complexity(m, n) !=
                    gtm::abelian_count_formula(m, static_cast<std::int64_t>(n)))
                    return false;
        const std::vector<std::vector<std::int64_t>> frozen = {
            {2},
            {3, 6},
            {4, 10, 12},
            {5, 15, 20, 25},
            {6, 21, 30, 39, 42},
            {7, 28, 42, 56, 63, 70},
            {8, 36, 56, 76, 88, 100, 104},
        };
        for (int m = 2; m <= 8; ++m)
            for (std::int64_t ell = 1; ell < m; ++ell) {
                const std::int64_t want = frozen[m - 2][ell - 1];
                if (gtm::abelian_count_formula(m, ell) != want) return false;
                if (gtm::abelian_complexity(m, static_cast<std::size_t>(ell)) != want) return false;
            }
        return true;
    });

    criterion(6, "general closed form and shortest equivalent pairs", [] {
        const std::vector<std::pair<int, int>> grids = {{2, 2}, {2, 3}, {3, 2}};
        for (const auto& [m, k] : grids) {
            std::int64_t period = 1;
            for (int i = 0; i < k; ++i) period *= m;
            for (std::int64_t n = 0; n < 3 * period; ++n)
                if (gtm::kbinomial_formula(m, k, n) !=
                    gtm::kbinomial_complexity(m, k, static_cast<std::size_t>(n)))
                    return false;
            if (gtm::shortest_equivalent_pair(m, k).n !=
                static_cast<std::size_t>(2 * period / m))
                return false;
        }
        return true;
    });

    criterion(7, "abelian Rauzy graph counts, eulerian property, shift isomorphism", [] {
        for (int m = 2; m <= 6; ++m)
            for (std::size_t order = 1; order < static_cast<std::size_t>(2 * m); ++order) {
                const gtm::AbelianRauzyGraph g = gtm::build_graph(m, order);
                const auto nu = static_cast<std::int64_t>(order);
                if (static_cast<std::int64_t>(g.vertices.size()) !=
                    gtm::abelian_count_formula(m, nu))
                    return false;
                if (static_cast<std::int64_t>(g.edges.size()) != gtm::rauzy_edge_formula(m, nu))
                    return false;
                if (static_cast<std::int64_t>(gtm::y_sets(m, order).total()) !=
                    gtm::extension_pair_formula(m, nu))
                    return false;
                if (order < static_cast<std::size_t>(m) && !gtm::eulerian_check(g)) return false;
                if (order >= static_cast<std::size_t>(m))
                    for (int t : {1, 2})
                        if (!gtm::shift_isomorphism_check(m, order, t)) return false;
            }
        return true;
    });

    criterion(8, "image count gap is uniform across letters", [] {
        const std::vector<std::pair<int, int>> grids = {{2, 2}, {2, 3}, {2, 4},
                                                        {3, 2}, {3, 3}, {4, 2}};
        for (const auto& [m, k] : grids)
            if (!gtm::check_image_count_gap(m, k).passed()) return false;
        return true;
    });

    criterion(9, "context difference identity on random instances", [] {
        const std::vector<std::pair<int, int>> grids = {{2, 2}, {2, 3}, {3, 2}};
        for (const auto& [m, k] : grids)
            if (!gtm::check_context_difference(m, k, 200, kSeed).passed()) return false;
        return true;
    });

    criterion(10, "factorization characterization of equivalence", [] {
        return gtm::check_factorization_characterization(2, 2, 16).passed() &&
               gtm::check_factorization_characterization(2, 3, 20).passed() &&
               gtm::check_factorization_characterization(3, 2, 20).passed();
    });

    criterion(11, "pair classes agree with equivalence classes", [] {
        for (std::size_t n = 18; n <= 27; ++n)
            if (!gtm::check_pair_class_agreement(3, 2, n).passed()) return false;
        for (std::size_t n = 8; n <= 16; ++n)
            if (!gtm::check_pair_class_agreement(2, 2, n).passed()) return false;
        return true;
    });

    criterion(12, "ultimate periodicity of computed and closed-form values", [] {
        for (std::size_t n = 9; n <= 27; ++n) {
            if (gtm::kbinomial_formula(3, 2, static_cast<std::int64_t>(n) + 9) !=
                gtm::kbinomial_formula(3, 2, static_cast<std::int64_t>(n)))
                return false;
            if (gtm::kbinomial_complexity(3, 2, n + 9) != gtm::kbinomial_complexity(3, 2, n))
                return false;
        }
        return true;
    });

    if (g_failed == 0) {
        std::printf("acceptance: all 12 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failed);
    return 1;
}
