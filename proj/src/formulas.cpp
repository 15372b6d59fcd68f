#include "gtm/formulas.hpp"

#include <limits>
#include <string>

#include "gtm/errors.hpp"

namespace gtm {

std::int64_t ipow_checked(std::int64_t base, std::int64_t exp) {
    if (base < 0 || exp < 0) throw FormulaDomainError("ipow_checked needs non-negative arguments");
    std::int64_t result = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::int64_t>::max() / base)
            throw ResourceCapError("integer power overflows 64 bits");
        result *= base;
    }
    return result;
}

std::int64_t factor_count_formula(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 0) throw FormulaDomainError("factor_count_formula needs m >= 1, n >= 0");
    if (n == 0) return 1;
    if (m == 1) return 1;
    if (n == 1) return m;
    if (n <= m) return m * m * (n - 1) - m * (n - 2);
    // Locate the unique exponent with m^e < n <= m^{e+1}.
    std::int64_t e = 1;
    while (ipow_checked(m, e + 1) < n) ++e;
    const std::int64_t pe = ipow_checked(m, e);
    const std::int64_t pe1 = pe * m;
    // Growth alternates between steps of m^2 (up to 2m^e - m^{e-1}) and
    // steps of m(m-1) (up to the next power of m).
    if (n <= 2 * pe - pe / m) return m * m * (n - 1) - pe1 + pe;
    return m * (m - 1) * (n - 1) + pe1;
}

std::int64_t abelian_count_formula(std::int64_t m, std::int64_t n) {
    if (m < 2 || n < 0) throw FormulaDomainError("abelian_count_formula needs m >= 2, n >= 0");
    if (n == 0) return 1;
    if (n < m) {
        const std::int64_t ell = n;
        if (ell % 2 == 1) {
            const std::int64_t h = (ell - 1) / 2;
            return m * (1 - h - h * h + h * m);
        }
        const std::int64_t numerator = m * (6 - ell * ell - 2 * m + 2 * ell * m);
        if (numerator % 4 != 0) throw InvariantError("abelian short-range value is not integral");
        return numerator / 4;
    }
    const std::int64_t nu = n % m;
    if (m % 2 == 1) {
        if (nu == 0) return m * (m * m - 1) / 4 + 1;
        return m * (m - 1) * (m - 1) / 4 + m;
    }
    if (nu == 0) return m * m * m / 4 + 1;
    if (nu % 2 == 0) return (m * (m - 1) * (m - 1) + 5 * m) / 4;
    return m * m * (m - 2) / 4 + m;
}

std::int64_t binary_kbinomial_formula(std::int64_t k, std::int64_t n) {
    if (k < 1 || n < 0) throw FormulaDomainError("binary_kbinomial_formula needs k >= 1, n >= 0");
    const std::int64_t period = ipow_checked(2, k);
    if (n < period) return factor_count_formula(2, n);
    return n % period == 0 ? 3 * period - 3 : 3 * period - 4;
}

std::int64_t order2_kbinomial_formula(std::int64_t m, std::int64_t n) {
    if (m < 3) throw FormulaDomainError("order2_kbinomial_formula needs m >= 3");
    if (n < m * m) throw FormulaDomainError("order2_kbinomial_formula needs n >= m^2");
    if (n % m == 0) return abelian_count_formula(m, n / m) + m * (m - 1) * (m * (m - 1) + 1);
    return m * m * m * m - 2 * m * m * m + 2 * m * m;
}

namespace {

// Total edge-count helper: the closed form below m, the constant plateau
// at and above m. Used internally where nu may exceed 2m.
std::int64_t edge_total(std::int64_t m, std::int64_t nu) {
    if (nu < m) return m * (1 + nu * m - nu);
    return m * m * m - m * m + m;
}

std::int64_t extension_total(std::int64_t m, std::int64_t nu) {
    if (nu < m) return 2 * m * (1 + nu * m - nu) - m * nu * (nu - 1);
    return m * m * m - m * m + 2 * m;
}

}  // namespace

std::int64_t rauzy_edge_formula(std::int64_t m, std::int64_t nu) {
    if (m < 2) throw FormulaDomainError("rauzy_edge_formula needs m >= 2");
    if (nu < 1 || nu > 2 * m) throw FormulaDomainError("rauzy_edge_formula needs 1 <= nu <= 2m");
    return edge_total(m, nu);
}

std::int64_t extension_pair_formula(std::int64_t m, std::int64_t nu) {
    if (m < 2) throw FormulaDomainError("extension_pair_formula needs m >= 2");
    if (nu < 1 || nu >= 2 * m) throw FormulaDomainError("extension_pair_formula needs 1 <= nu < 2m");
    return extension_total(m, nu);
}

std::int64_t block_kbinomial_formula(std::int64_t m, std::int64_t k, std::int64_t j, std::int64_t r) {
    if (m < 2 || k < 2) throw FormulaDomainError("block_kbinomial_formula needs m >= 2, k >= 2");
    const std::int64_t block = ipow_checked(m, k - 1);
    if (j < 2) throw FormulaDomainError("block_kbinomial_formula needs j >= 2");
    if (r < 0 || r >= block) throw FormulaDomainError("block_kbinomial_formula needs 0 <= r < m^{k-1}");
    if (r == 0) return (block - 1) * edge_total(m, j) + abelian_count_formula(m, j);
    return (r - 1) * edge_total(m, j + 1) + (block - r - 1) * edge_total(m, j) + extension_total(m, j);
}

std::int64_t pair_class_formula(std::int64_t m, std::int64_t k, std::int64_t n) {
    if (m < 2 || k < 2) throw FormulaDomainError("pair_class_formula needs m >= 2, k >= 2");
    const std::int64_t period = ipow_checked(m, k);
    if (n < 2 * period) throw FormulaDomainError("pair_class_formula needs n >= 2m^k");
    const std::int64_t block = period / m;
    const std::int64_t lambda = n % period;
    const std::int64_t nu = lambda / block;
    const std::int64_t mu = lambda % block;
    const std::int64_t stem = (block - 1) * (m * m * m - m * m + m);
    return stem + (mu == 0 ? abelian_count_formula(m, m + nu) : m);
}

std::int64_t kbinomial_formula(std::int64_t m, std::int64_t k, std::int64_t n) {
    if (m < 2 || k < 2 || n < 0) throw FormulaDomainError("kbinomial_formula needs m >= 2, k >= 2, n >= 0");
    const std::int64_t block = ipow_checked(m, k - 1);
    if (n < 2 * block) return factor_count_formula(m, n);
    if (n < 2 * block * m) {
        const std::int64_t nu = n / block;
        const std::int64_t mu = n % block;
        return block_kbinomial_formula(m, k, nu, mu);
    }
    return pair_class_formula(m, k, n);
}

}  // namespace gtm
