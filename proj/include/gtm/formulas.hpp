#pragma once

#include <cstdint>

namespace gtm {

// Closed-form complexity evaluators for t_m. Each function is total over
// its documented domain and throws FormulaDomainError outside it.

// Factor complexity p(n). Domain: m >= 1, n >= 0.
std::int64_t factor_count_formula(std::int64_t m, std::int64_t n);

// Abelian complexity b1(n), covering both the short range n < m and the
// eventually periodic range n >= m. Domain: m >= 2, n >= 0.
std::int64_t abelian_count_formula(std::int64_t m, std::int64_t n);

// k-binomial complexity of t_2; equals the factor complexity for n < 2^k.
// Domain: k >= 1, n >= 0.
std::int64_t binary_kbinomial_formula(std::int64_t k, std::int64_t n);

// 2-binomial complexity of t_m for m >= 3 and n >= m^2.
std::int64_t order2_kbinomial_formula(std::int64_t m, std::int64_t n);

// Edge count of the abelian Rauzy graph of order nu. Domain: 1 <= nu <= 2m.
std::int64_t rauzy_edge_formula(std::int64_t m, std::int64_t nu);

// Size of the one-sided extension set Y of order nu. Domain: 1 <= nu < 2m.
std::int64_t extension_pair_formula(std::int64_t m, std::int64_t nu);

// Class count at length j*m^{k-1} + r, expressed through the graph
// quantities above. Domain: k >= 2, j >= 2, 0 <= r < m^{k-1}.
std::int64_t block_kbinomial_formula(std::int64_t m, std::int64_t k, std::int64_t j, std::int64_t r);

// Class count of (p, s) block pairs for n >= 2m^k; the stable periodic
// regime of the k-binomial complexity. Domain: k >= 2, n >= 2m^k.
std::int64_t pair_class_formula(std::int64_t m, std::int64_t k, std::int64_t n);

// The full piecewise k-binomial complexity b^k(n), stitching the short,
// intermediate and periodic ranges together. Domain: m >= 2, k >= 2, n >= 0.
std::int64_t kbinomial_formula(std::int64_t m, std::int64_t k, std::int64_t n);

// m^e for small exponents, overflow-checked.
std::int64_t ipow_checked(std::int64_t base, std::int64_t exp);

}  // namespace gtm
