#pragma once

#include <cstddef>

namespace gtm {

// Process-wide resource caps. Library code consults these before
// materializing large objects and throws ResourceCapError when a request
// would exceed them. Defaults are sized generously for desk-scale work.
struct Limits {
    // Longest explicit prefix of t_m that may be materialized, in letters.
    std::size_t max_prefix = 50'000'000;
    // Largest number of subwords tracked by one signature, i.e. the size
    // of the length <= k domain (m^{k+1} - m)/(m - 1).
    std::size_t max_signature_domain = 500'000;
    // Longest factor length accepted by enumeration-based operations.
    std::size_t max_factor_length = 100'000;
};

// Mutable global limits. Not synchronized: configure once at startup,
// before concurrent work begins.
Limits& limits();

// Apply GTM_MAX_PREFIX, GTM_MAX_SIGNATURE_DOMAIN and GTM_MAX_FACTOR_LENGTH
// from the environment, if set. Invalid values are ignored.
void apply_env_limits(Limits& l);

}  // namespace gtm
