#include "gtm/limits.hpp"

#include <cstdlib>
#include <string>

namespace gtm {

Limits& limits() {
    static Limits global;
    return global;
}

namespace {

void read_env(const char* name, std::size_t& target) {
    const char* raw = std::getenv(name);
    if (raw == nullptr) return;
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(raw, &pos);
        if (pos == std::string(raw).size() && v > 0) target = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        // ignore unparsable values
    }
}

}  // namespace

void apply_env_limits(Limits& l) {
    read_env("GTM_MAX_PREFIX", l.max_prefix);
    read_env("GTM_MAX_SIGNATURE_DOMAIN", l.max_signature_domain);
    read_env("GTM_MAX_FACTOR_LENGTH", l.max_factor_length);
}

}  // namespace gtm
