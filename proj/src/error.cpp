#include "crystal/error.hpp"

namespace crystal {

const char* to_string(error_kind kind) noexcept {
    switch (kind) {
    case error_kind::invalid_input: return "invalid_input";
    case error_kind::not_invertible: return "not_invertible";
    case error_kind::unsupported: return "unsupported";
    case error_kind::internal_limit: return "internal_limit";
    }
    return "unknown";
}

} // namespace crystal
