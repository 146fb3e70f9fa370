#pragma once

#include <stdexcept>
#include <string>

namespace crystal {

// Every error raised by the library derives from crystal::error so callers
// (the CLI in particular) can map the kind onto an exit status.
enum class error_kind {
    invalid_input,     // malformed arguments, dimension mismatches
    not_invertible,    // non-unit constant term
    unsupported,       // chamber / geometry outside the supported family
    internal_limit,    // stabilization failure, oracle guard, non-termination
};

class error : public std::runtime_error {
public:
    error(error_kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    error_kind kind() const noexcept { return kind_; }

private:
    error_kind kind_;
};

struct dimension_error : error {
    explicit dimension_error(const std::string& what)
        : error(error_kind::invalid_input, what) {}
};

struct invalid_argument : error {
    explicit invalid_argument(const std::string& what)
        : error(error_kind::invalid_input, what) {}
};

struct not_invertible_error : error {
    explicit not_invertible_error(const std::string& what)
        : error(error_kind::not_invertible, what) {}
};

struct unsupported_chamber : error {
    explicit unsupported_chamber(const std::string& what)
        : error(error_kind::unsupported, what) {}
};

struct non_termination_error : error {
    explicit non_termination_error(const std::string& what)
        : error(error_kind::internal_limit, what) {}
};

struct stabilization_failure : error {
    explicit stabilization_failure(const std::string& what)
        : error(error_kind::internal_limit, what) {}
};

struct oracle_too_large : error {
    explicit oracle_too_large(const std::string& what)
        : error(error_kind::internal_limit, what) {}
};

struct invalid_graph : error {
    explicit invalid_graph(const std::string& what)
        : error(error_kind::invalid_input, what) {}
};

struct singular_parameters : error {
    explicit singular_parameters(const std::string& what)
        : error(error_kind::invalid_input, what) {}
};

struct window_overflow : error {
    explicit window_overflow(const std::string& what)
        : error(error_kind::internal_limit, what) {}
};

const char* to_string(error_kind kind) noexcept;

} // namespace crystal
