#pragma once

#include <stdexcept>
#include <string>

namespace meshlab {

// Library-wide error conditions. The C API and CLI map these onto status
// codes / process exit codes; inside the library they travel as exceptions.
enum class Errc {
    parse_error,
    not_a_permutation,
    cap_exceeded,
    pattern_too_long,
    invalid_pattern,
    unknown_pattern,
    domain_error,
    invalid_code,
    invalid_path,
    not_132_avoiding,
    not_q1_avoiding,
    not_q2_avoiding,
    inversion_ambiguous,
    step_budget_exceeded,
    search_space_exceeded,
    unknown_check,
    cache_corrupt,
    io_error,
    usage_error,
    internal_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace meshlab
