#pragma once

#include <stdexcept>
#include <string>

namespace extalg {

enum class errc {
    size_cap_exceeded,
    invalid_component,
    not_subring,
    mixed_owners,
    not_maximal,
    not_prime,
    not_invertible,
    not_integral,
    not_comaximal,
    not_invertible_member,
    no_regular_subideal,
    not_almost_prufer,
    not_prufer_ring,
    partial_assignment,
    empty_gamma,
    hypotheses_fail,
    bound_too_small,
    factor_bound_exceeded,
    parse_error,
    config_invalid,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace extalg
