#pragma once

#include <stdexcept>
#include <string>

namespace codelab {

enum class Errc {
    mixed_fields,
    inverse_of_zero,
    bad_set_size,
    not_information_set,
    no_solution,
    dim_mismatch,
    empty_code,
    too_large,
    decode_failure,
    duplicate_points,
    zero_multiplier,
    root_in_support,
    dependent_points,
    not_a_divisor,
    weight_too_high,
    invalid_block_size,
    systematic_form_failure,
    iteration_limit,
    no_solution_found,
    infeasible_params,
    unknown_param_set,
    aggregate_mismatch,
    verify_failed,
    retry_limit,
    not_a_valid_solution,
    field_mismatch,
    length_mismatch,
    parse_error,
    invalid_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }
private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}
