#pragma once

#include <stdexcept>
#include <string>

namespace entgraph {

// Error categories used across the library. The CLI maps these onto
// process exit codes, tests match on them directly.
enum class errc {
    zero_vector,
    bad_length,
    bad_dimension,
    bad_subset,
    bad_qubit,
    not_hermitian,
    not_psd,
    not_unitary,
    out_of_range,
    bad_params,
    constraint_violation,
    never_satisfiable,
    parse_error,
};

inline const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::zero_vector: return "ZeroVector";
        case errc::bad_length: return "BadLength";
        case errc::bad_dimension: return "BadDimension";
        case errc::bad_subset: return "BadSubset";
        case errc::bad_qubit: return "BadQubit";
        case errc::not_hermitian: return "NotHermitian";
        case errc::not_psd: return "NotPSD";
        case errc::not_unitary: return "NotUnitary";
        case errc::out_of_range: return "OutOfRange";
        case errc::bad_params: return "BadParams";
        case errc::constraint_violation: return "ConstraintViolation";
        case errc::never_satisfiable: return "NeverSatisfiable";
        case errc::parse_error: return "ParseError";
    }
    return "Error";
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace entgraph
