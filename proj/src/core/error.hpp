#pragma once

#include <stdexcept>
#include <string>

namespace striphardy {

enum class ErrorCode {
    ok = 0,
    invalid_parameter,
    grid_mismatch,
    out_of_range,
    pole_proximity,
    quadrature_nonconvergence,
    membership_failure,
    audit_failure,
    parse_error,
    overflow,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace striphardy
