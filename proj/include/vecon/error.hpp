#ifndef VECON_ERROR_HPP
#define VECON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vecon {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed user-facing input (files, CLI values, bad vertex ids).
struct input_error : error {
    using error::error;
};

/// A documented precondition was violated by the caller.
struct contract_error : error {
    using error::error;
};

/// A desk-scale size cap was exceeded (exhaustive routines only).
struct capacity_error : error {
    using error::error;
};

} // namespace vecon

#endif
