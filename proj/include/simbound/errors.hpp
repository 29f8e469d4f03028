#pragma once

#include <stdexcept>
#include <string>

namespace simbound {

/// Error categories raised by validation and construction routines.
/// Messages always name the offending element (simplex, group element,
/// dimension) so failures can be located without a debugger.
enum class errc {
    not_associative,
    no_identity,
    no_inverse,
    identity_violation,
    not_closed,
    not_free,
    not_free_on_vertices,
    not_a_cocycle,
    dimension_mismatch,
    degree_out_of_range,
    degree_overflow,
    degree_mismatch,
    fiber_size,
    commutation,
    deck_not_free,
    orbit_violation,
    genericity_exhausted,
    degenerate_face,
    budget_too_large,
    too_large,
    not_invariant,
    not_regular,
    contradiction,
    io,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, errc code, const std::string& message) {
    if (!condition) fail(code, message);
}

} // namespace simbound
