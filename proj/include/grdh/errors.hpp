#pragma once

#include <stdexcept>

namespace grdh {

/// Thrown when an enumeration would exceed the configured cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an exactness invariant that must hold by construction fails
/// (e.g. a rational that has to reduce to an integer did not).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Default cap on brute-force enumeration sizes (candidate vectors / keys).
inline constexpr unsigned long kDefaultEnumCap = 10'000'000UL;

} // namespace grdh
