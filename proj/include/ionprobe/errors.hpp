#pragma once

#include <stdexcept>
#include <string>

namespace ionprobe {

/// Invalid user-supplied configuration (bad key, out-of-range value).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical procedure failed or produced a result violating an invariant.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ionprobe
