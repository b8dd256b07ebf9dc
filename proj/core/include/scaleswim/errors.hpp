#pragma once

#include <stdexcept>
#include <string>

namespace scaleswim {

/// Joint angle outside the configured shape domain |alpha| <= alpha_max.
class ShapeDomainError : public std::domain_error {
public:
    explicit ShapeDomainError(const std::string& what) : std::domain_error(what) {}
};

/// The body drag block became (near-)singular and the force balance
/// cannot be solved reliably.
class SingularConfigurationError : public std::runtime_error {
public:
    explicit SingularConfigurationError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed gait: open loop, non-monotone node times, domain violation, ...
class GaitError : public std::invalid_argument {
public:
    explicit GaitError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace scaleswim
