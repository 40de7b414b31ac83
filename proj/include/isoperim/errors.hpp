#pragma once

#include <stdexcept>
#include <string>

namespace isoperim {

/// Thrown when an argument violates a documented precondition.
/// The message names the violated condition (e.g. "l+N+alpha must be positive").
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when an iterative scheme fails to reach its target tolerance
/// within its refinement budget.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& condition)
{
    if (!ok)
        throw domain_error(condition);
}

}  // namespace detail

}  // namespace isoperim
