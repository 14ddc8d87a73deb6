#pragma once

#include <stdexcept>
#include <string>

namespace dynrank {

/// Raised when a maintained structure is observed in a state its own
/// invariants rule out (e.g. a reachability rank outside {n, n+1}).
/// Always indicates a bug, never bad input.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dynrank
