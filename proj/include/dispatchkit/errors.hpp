#pragma once

#include <stdexcept>
#include <string>

namespace dispatchkit {

/// Base class for everything this library throws on purpose.
class DispatchError : public std::runtime_error {
public:
    explicit DispatchError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad caller input: out-of-range parameters, malformed files, violated
/// type invariants.
class InputError : public DispatchError {
public:
    explicit InputError(const std::string& what) : DispatchError(what) {}
};

/// The requested problem has an empty feasible set.
class InfeasibleError : public DispatchError {
public:
    explicit InfeasibleError(const std::string& what) : DispatchError(what) {}
};

/// A solver failed to converge within its iteration budget.
class NumericalError : public DispatchError {
public:
    explicit NumericalError(const std::string& what) : DispatchError(what) {}
};

}  // namespace dispatchkit
