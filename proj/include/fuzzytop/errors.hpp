#pragma once

#include <stdexcept>
#include <string>

namespace fuzzytop {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed (n, m, k) or other argument outside the supported domain.
class InvalidArgs : public Error {
public:
    using Error::Error;
};

/// A grade or code does not belong to the lattice it is used with.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// k outside [2, m^n] for an enumeration request.
class InvalidK : public InvalidArgs {
public:
    using InvalidArgs::InvalidArgs;
};

/// The instance is too large for brute-force enumeration under the budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// No closed form is known for the requested k.
class NotCovered : public Error {
public:
    using Error::Error;
};

/// A theorem was queried outside its stated hypotheses.
class HypothesisNotMet : public Error {
public:
    using Error::Error;
};

} // namespace fuzzytop
