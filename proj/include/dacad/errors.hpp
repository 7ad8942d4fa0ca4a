#pragma once

#include <stdexcept>
#include <string>

namespace dacad {

// Base of every error the library raises. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on a numeric argument was violated (non-positive capacitance, etc).
class InvalidInput : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class DuplicateNameError : public Error {
public:
    using Error::Error;
};

// Requested line impedance cannot be built on the given stackup.
class UnrealizableGeometry : public Error {
public:
    using Error::Error;
};

// A series capacitor cannot raise the effective capacitance.
class InfeasibleSeriesCap : public Error {
public:
    using Error::Error;
};

class InconsistentReport : public Error {
public:
    using Error::Error;
};

class SingularSystem : public Error {
public:
    SingularSystem(const std::string& what, double frequency)
        : Error(what), frequency_(frequency) {}
    double frequency() const noexcept { return frequency_; }

private:
    double frequency_;
};

} // namespace dacad
