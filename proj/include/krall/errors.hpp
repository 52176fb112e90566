#pragma once

#include <stdexcept>
#include <string>

namespace krall {

// Base class for all mathematical errors raised by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A parameter lies outside the domain of a formula (e.g. Meixner a = 1,
// divergent moments, Stirling j > k).
class invalid_parameter : public error {
public:
    using error::error;
};

// A coefficient denominator vanished for the given parameters: the family
// exists generically but degenerates here.
class degenerate_parameters : public error {
public:
    using error::error;
};

// The exact-rational pipeline cannot represent the request (irrational
// constants such as 2^alpha for non-integer alpha, mixed finite/infinite
// delta weights).
class unsupported_parameter : public error {
public:
    using error::error;
};

// The requested measure lies outside its positivity window and the caller
// did not override the check.
class positivity_not_guaranteed : public error {
public:
    using error::error;
};

// A limit path hit a family precondition failure at a specific step.
class path_degenerate : public degenerate_parameters {
public:
    path_degenerate(int t, const std::string& msg)
        : degenerate_parameters("t=" + std::to_string(t) + ": " + msg), t_(t) {}
    int step() const { return t_; }

private:
    int t_;
};

// Richardson extrapolation was asked for before the ratios stabilized.
class cannot_extrapolate : public error {
public:
    using error::error;
};

} // namespace krall
