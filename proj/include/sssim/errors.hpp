#ifndef SSSIM_ERRORS_HPP
#define SSSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sssim {

// Error classes map one-to-one onto CLI exit codes (see README).
enum class ErrorClass : int {
    config = 2,   // bad config file, unknown key/unit/material
    physics = 3,  // model precondition violated (barrier collapse, branch violation, ...)
    numerics = 4, // quadrature/root-finder non-convergence, domain errors
    io = 5,       // filesystem failures
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& msg) : std::runtime_error(msg), cls_(cls) {}
    ErrorClass error_class() const noexcept { return cls_; }

private:
    ErrorClass cls_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(ErrorClass::config, msg) {}
};

class PhysicsError : public Error {
public:
    explicit PhysicsError(const std::string& msg) : Error(ErrorClass::physics, msg) {}
};

class NumericsError : public Error {
public:
    explicit NumericsError(const std::string& msg) : Error(ErrorClass::numerics, msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(ErrorClass::io, msg) {}
};

} // namespace sssim

#endif
