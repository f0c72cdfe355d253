#ifndef NBRW_ERROR_HPP
#define NBRW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nbrw {

// Base of every error raised by the library. The CLI maps the derived
// classes onto exit codes (input problems 2, budget problems 3).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class DegreeError : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& label)
        : Error("unknown vertex '" + label + "'") {}
};

class BadParams : public Error {
public:
    using Error::Error;
};

class NotRegular : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

// Raised by root-test estimators when the sequence has no positive term.
class AllZero : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace nbrw

#endif // NBRW_ERROR_HPP
