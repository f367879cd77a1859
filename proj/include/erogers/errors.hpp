#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace erogers {

// A violated precondition. The witness, when present, is a concrete
// counterexample (an edge pair, a triangle, a homomorphism, ...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string & what, nlohmann::json witness = nullptr) :
        std::invalid_argument(what), witness_(std::move(witness))
    {
    }

    const nlohmann::json & witness() const { return witness_; }

private:
    nlohmann::json witness_;
};

// An internal result failed its independent re-validation.
class ValidationFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace erogers

namespace erogers {

// Malformed instance file; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string & what) :
        std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    int line() const { return line_; }

private:
    int line_;
};

} // namespace erogers
