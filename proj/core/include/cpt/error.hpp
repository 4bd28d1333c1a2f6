#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic between dimensions the multiplication table does not combine,
/// or a unit name that is unknown / belongs to another dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A value outside its documented domain: inverted interval, negative
/// magnitude, yield outside (0,1], sweep with fewer than two steps, ...
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A processor, node or grid id that does not resolve.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Malformed input document: JSON syntax error or a field of the wrong shape.
class ParseError : public Error {
public:
    using Error::Error;
};

/// One failed catalog rule, naming the record, the field and the rule.
struct Diagnostic {
    std::string record_id;
    std::string field;
    std::string rule;
    std::string message;

    std::string str() const {
        std::string out = record_id;
        if (!field.empty()) {
            out += "/";
            out += field;
        }
        out += ": ";
        out += rule;
        if (!message.empty()) {
            out += ": ";
            out += message;
        }
        return out;
    }
};

/// Catalog content violating its invariants; carries every diagnostic found.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Diagnostic> diags)
        : Error(join(diags)), diags_(std::move(diags)) {}

    const std::vector<Diagnostic>& diagnostics() const noexcept { return diags_; }

private:
    static std::string join(const std::vector<Diagnostic>& diags) {
        std::string out = "catalog validation failed:";
        for (const auto& d : diags) {
            out += "\n  ";
            out += d.str();
        }
        return out;
    }

    std::vector<Diagnostic> diags_;
};

}  // namespace cpt
