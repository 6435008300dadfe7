#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blsmech {

/// A mathematical precondition was violated (negative length, angle out of range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Inputs are individually valid but inconsistent with each other or with a file contract.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
public:
    IoError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Positional error in a CSV source. Line numbers are 1-based and count the header.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, std::string column, const std::string& reason)
        : ValidationError(format(line, column, reason)), line_(line), column_(std::move(column)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& column() const noexcept { return column_; }

private:
    static std::string format(std::size_t line, const std::string& column, const std::string& reason) {
        std::string msg = "line " + std::to_string(line);
        if (!column.empty()) msg += ", column '" + column + "'";
        return msg + ": " + reason;
    }

    std::size_t line_;
    std::string column_;
};

namespace detail {

inline void require_domain(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

inline void require_valid(bool ok, const std::string& message) {
    if (!ok) throw ValidationError(message);
}

}  // namespace detail
}  // namespace blsmech
