#pragma once

#include <stdexcept>
#include <string>

namespace posrep {

/// Category of a domain failure. CLI exit codes and machine-readable error
/// lines key off these, so the set is part of the public contract.
enum class ErrorKind {
    Syntax,           // malformed text; carries a byte offset where known
    Semantic,         // well-formed text describing an invalid object
    Length,           // numeral longer than the system's position bound
    Unrepresentable,  // value outside the system's representable set
    NotRegular,       // operation needs a regular-complete system
    UnsupportedShape, // operation needs a uniform-range system
    Scale,            // audit refused: budget exceeded
    Domain,           // other domain violation (invalid date, bad range, ...)
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    /// Syntax errors report the byte offset of the first offending character.
    Error(ErrorKind kind, std::string message, std::size_t offset)
        : std::runtime_error(std::move(message)), kind_(kind), offset_(offset), has_offset_(true) {}

    ErrorKind kind() const noexcept { return kind_; }
    bool has_offset() const noexcept { return has_offset_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    ErrorKind kind_;
    std::size_t offset_ = 0;
    bool has_offset_ = false;
};

}  // namespace posrep
