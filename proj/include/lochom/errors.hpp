#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lochom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed ideal text, degree vector or other textual input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A precondition on the arguments was violated (dimension mismatch, unit
/// ideal where a quotient ring is needed, composite characteristic, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The pattern enumeration for a cohomology table would exceed the cap.
class ResourceCapError : public Error {
public:
    ResourceCapError(const std::string& what, std::uint64_t patterns, std::uint64_t cap)
        : Error(what), patterns_(patterns), cap_(cap) {}

    std::uint64_t patterns() const noexcept { return patterns_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t patterns_;
    std::uint64_t cap_;
};

/// A computed object violated an invariant that holds for all valid data.
/// Seeing one of these means a bug, never bad input.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace lochom
