// error.hpp -- exception types and limits shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slang {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (S-word grammar, language files, network files).
/// `position()` is a byte offset for single-line inputs and a 1-based line
/// number for line-oriented file formats.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Violated operation precondition: alphabet mismatch, unknown atom,
/// non-bijective renaming, inconsistent Parikh bound, and the like.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An explicit enumeration would exceed the configured word cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Default bound on explicitly enumerated S-language sizes.
inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

} // namespace slang
