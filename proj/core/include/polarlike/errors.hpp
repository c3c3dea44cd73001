#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarlike {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };

// Thrown when a matrix that must have full row rank does not.
struct RankDeficient : Error {
    std::size_t rank;
    RankDeficient(std::size_t rank_, const std::string& what)
        : Error(what), rank(rank_) {}
};

struct Singular : Error { using Error::Error; };
struct NotABijection : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NotEchelon : Error { using Error::Error; };
struct ShortenViolation : Error { using Error::Error; };
struct ParamOutOfRange : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };
struct SpaceTooLarge : Error { using Error::Error; };
struct ConfigMismatch : Error { using Error::Error; };
struct IntegrityError : Error { using Error::Error; };

struct ParseError : Error {
    std::size_t line;  // 1-based line in the offending file
    ParseError(std::size_t line_, const std::string& what) : Error(what), line(line_) {}
};

}  // namespace polarlike
