#pragma once

#include <stdexcept>
#include <string>

namespace fptkit {

// Malformed textual input. `pos` is a 0-based byte offset into the input
// when known, std::string::npos otherwise.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t pos = std::string::npos)
        : std::runtime_error(pos == std::string::npos
                                 ? msg
                                 : msg + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// A configured cap (degree, pair count, term count, point count, q range)
// was exceeded. Callers may retry with larger caps; results are never
// silently truncated.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the mathematical domain of the operation (unit ideal where a
// proper one is required, non-invertible change of coordinates, wrong
// dimension, and so on).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fptkit
