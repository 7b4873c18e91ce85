#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swapsmith {

// Error taxonomy mirrors the C API status codes: domain errors are
// well-formed requests with no valid answer (non-graphical degrees, absent
// edges, unreachable states), usage errors are malformed input, limit
// errors are exceeded search caps.
class Error : public std::runtime_error {
public:
    enum class Kind { domain, usage, limit, internal };

    Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

inline Error domain_error(const std::string& msg) { return Error(Error::Kind::domain, msg); }
inline Error usage_error(const std::string& msg) { return Error(Error::Kind::usage, msg); }
inline Error limit_error(const std::string& msg) { return Error(Error::Kind::limit, msg); }
inline Error internal_error(const std::string& msg) { return Error(Error::Kind::internal, msg); }

// degree sequence admits no simple graph
class NotGraphicalError : public Error {
public:
    // violated_k == 0 means the degree sum is odd
    NotGraphicalError(const std::string& msg, std::size_t violated_k)
        : Error(Kind::domain, msg), violated_k_(violated_k) {}
    std::size_t violated_k() const { return violated_k_; }

private:
    std::size_t violated_k_;
};

// trace replay failed at a specific step
class ReplayError : public Error {
public:
    ReplayError(const std::string& msg, std::size_t step_index)
        : Error(Kind::domain, msg), step_index_(step_index) {}
    std::size_t step_index() const { return step_index_; }

private:
    std::size_t step_index_;
};

// the loopy-game fallback target could not be constructed; see game.hpp
class StrategyAssertionError : public Error {
public:
    explicit StrategyAssertionError(const std::string& msg) : Error(Kind::domain, msg) {}
};

} // namespace swapsmith
