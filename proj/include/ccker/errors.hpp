#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccker {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller passed arguments outside an operation's domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured budget. Never a silent truncation.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Syntax or semantic error while reading an instance. `line` is 1-based, 0 if unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// G \ X is not a disjoint union of cliques.
class NotACliqueError : public Error {
public:
    NotACliqueError(std::size_t component_min_vertex, int u, int v)
        : Error("component containing vertex " + std::to_string(component_min_vertex) +
                " is not a clique: missing edge " + std::to_string(u) + "-" + std::to_string(v)),
          u_(u), v_(v)
    {
    }

    int u() const noexcept { return u_; }
    int v() const noexcept { return v_; }

private:
    int u_;
    int v_;
};

/// Enumeration caps. Relations and capture checks count tuples/matrices; oracle
/// searches count the size of the coloring space q^n.
struct Limits {
    std::uint64_t relation_tuples = 10'000'000;
    std::uint64_t search_space = std::uint64_t{1} << 30;
};

/// Saturating integer power, used for budget checks.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp)
{
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base)
            return UINT64_MAX;
        result *= base;
    }
    return result;
}

} // namespace ccker
