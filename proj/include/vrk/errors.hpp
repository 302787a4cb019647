#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vrk {

// Thrown when a construction would exceed a configured resource cap
// (simplex count, matrix entry count, product size). The CLI maps this
// to exit code 3.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// File-format violation; carries the 1-based line where parsing failed.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::int64_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::int64_t line() const { return line_; }

private:
    std::int64_t line_;
};

// Requesting homology at a degree a truncated complex cannot answer.
// Distinct from the zero group: a capped complex knows nothing above its
// cap, while a fully enumerated one is genuinely zero there.
class degree_not_computed : public std::domain_error {
public:
    explicit degree_not_computed(int degree)
        : std::domain_error("degree " + std::to_string(degree) +
                            " is beyond the dimension cap of this complex"),
          degree_(degree) {}

    int degree() const { return degree_; }

private:
    int degree_;
};

} // namespace vrk
