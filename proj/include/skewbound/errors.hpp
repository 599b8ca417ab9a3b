#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace skew {

// Violated precondition of a library call (mismatched tables, non-homogeneous
// input where a homogeneous one is required, ...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Bad user-level input to a constructor (RP(0), G(2,2), ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested object lies outside what the library supports (k = 5 Grassmannian,
// products with an oriented factor, ...).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PresentationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Syntax error in a manifold expression or polynomial string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset, std::vector<std::string> expected)
        : std::runtime_error(message), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

} // namespace skew
