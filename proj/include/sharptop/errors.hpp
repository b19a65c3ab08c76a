#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sharptop {

// Root of the toolkit's error hierarchy. `exit_code` feeds the CLI contract:
// 2 for parse/validation failures, 3 for analysis failures.
class Error : public std::runtime_error {
public:
    Error(const std::string& msg, int exit_code)
        : std::runtime_error(msg), exit_code_(exit_code) {}

    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error("parse error at position " + std::to_string(position) + ": " + msg, 2),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class InvariantError : public Error {
public:
    explicit InvariantError(const std::string& which)
        : Error("invariant violated: " + which, 2) {}
};

// invert_truncated on the zero net.
class ZeroLeadingError : public Error {
public:
    ZeroLeadingError() : Error("zero net has no leading coefficient to invert", 3) {}
};

// cauchy_patch_limit: val(seq[k+1] - seq[k]) > k fails at index k.
class GapViolationError : public Error {
public:
    explicit GapViolationError(int index)
        : Error("Cauchy gap condition fails at index " + std::to_string(index), 3),
          index_(index) {}

    int index() const noexcept { return index_; }

private:
    int index_;
};

class NonFiniteError : public Error {
public:
    explicit NonFiniteError(const std::string& where)
        : Error("evaluation produced a non-finite value in " + where, 3) {}
};

class DimMismatchError : public Error {
public:
    DimMismatchError(std::size_t lhs, std::size_t rhs)
        : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs), 3) {}
};

// quotient_seminorm needs a max-type ultranorm.
class UnsupportedQError : public Error {
public:
    UnsupportedQError() : Error("quotient seminorm requires a max-type ultranorm", 3) {}
};

// recover_representor: linearity probes failed.
class NonLinearError : public Error {
public:
    explicit NonLinearError(const std::string& detail)
        : Error("functional is not C~-linear: " + detail, 3) {}
};

} // namespace sharptop
