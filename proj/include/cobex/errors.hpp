#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cobex {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DuplicateVertexInFace : public Error {
public:
    explicit DuplicateVertexInFace(const std::string& what) : Error(what) {}
};

class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& what) : Error(what) {}
};

class InvalidDimension : public Error {
public:
    explicit InvalidDimension(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Thrown when an exhaustive enumeration would exceed the caller's budget.
/// `required()` is the enumeration size as a power of two; `required_log2()`
/// stays meaningful even when 2^k does not fit in 64 bits.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, int log2_required)
        : Error(what), log2_required_(log2_required) {}

    int required_log2() const { return log2_required_; }
    std::uint64_t required() const {
        return log2_required_ >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << log2_required_;
    }

private:
    int log2_required_;
};

class EmptyCodomain : public Error {
public:
    explicit EmptyCodomain(const std::string& what) : Error(what) {}
};

class NotCompleteComplex : public Error {
public:
    explicit NotCompleteComplex(const std::string& what) : Error(what) {}
};

class NotAGraph : public Error {
public:
    explicit NotAGraph(const std::string& what) : Error(what) {}
};

class NotComplete : public Error {
public:
    explicit NotComplete(const std::string& what) : Error(what) {}
};

class NotSymmetric : public Error {
public:
    explicit NotSymmetric(const std::string& what) : Error(what) {}
};

class BadDiagonal : public Error {
public:
    explicit BadDiagonal(const std::string& what) : Error(what) {}
};

class BadEntry : public Error {
public:
    explicit BadEntry(const std::string& what) : Error(what) {}
};

class VertexOutOfRange : public Error {
public:
    explicit VertexOutOfRange(const std::string& what) : Error(what) {}
};

class VertexSetMismatch : public Error {
public:
    explicit VertexSetMismatch(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace cobex
