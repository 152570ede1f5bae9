#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagpush {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- construction / input validation ----

class InvalidCartanType : public Error {
public:
    using Error::Error;
};

class SizeGuardExceeded : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class RankMismatch : public Error {
public:
    using Error::Error;
};

class EmptySubset : public Error {
public:
    using Error::Error;
};

// ---- polynomial arithmetic ----

class DivisionByZeroPoly : public Error {
public:
    using Error::Error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

// ---- expression parsing ----

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

class ExponentNotNonnegativeInteger : public Error {
public:
    using Error::Error;
};

// ---- localization pipeline ----

// A fixed-point class is not the restriction of any polynomial class.
class NotInImage : public Error {
public:
    using Error::Error;
};

// A localization sum failed to simplify to a polynomial.
class NotPolynomialResult : public Error {
public:
    using Error::Error;
};

// Euler-class value depended on the choice of coset representative.
class RepresentativeMismatch : public Error {
public:
    using Error::Error;
};

class NotInvariant : public Error {
public:
    NotInvariant(const std::string& what, int reflection_index)
        : Error(what), index_(reflection_index) {}
    // 1-based simple index of a reflection witnessing the failure.
    int reflection_index() const { return index_; }

private:
    int index_;
};

} // namespace flagpush
