#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace horadam {

/// Stable error categories. The CLI maps each one to its own exit status.
enum class ErrorCode : int {
    DivisionByZero = 1,
    DenominatorVanishes,
    NotDivisible,
    ZeroTerm,
    EqualRoots,
    ZeroS,
    EqualIndices,
    UnsupportedField,
    NotAdmissible,
    SchemeNotApplicable,
    InvalidArgument,
    Parse,
    IO,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by the zero scalar")
        : Error(ErrorCode::DivisionByZero, what) {}
};

class DenominatorVanishes : public Error {
public:
    explicit DenominatorVanishes(const std::string& what = "denominator vanishes under substitution")
        : Error(ErrorCode::DenominatorVanishes, what) {}
};

/// A sequence term required to be nonzero (a factorial factor) is zero.
class ZeroTerm : public Error {
public:
    explicit ZeroTerm(std::size_t index)
        : Error(ErrorCode::ZeroTerm, "sequence term " + std::to_string(index) + " is zero"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class EqualRoots : public Error {
public:
    EqualRoots() : Error(ErrorCode::EqualRoots, "characteristic roots coincide (p = q)") {}
};

class ZeroS : public Error {
public:
    ZeroS() : Error(ErrorCode::ZeroS, "explicit formula requires s != 0") {}
};

class EqualIndices : public Error {
public:
    EqualIndices() : Error(ErrorCode::EqualIndices, "scheme undefined for r = s") {}
};

class UnsupportedField : public Error {
public:
    explicit UnsupportedField(long order)
        : Error(ErrorCode::UnsupportedField,
                "unsupported field order " + std::to_string(order) + " (supported: 2, 3, 4)") {}
};

class NotAdmissible : public Error {
public:
    explicit NotAdmissible(const std::string& what) : Error(ErrorCode::NotAdmissible, what) {}
};

class SchemeNotApplicable : public Error {
public:
    explicit SchemeNotApplicable(const std::string& what)
        : Error(ErrorCode::SchemeNotApplicable, what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorCode::Parse, what + " at offset " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class IOError : public Error {
public:
    explicit IOError(const std::string& what) : Error(ErrorCode::IO, what) {}
};

}  // namespace horadam
