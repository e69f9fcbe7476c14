#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "horadam/algebra/poly.hpp"

namespace horadam {

/// Element of the fraction field of Z[registered indeterminates].
///
/// Always stored in canonical form: gcd(num, den) = 1 and the leading
/// coefficient of den is positive. Two scalars are equal exactly when
/// their stored pairs are equal.
class Scalar {
public:
    Scalar() : den_(1L) {}
    Scalar(long value) : num_(value), den_(1L) {}  // NOLINT(google-explicit-constructor)
    Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Integer& value) : num_(value), den_(1L) {}  // NOLINT(google-explicit-constructor)
    Scalar(Poly value) : num_(std::move(value)), den_(1L) {}  // NOLINT(google-explicit-constructor)

    /// Builds num/den and brings it to canonical form.
    static Scalar fraction(Poly num, Poly den);
    static Scalar variable(std::string_view name, std::uint32_t power = 1);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    bool is_integer() const noexcept { return den_.is_one() && num_.is_constant(); }
    /// Integer value when is_integer(), otherwise nothing.
    std::optional<Integer> integer_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    /// Throws DivisionByZero when `other` is zero.
    Scalar operator/(const Scalar& other) const;
    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }
    Scalar& operator/=(const Scalar& other) { return *this = *this / other; }

    Scalar invert() const;
    /// Negative exponents invert first. Uses 0^0 = 1.
    Scalar pow(long exponent) const;

    bool operator==(const Scalar& other) const { return num_ == other.num_ && den_ == other.den_; }

    /// Text in the same grammar accepted by parse_scalar.
    std::string to_string() const;

private:
    Scalar(Poly num, Poly den, bool /*canonical*/) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

using Assignment = std::map<std::string, Scalar, std::less<>>;

/// Replaces indeterminates simultaneously. Unassigned names stay symbolic.
/// Throws DenominatorVanishes when the image of the denominator is zero.
Scalar substitute(const Scalar& x, const Assignment& assignment);
Scalar substitute(const Poly& x, const Assignment& assignment);

/// Exact equality in the fraction field.
bool is_equal(const Scalar& x, const Scalar& y);

/// Parses +, -, *, /, ^ (integer exponent), parentheses, integers and identifiers.
/// Throws ParseError with the offending offset.
Scalar parse_scalar(std::string_view text);

}  // namespace horadam
