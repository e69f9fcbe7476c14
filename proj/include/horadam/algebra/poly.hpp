#pragma once

/**
 * @file poly.hpp
 * @brief Multivariate polynomials over the integers.
 *
 * A Poly is a list of terms sorted by descending graded-lex monomial order,
 * with no zero coefficients and unique monomials. That makes the stored form
 * canonical, so equality is plain structural comparison.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/algebra/integer.hpp"
#include "horadam/algebra/monomial.hpp"
#include "horadam/errors.hpp"

namespace horadam {

struct Term {
    Monomial monomial;
    Integer coeff;

    bool operator==(const Term& other) const {
        return monomial == other.monomial && coeff == other.coeff;
    }
};

class Poly {
public:
    Poly() = default;
    Poly(long value);  // NOLINT(google-explicit-constructor): integers embed into the ring
    Poly(const Integer& value);  // NOLINT(google-explicit-constructor)

    static Poly variable(std::string_view name, std::uint32_t power = 1);
    static Poly variable(VarId id, std::uint32_t power = 1);
    static Poly monomial(const Monomial& m, const Integer& coeff);
    /// Sorts, merges duplicate monomials and drops zeros.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;
    /// Value of a constant polynomial (0 for the zero polynomial).
    Integer constant_value() const;

    /// Precondition: !is_zero().
    const Term& leading() const { return terms_.front(); }
    const Term& trailing() const { return terms_.back(); }

    std::uint32_t total_degree() const noexcept;
    std::uint32_t degree_in(VarId id) const noexcept;
    bool contains(VarId id) const noexcept { return degree_in(id) > 0; }
    /// Ids of the indeterminates that occur, ascending.
    std::vector<VarId> variables() const;

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    Integer content() const;

    Poly operator-() const;
    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly& operator+=(const Poly& other) { return *this = *this + other; }
    Poly& operator-=(const Poly& other) { return *this = *this - other; }
    Poly& operator*=(const Poly& other) { return *this = *this * other; }

    Poly scaled(const Integer& factor) const;
    Poly times_term(const Monomial& m, const Integer& coeff) const;
    /// Divides every coefficient by `d`; each must be divisible.
    Poly divided_exact(const Integer& d) const;
    Poly pow(unsigned exponent) const;

    bool operator==(const Poly& other) const { return terms_ == other.terms_; }

    /// Canonical text, e.g. "s^3 + 2*s*t".
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Raised by exact_divide; carries the remainder of multivariate division.
class NotDivisible : public Error {
public:
    explicit NotDivisible(Poly remainder)
        : Error(ErrorCode::NotDivisible, "not divisible, remainder " + remainder.to_string()),
          remainder_(std::move(remainder)) {}
    const Poly& remainder() const noexcept { return remainder_; }

private:
    Poly remainder_;
};

struct DivisionResult {
    Poly quotient;
    Poly remainder;
};

/// Multivariate division by a single divisor in graded-lex order over Z.
/// n = quotient * d + remainder, and no remainder term is reducible by lt(d).
DivisionResult divide(const Poly& n, const Poly& d);

/// Returns q with n = q * d, or nothing when d does not divide n.
std::optional<Poly> try_exact_divide(const Poly& n, const Poly& d);

/// Throws NotDivisible (with the division remainder) or DivisionByZero.
Poly exact_divide(const Poly& n, const Poly& d);

/// Greatest common divisor in Z[vars], normalized to a positive leading coefficient.
/// gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);

}  // namespace horadam
