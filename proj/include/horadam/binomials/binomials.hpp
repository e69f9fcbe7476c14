#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/sequences/sequences.hpp"

namespace horadam {

/// F_n * F_(n-1) * ... * F_1. Throws ZeroTerm(i) when F_i = 0.
Scalar f_factorial(const Sequence& seq, std::size_t n);
/// Factorials 0..n in one pass.
std::vector<Scalar> f_factorials(const Sequence& seq, std::size_t n);
/// Zero for k > n.
Scalar f_binomial(const Sequence& seq, std::size_t n, std::size_t k);
/// Zero unless the parts sum to n.
Scalar f_multinomial(const Sequence& seq, std::size_t n, const std::vector<std::size_t>& parts);
/// binom(n,k) * multinom(n-k; parts) against multinom(n; k, parts), and the chained
/// product of binomials against the same multinomial.
bool multinomial_factorization_check(const Sequence& seq, std::size_t n, std::size_t k,
                                     const std::vector<std::size_t>& parts);

/// V_(r+s)! / (V_r! U_s!) for the Lucas pair with parameters (s_param, t_param).
Scalar mixed_binomial(std::size_t r, std::size_t s, const Scalar& s_param, const Scalar& t_param);

enum class SchemeName {
    SymmetricSplit,
    T2aRatio,
    T2aAlt,
    FonteneA,
    FonteneB,
    CorcinoA,
    CorcinoB,
    Husun,
    HoggattA,
    HoggattB,
    LucasDoubled,
    Mixed2b,
    MixedDoubled,
};

/// CLI spelling, e.g. "hoggatt-a".
std::string_view scheme_cli_name(SchemeName name) noexcept;
/// Upper-case identifier, e.g. "HOGGATT_A".
std::string_view scheme_id(SchemeName name) noexcept;
std::optional<SchemeName> scheme_from_string(std::string_view text);
const std::vector<SchemeName>& all_schemes();
/// Mixed schemes fill the V/U mixed table instead of an F-binomial table.
bool is_mixed_scheme(SchemeName name) noexcept;

/// One step of a two-term recurrence:
/// multiplier * T(r, s) = h1 * T(r-1, s) + h2 * T(r, s-1),
/// valid when multiplier * F_(r+s) = h1 * F_r + h2 * F_s.
struct SchemeStep {
    Scalar h1;
    Scalar h2;
    Scalar multiplier;
};

/// Coefficients at (r, s), r, s >= 1. Throws SchemeNotApplicable when the sequence lacks
/// the structure the scheme needs, EqualIndices for T2A_ALT at r = s, and
/// DenominatorVanishes for T2A_RATIO when H_r or H_s is zero.
SchemeStep scheme_coefficients(SchemeName scheme, const Sequence& seq, std::size_t r, std::size_t s);

/// Checks multiplier * F_(r+s) = h1 * F_r + h2 * F_s with the scheme's own sequence pair.
bool scheme_identity_holds(SchemeName scheme, const Sequence& seq, std::size_t r, std::size_t s);

/// Triangular table; entry(n, k) is zero for k > n. For mixed tables entry(n, k)
/// holds the mixed coefficient with r = n - k and s = k.
struct GBTable {
    std::string sequence;
    std::size_t N = 0;
    std::vector<std::vector<Scalar>> rows;

    Scalar entry(std::size_t n, std::size_t k) const;
    bool all_integer() const;
};

/// Factorial-definition table for n <= N.
GBTable factorial_table(const Sequence& seq, std::size_t N);
/// Mixed coefficients by definition, using the sequence's (s, t).
GBTable mixed_table(const Sequence& seq, std::size_t N);

/// Fills the table using only the scheme's recurrence from unit boundaries. Mixed tables
/// seed their r = 0 edge from M(0, s) = M(0, s-1) V_s / U_s. T2A_ALT uses T2A_RATIO on the
/// diagonal r = s.
GBTable recurrence_fill(SchemeName scheme, const Sequence& seq, std::size_t N);

struct CellCheck {
    std::size_t n = 0;
    std::size_t k = 0;
    Scalar filled;
    Scalar expected;
    bool pass = false;
};

struct VerificationReport {
    SchemeName scheme{};
    std::string sequence;
    std::size_t N = 0;
    std::vector<CellCheck> cells;
    /// Set when the fill or the reference raised a domain error.
    std::optional<std::string> error;

    std::size_t failures() const;
    bool all_pass() const { return !error && failures() == 0; }
};

/// Compares recurrence_fill with the factorial definition (or mixed definition) cell by cell.
VerificationReport verify_scheme(SchemeName scheme, const Sequence& seq, std::size_t N);

}  // namespace horadam
