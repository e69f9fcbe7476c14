#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "horadam/algebra/scalar.hpp"

namespace horadam {

// Linear tilings -----------------------------------------------------------

struct Tile {
    bool domino = false;
    std::uint32_t color = 1;
};

using TilingWord = std::vector<Tile>;

/// Every colored tiling of a strip of length n with `square_colors` kinds of square
/// and `domino_colors` kinds of domino.
std::vector<TilingWord> enumerate_linear_tilings(std::size_t n, std::uint32_t square_colors, std::uint32_t domino_colors);

/// Sum of s^(#squares) t^(#dominoes) over all uncolored tilings, then s and t substituted.
Scalar count_linear_tilings(std::size_t n, const Scalar& s, const Scalar& t);

// Bracelets ----------------------------------------------------------------

/// Domino start positions on a circle of n cells; a domino at i covers i and (i+1) mod n.
struct Bracelet {
    std::size_t n = 0;
    std::vector<std::size_t> domino_starts;
};

/// All coverings of the circle by squares and dominoes. For n = 2 the flat domino {0,1}
/// and the wrapped domino {1,0} are different; for n = 1 only the single square exists.
std::vector<Bracelet> enumerate_bracelets(std::size_t n);
Scalar count_bracelets(std::size_t n, const Scalar& s, const Scalar& t);

// Zigzag paths -------------------------------------------------------------

/// A monotone lattice path from (0,0) to (k, n-k) as a step word: true for a north step.
struct ZigzagPath {
    std::vector<bool> north;

    /// Cells between the path and the x-axis.
    std::size_t area() const;
    /// Pairs i < j with a north step at i and an east step at j.
    std::size_t inversions() const;
};

std::vector<ZigzagPath> enumerate_paths(std::size_t n, std::size_t k);

struct AreaDistribution {
    std::size_t n = 0;
    std::size_t k = 0;
    std::map<std::size_t, Integer> counts;

    /// sum counts[a] * q^a
    Poly polynomial(std::string_view indeterminate = "q") const;
    Integer total() const;
    bool symmetric() const;
};

AreaDistribution gaussian_by_paths(std::size_t n, std::size_t k);
bool inversions_equal_area(std::size_t n, std::size_t k);

// Finite-field subspaces ---------------------------------------------------

/// Number of k-dimensional subspaces of GF(qf)^n, counted by listing reduced row-echelon
/// matrices. qf must be 2, 3 or 4 (UnsupportedField otherwise) and n <= 5.
Integer count_subspaces(std::size_t n, std::size_t k, long qf);

// Colored graphs -----------------------------------------------------------

struct TwoColoredGraphCount {
    /// Enumerated (coloring, edge subset between the color classes) pairs.
    Integer direct;
    /// sum_k C(n,k) 2^(k(n-k))
    Integer formula;
    /// sum_k of N(2)-binomials (n, k)
    Integer row_sum;
};

/// Direct enumeration requires n <= 5.
TwoColoredGraphCount count_two_colored_graphs(std::size_t n);

/// Sum of N(alpha)-multinomials over weak compositions of n into k parts.
Integer gamma_alpha(std::size_t n, std::size_t k, const Integer& alpha);

// Abstract Fibonacci polynomials -------------------------------------------

/// F_1 = 1, F_2 = a, F_(r+2) = a F_(r+1) + b F_r (so F_0 = 0).
Scalar abstract_fibonacci(std::size_t r);

struct AdditionReport {
    std::size_t m = 0;
    std::size_t n = 0;
    Scalar lhs;               ///< F_(m+n)
    Scalar printed_rhs;       ///< F_(m+1) F_m + b F_(n-1) F_n
    Scalar standard_rhs;      ///< F_(m+1) F_n + b F_m F_(n-1)
    bool printed_holds = false;
    bool standard_holds = false;
};

/// Requires n >= 1.
AdditionReport cigler_addition_report(std::size_t m, std::size_t n);

}  // namespace horadam
