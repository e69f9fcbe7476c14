#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "horadam/sequences/sequences.hpp"

namespace horadam {

/// Calls `visit` for each chain 1 <= x_1 < ... < x_k <= n. The vector passed in
/// has x_0 = 0 at position 0 followed by the chain.
void for_each_index_chain(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit);

/// Sum over chains of prod F_(k-i)^(x_i - x_(i-1) - 1) F_(n - x_i - (k-i) + 1), with 0^0 = 1.
/// Requires F_0 = 0 (InvalidArgument otherwise).
Scalar md_fibonomial(std::size_t n, std::size_t k, const Sequence& seq);

/// The erratum variant: chains of length k-1 ending at most n-1, weighted by F_(n - x_k)
/// where x_k ranges over (x_(k-1), n]. Reproduces 11 at (5, 3) for Fibonacci.
Scalar errata_fibonomial(std::size_t n, std::size_t k, const Sequence& seq);

/// The corrected variant: chains of length k-1 ending at most n-1, with x_k = x_(k-1) + 1
/// and final factor F_(n - x_k + 1).
Scalar corrected_benjamin_plott(std::size_t n, std::size_t k, const Sequence& seq);

/// Chain formula for U-binomials over (s, t) with the weight t^(x_k - k).
Scalar md_u_binomial(std::size_t n, std::size_t k, const Scalar& s_param, const Scalar& t_param);

struct CarlitzResult {
    /// prod_{j=0..n} (x - p^j q^(n-j)) in Z[p, q, x].
    Poly lhs;
    /// sum_{r=0..n+1} (-1)^(r(r+1)/2) binom(n+1, r)_{U*} x^(n+1-r) with U*_m = p^m - q^m.
    Poly rhs;
    /// Both sides after q -> -1/p, multiplied by the same power of p to clear denominators.
    Poly lhs_reduced;
    Poly rhs_reduced;
    bool equal = false;
};

CarlitzResult carlitz_product(std::size_t n);
/// Image of a polynomial in Z[p, q, x] under q -> -1/p, as a fraction in p and x.
Scalar reduce_pq_minus_one(const Scalar& value);

struct QStarResult {
    /// binom(n, k) for U with roots p, q; a polynomial in Z[p, q].
    Scalar pq_form;
    /// q^(k(n-k)) times the Gaussian binomial evaluated at q* = p/q.
    Scalar transferred;
    bool equal = false;
};

QStarResult qstar_transfer(std::size_t n, std::size_t k);

}  // namespace horadam
