#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "horadam/sequences/sequences.hpp"

namespace horadam {

/// True iff F_1..F_N are positive integers and every F-binomial with n <= N is a
/// nonnegative integer. Throws ZeroTerm when some F_s = 0 with 1 <= s <= N.
bool is_admissible(const Sequence& F, std::size_t N);

/// Levels k..n of the cobweb poset; level s is an antichain of F_s elements.
struct CobwebLayer {
    Sequence F;
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<Integer> sizes;  ///< F_k, ..., F_n
};

/// Throws InvalidArgument unless k <= n and each F_s in range is a positive integer.
CobwebLayer make_layer(const Sequence& F, std::size_t k, std::size_t n);

/// Number of maximal chains: the product of the level sizes.
Integer layer_chain_count(const CobwebLayer& layer);

/// Every maximal chain as one element index per level, when there are at most `limit`.
std::optional<std::vector<std::vector<std::size_t>>> enumerate_layer_chains(const CobwebLayer& layer,
                                                                             std::size_t limit = 10000);

struct CountingReport {
    std::size_t k = 0;
    std::size_t n = 0;
    Integer chains;     ///< chains of levels k+1..n
    Integer binomial;   ///< F-binomial (n, k)
    Integer kappa;      ///< F_1 * ... * F_(n-k)
    bool holds = false;
};

/// chains(levels k+1..n) = binom(n,k)_F * F_1 ... F_(n-k). Throws NotAdmissible.
CountingReport verify_counting_identity(const Sequence& F, std::size_t k, std::size_t n);

/// A block is a Cartesian product of one subset per axis.
struct BoxBlock {
    std::vector<std::vector<std::size_t>> axes;
};

struct BoxPartition {
    std::vector<std::size_t> edges;  ///< F_(k+1), ..., F_n
    Integer kappa;
    std::vector<BoxBlock> blocks;
};

enum class TilingStatus { Found, NotFound, Exhausted };

struct TilingResult {
    TilingStatus status = TilingStatus::NotFound;
    std::optional<BoxPartition> partition;
    std::size_t nodes = 0;
};

const char* tiling_status_name(TilingStatus status) noexcept;

/// Backtracking search for a partition of [F_(k+1)] x ... x [F_n] (k = n - m) into blocks
/// whose axis sizes are a permutation of (F_1, ..., F_m). Always extends from the
/// lexicographically first uncovered point. With `intervals_only`, every axis subset must
/// be a run of consecutive values. Throws NotAdmissible.
TilingResult box_tiling_search(const Sequence& F, std::size_t m, std::size_t n, std::size_t budget = 1000000,
                               bool intervals_only = false);

/// Disjointness, coverage, block shape and block count = binom(n, n-m)_F.
bool validate_partition(const Sequence& F, std::size_t m, std::size_t n, const BoxPartition& partition);

}  // namespace horadam
