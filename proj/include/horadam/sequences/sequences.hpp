#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/algebra/scalar.hpp"

namespace horadam {

/// Characteristic roots p, q with p + q = s and p * q = -t.
struct RootPair {
    Scalar p;
    Scalar q;
};

/// Initial values and coefficients of H(n+2) = s H(n+1) + t H(n).
struct HoradamSpec {
    Scalar a;
    Scalar b;
    Scalar s;
    Scalar t;
    std::optional<RootPair> roots;

    static HoradamSpec make(Scalar a, Scalar b, Scalar s, Scalar t);
    /// Coefficients derived from the roots: s = p + q, t = -p q.
    static HoradamSpec from_roots(Scalar a, Scalar b, Scalar p, Scalar q);
    /// Attaches roots after checking p + q = s and p q = -t.
    HoradamSpec with_roots(Scalar p, Scalar q) const;

    /// s^2 + 4t, which equals (p - q)^2.
    Scalar delta() const;
};

Scalar horadam_term(const HoradamSpec& spec, std::size_t n);
/// Terms 0..count-1 by the recurrence.
std::vector<Scalar> horadam_terms(const HoradamSpec& spec, std::size_t count);

Scalar lucas_u(std::size_t n, const Scalar& s, const Scalar& t);
Scalar lucas_v(std::size_t n, const Scalar& s, const Scalar& t);
/// Root-basis forms: sum of p^(n-1-j) q^j, and p^n + q^n.
Scalar lucas_u_roots(std::size_t n, const Scalar& p, const Scalar& q);
Scalar lucas_v_roots(std::size_t n, const Scalar& p, const Scalar& q);

struct BinetCoeffs {
    Scalar A;
    Scalar B;
};

/// Requires roots; throws InvalidArgument without them and EqualRoots when p = q.
BinetCoeffs binet_coeffs(const HoradamSpec& spec);
Scalar binet_term(const HoradamSpec& spec, const BinetCoeffs& coeffs, std::size_t n);

/// Explicit binomial-sum formula. Throws ZeroS when s is zero.
Scalar horadam_binomial_sum(const HoradamSpec& spec, std::size_t n);

/// Power series of (a + (b - a s) x) / (1 - s x - t x^2), first `count` coefficients.
std::vector<Scalar> ogf_coefficients(const HoradamSpec& spec, std::size_t count);
/// Coefficients c_n of the exponential generating function, so H_n = n! c_n.
std::vector<Scalar> egf_coefficients(const HoradamSpec& spec, std::size_t count);
/// First `count` coefficients of num/den; den[0] must be nonzero.
std::vector<Scalar> series_divide(const std::vector<Scalar>& num, const std::vector<Scalar>& den,
                                  std::size_t count);

/// n * alpha^(n-1), zero at n = 0.
Integer n_alpha_term(const Integer& alpha, std::size_t n);
/// 1 + q + ... + q^(n-1) in the named indeterminate.
Poly q_integer(std::size_t n, std::string_view indeterminate = "q");

enum class SequenceKind {
    Horadam,
    FundamentalU,
    PrimordialV,
    NAlpha,
    QInteger,
    FibonacciPolynomials,
    Custom,
};

const char* sequence_kind_name(SequenceKind kind) noexcept;

/// Shared, lazily memoized view of a sequence. Copies share the memo,
/// which is guarded by a mutex, so a handle may be used from several threads.
class Sequence {
public:
    static Sequence horadam(const HoradamSpec& spec, std::string label = {});
    static Sequence fundamental_u(const Scalar& s, const Scalar& t, std::string label = {});
    static Sequence primordial_v(const Scalar& s, const Scalar& t, std::string label = {});
    /// U with explicit roots p, q (s = p + q, t = -p q).
    static Sequence fundamental_u_roots(const Scalar& p, const Scalar& q, std::string label = {});
    static Sequence primordial_v_roots(const Scalar& p, const Scalar& q, std::string label = {});
    static Sequence n_alpha(const Integer& alpha);
    static Sequence q_integers(const Scalar& q);
    static Sequence fibonacci_polynomials(const Scalar& x);
    /// Explicit terms starting at index 0; indices past the end are an error.
    static Sequence custom(std::vector<Scalar> terms, std::string label = {});

    /// Throws InvalidArgument for an index beyond a custom list.
    Scalar term(std::size_t n) const;
    std::vector<Scalar> terms(std::size_t count) const;

    SequenceKind kind() const noexcept;
    const std::string& label() const noexcept;
    /// Recurrence data, absent only for custom sequences.
    const std::optional<HoradamSpec>& spec() const noexcept;
    /// Available length for custom sequences, unbounded otherwise.
    std::optional<std::size_t> length() const noexcept;

    struct State;

private:
    explicit Sequence(std::shared_ptr<State> state) : state_(std::move(state)) {}
    std::shared_ptr<State> state_;
};

/// Resolves a CLI preset: fibonacci, lucas, pell, naturals, gauss:<q>, nalpha:<alpha>,
/// horadam:a,b,s,t, U:s,t, V:s,t, Uroots:p,q, Vroots:p,q, fibpoly:<x>, custom:v0,v1,...
Sequence sequence_preset(std::string_view name);

}  // namespace horadam
