#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace horadam {

using VarId = std::uint16_t;

/// Process-wide table of indeterminate names. The id order is the variable
/// order used by the monomial ordering; s, t, p, q, x, a, b, A, B are
/// preregistered so their relative order never depends on input.
class Variables {
public:
    static constexpr std::size_t kCapacity = 16;

    /// Returns the id for `name`, registering it on first use.
    static VarId intern(std::string_view name);
    static std::string name(VarId id);
    static std::size_t count();
};

/// Power product over the registered indeterminates.
class Monomial {
public:
    using Exponents = std::array<std::uint16_t, Variables::kCapacity>;

    Monomial() = default;
    static Monomial variable(VarId id, std::uint32_t power = 1);

    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t exponent(VarId id) const noexcept { return exps_[id]; }
    const Exponents& exponents() const noexcept { return exps_; }
    bool is_one() const noexcept { return degree_ == 0; }

    /// Number of indeterminates with nonzero exponent.
    std::size_t support_size() const noexcept;

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const noexcept;
    /// Precondition: divides(other).
    Monomial quotient_of(const Monomial& other) const;
    Monomial with_exponent(VarId id, std::uint32_t power) const;

    /// Graded lexicographic order; a larger monomial comes first in a Poly.
    std::strong_ordering operator<=>(const Monomial& other) const noexcept {
        if (degree_ != other.degree_) return degree_ <=> other.degree_;
        return exps_ <=> other.exps_;
    }
    bool operator==(const Monomial& other) const noexcept = default;

    std::string to_string() const;

private:
    Exponents exps_{};
    std::uint32_t degree_ = 0;
};

}  // namespace horadam
