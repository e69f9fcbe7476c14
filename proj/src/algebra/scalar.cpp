#include "horadam/algebra/scalar.hpp"

#include <vector>

namespace horadam {

Scalar Scalar::fraction(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return Scalar{};
    if (den.is_constant()) {
        const Integer d = den.constant_value();
        Integer g = integer_gcd(num.content(), d);
        if (d < 0) g = -g;
        if (g != 1) {
            num = num.divided_exact(g);
            den = den.divided_exact(g);
        }
        return Scalar(std::move(num), std::move(den), true);
    }
    if (auto q = try_exact_divide(num, den)) {
        return Scalar(std::move(*q), Poly(1L), true);
    }
    Poly g = gcd(num, den);
    if (!g.is_one()) {
        num = exact_divide(num, g);
        den = exact_divide(den, g);
    }
    if (den.leading().coeff < 0) {
        num = -num;
        den = -den;
    }
    return Scalar(std::move(num), std::move(den), true);
}

Scalar Scalar::variable(std::string_view name, std::uint32_t power) {
    return Scalar(Poly::variable(name, power));
}

std::optional<Integer> Scalar::integer_value() const {
    if (!is_integer()) return std::nullopt;
    return num_.constant_value();
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

Scalar Scalar::operator+(const Scalar& other) const {
    if (other.is_zero()) return *this;
    if (is_zero()) return other;
    if (den_.is_one() && other.den_.is_one()) return Scalar(num_ + other.num_, den_, true);
    if (den_ == other.den_) return fraction(num_ + other.num_, den_);
    if (other.den_.is_one()) return Scalar(num_ + other.num_ * den_, den_, true);
    if (den_.is_one()) return Scalar(num_ * other.den_ + other.num_, other.den_, true);
    const Poly g = gcd(den_, other.den_);
    const Poly left = exact_divide(den_, g);
    const Poly right = exact_divide(other.den_, g);
    return fraction(num_ * right + other.num_ * left, left * other.den_);
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
    if (is_zero() || other.is_zero()) return Scalar{};
    if (den_.is_one() && other.den_.is_one()) return Scalar(num_ * other.num_, den_, true);
    // Cross-cancel so the product needs no further gcd.
    const Poly g1 = gcd(num_, other.den_);
    const Poly g2 = gcd(other.num_, den_);
    Poly n1 = g1.is_one() ? num_ : exact_divide(num_, g1);
    Poly d2 = g1.is_one() ? other.den_ : exact_divide(other.den_, g1);
    Poly n2 = g2.is_one() ? other.num_ : exact_divide(other.num_, g2);
    Poly d1 = g2.is_one() ? den_ : exact_divide(den_, g2);
    Poly num = n1 * n2;
    Poly den = d1 * d2;
    if (den.leading().coeff < 0) {
        num = -num;
        den = -den;
    }
    return Scalar(std::move(num), std::move(den), true);
}

Scalar Scalar::invert() const {
    if (is_zero()) throw DivisionByZero();
    if (num_.leading().coeff < 0) return Scalar(-den_, -num_, true);
    return Scalar(den_, num_, true);
}

Scalar Scalar::operator/(const Scalar& other) const { return *this * other.invert(); }

Scalar Scalar::pow(long exponent) const {
    if (exponent < 0) return invert().pow(-exponent);
    const auto e = static_cast<unsigned>(exponent);
    return Scalar(num_.pow(e), den_.pow(e), true);
}

std::string Scalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string out = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    out += '/';
    const bool bare = den_.is_constant() ||
                      (den_.size() == 1 && den_.leading().coeff == 1 && den_.leading().monomial.support_size() == 1);
    out += bare ? den_.to_string() : "(" + den_.to_string() + ")";
    return out;
}

namespace {

struct Substituter {
    std::vector<std::optional<Scalar>> images;
    bool all_polynomial = true;
    std::vector<std::vector<Scalar>> powers;

    explicit Substituter(const Assignment& assignment) {
        images.resize(Variables::kCapacity);
        powers.resize(Variables::kCapacity);
        for (const auto& [name, value] : assignment) {
            VarId id = Variables::intern(name);
            images[id] = value;
            if (!value.is_polynomial()) all_polynomial = false;
        }
    }

    const Scalar& power(VarId id, std::uint32_t e) {
        auto& cache = powers[id];
        if (cache.empty()) cache.push_back(Scalar(1L));
        while (cache.size() <= e) cache.push_back(cache.back() * *images[id]);
        return cache[e];
    }

    Scalar image_of_term(const Term& term) {
        Monomial rest;
        Scalar factor(1L);
        for (std::size_t i = 0; i < Variables::kCapacity; ++i) {
            const auto id = static_cast<VarId>(i);
            const std::uint32_t e = term.monomial.exponent(id);
            if (e == 0) continue;
            if (images[id]) {
                factor *= power(id, e);
            } else {
                rest = rest * Monomial::variable(id, e);
            }
        }
        return factor * Scalar(Poly::monomial(rest, term.coeff));
    }

    Scalar apply(const Poly& p) {
        if (all_polynomial) {
            Poly sum;
            for (const auto& t : p.terms()) sum += image_of_term(t).num();
            return Scalar(std::move(sum));
        }
        // Accumulate over a common denominator and normalize once.
        Poly num;
        Poly den(1L);
        for (const auto& t : p.terms()) {
            Scalar v = image_of_term(t);
            if (v.den() == den) {
                num += v.num();
            } else {
                num = num * v.den() + v.num() * den;
                den = den * v.den();
            }
        }
        return Scalar::fraction(std::move(num), std::move(den));
    }
};

}  // namespace

Scalar substitute(const Poly& x, const Assignment& assignment) {
    Substituter sub(assignment);
    return sub.apply(x);
}

Scalar substitute(const Scalar& x, const Assignment& assignment) {
    Substituter sub(assignment);
    Scalar den = sub.apply(x.den());
    if (den.is_zero()) throw DenominatorVanishes();
    return sub.apply(x.num()) / den;
}

bool is_equal(const Scalar& x, const Scalar& y) { return (x - y).is_zero(); }

}  // namespace horadam
