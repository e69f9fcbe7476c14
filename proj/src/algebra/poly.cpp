#include "horadam/algebra/poly.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <functional>
#include <map>

namespace horadam {

namespace {

bool term_before(const Term& a, const Term& b) { return a.monomial > b.monomial; }

}  // namespace

Poly::Poly(long value) {
    if (value != 0) terms_.push_back({Monomial{}, Integer(value)});
}

Poly::Poly(const Integer& value) {
    if (value != 0) terms_.push_back({Monomial{}, value});
}

Poly Poly::variable(std::string_view name, std::uint32_t power) {
    return variable(Variables::intern(name), power);
}

Poly Poly::variable(VarId id, std::uint32_t power) {
    return monomial(Monomial::variable(id, power), Integer(1));
}

Poly Poly::monomial(const Monomial& m, const Integer& coeff) {
    Poly p;
    if (coeff != 0) p.terms_.push_back({m, coeff});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_before);
    Poly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

bool Poly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

bool Poly::is_one() const noexcept {
    return terms_.size() == 1 && terms_.front().monomial.is_one() && terms_.front().coeff == 1;
}

Integer Poly::constant_value() const {
    if (terms_.empty()) return Integer(0);
    const Term& last = terms_.back();
    return last.monomial.is_one() ? last.coeff : Integer(0);
}

std::uint32_t Poly::total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::uint32_t Poly::degree_in(VarId id) const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(id));
    return d;
}

std::vector<VarId> Poly::variables() const {
    Monomial::Exponents seen{};
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < seen.size(); ++i) seen[i] |= t.monomial.exponents()[i];
    std::vector<VarId> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != 0) out.push_back(static_cast<VarId>(i));
    return out;
}

Integer Poly::content() const {
    Integer g(0);
    for (const auto& t : terms_) {
        g = integer_gcd(g, t.coeff);
        if (g == 1) break;
    }
    return g;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly Poly::operator+(const Poly& other) const {
    if (other.is_zero()) return *this;
    if (is_zero()) return other;
    Poly out;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        if (a->monomial == b->monomial) {
            Integer c = a->coeff + b->coeff;
            if (c != 0) out.terms_.push_back({a->monomial, std::move(c)});
            ++a;
            ++b;
        } else if (a->monomial > b->monomial) {
            out.terms_.push_back(*a++);
        } else {
            out.terms_.push_back(*b++);
        }
    }
    out.terms_.insert(out.terms_.end(), a, terms_.end());
    out.terms_.insert(out.terms_.end(), b, other.terms_.end());
    return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
    if (is_zero() || other.is_zero()) return Poly{};
    if (is_constant()) return other.scaled(terms_.front().coeff);
    if (other.is_constant()) return scaled(other.terms_.front().coeff);
    if (other.terms_.size() == 1) return times_term(other.leading().monomial, other.leading().coeff);
    if (terms_.size() == 1) return other.times_term(leading().monomial, leading().coeff);
    std::vector<Term> products;
    products.reserve(terms_.size() * other.terms_.size());
    for (const auto& x : terms_)
        for (const auto& y : other.terms_) products.push_back({x.monomial * y.monomial, x.coeff * y.coeff});
    return from_terms(std::move(products));
}

Poly Poly::scaled(const Integer& factor) const {
    if (factor == 0) return Poly{};
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff *= factor;
    return p;
}

Poly Poly::times_term(const Monomial& m, const Integer& coeff) const {
    if (coeff == 0) return Poly{};
    Poly p;
    p.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the order.
    for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * coeff});
    return p;
}

Poly Poly::divided_exact(const Integer& d) const {
    if (d == 0) throw DivisionByZero();
    Poly p = *this;
    for (auto& t : p.terms_) {
        if (!horadam::divides(d, t.coeff)) throw NotDivisible(*this);
        t.coeff = exact_quotient(t.coeff, d);
    }
    return p;
}

Poly Poly::pow(unsigned exponent) const {
    Poly result(1L);
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff < 0;
        Integer magnitude = abs(t.coeff);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t.monomial.is_one()) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) out += magnitude.get_str() + '*';
            out += t.monomial.to_string();
        }
    }
    return out;
}

namespace {

using TermMap = std::map<Monomial, Integer, std::greater<>>;

void subtract_scaled(TermMap& work, const Poly& d, const Monomial& m, const Integer& c) {
    for (const auto& t : d.terms()) {
        auto [it, inserted] = work.try_emplace(t.monomial * m, 0);
        it->second -= t.coeff * c;
        if (it->second == 0) work.erase(it);
    }
}

// Cheap necessary conditions for d | n.
bool may_divide(const Poly& n, const Poly& d) {
    if (!d.leading().monomial.divides(n.leading().monomial)) return false;
    if (!d.trailing().monomial.divides(n.trailing().monomial)) return false;
    if (!horadam::divides(d.leading().coeff, n.leading().coeff)) return false;
    if (!horadam::divides(d.trailing().coeff, n.trailing().coeff)) return false;
    for (VarId v : d.variables())
        if (n.degree_in(v) < d.degree_in(v)) return false;
    return true;
}

}  // namespace

DivisionResult divide(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw DivisionByZero();
    TermMap work;
    for (const auto& t : n.terms()) work.emplace(t.monomial, t.coeff);
    std::vector<Term> quotient;
    std::vector<Term> remainder;
    const Term& lead = d.leading();
    while (!work.empty()) {
        auto top = work.begin();
        if (lead.monomial.divides(top->first) && horadam::divides(lead.coeff, top->second)) {
            Monomial m = lead.monomial.quotient_of(top->first);
            Integer c = exact_quotient(top->second, lead.coeff);
            quotient.push_back({m, c});
            subtract_scaled(work, d, m, c);
        } else {
            remainder.push_back({top->first, top->second});
            work.erase(top);
        }
    }
    return {Poly::from_terms(std::move(quotient)), Poly::from_terms(std::move(remainder))};
}

std::optional<Poly> try_exact_divide(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw DivisionByZero();
    if (n.is_zero()) return Poly{};
    if (d.is_constant()) {
        const Integer c = d.constant_value();
        for (const auto& t : n.terms())
            if (!horadam::divides(c, t.coeff)) return std::nullopt;
        return n.divided_exact(c);
    }
    if (!may_divide(n, d)) return std::nullopt;
    if (d.size() == 1) {
        const Term& lead = d.leading();
        std::vector<Term> q;
        q.reserve(n.size());
        for (const auto& t : n.terms()) {
            if (!lead.monomial.divides(t.monomial) || !horadam::divides(lead.coeff, t.coeff))
                return std::nullopt;
            q.push_back({lead.monomial.quotient_of(t.monomial), exact_quotient(t.coeff, lead.coeff)});
        }
        return Poly::from_terms(std::move(q));
    }
    TermMap work;
    for (const auto& t : n.terms()) work.emplace(t.monomial, t.coeff);
    std::vector<Term> quotient;
    const Term& lead = d.leading();
    while (!work.empty()) {
        auto top = work.begin();
        if (!lead.monomial.divides(top->first) || !horadam::divides(lead.coeff, top->second))
            return std::nullopt;
        Monomial m = lead.monomial.quotient_of(top->first);
        Integer c = exact_quotient(top->second, lead.coeff);
        quotient.push_back({m, c});
        subtract_scaled(work, d, m, c);
    }
    return Poly::from_terms(std::move(quotient));
}

Poly exact_divide(const Poly& n, const Poly& d) {
    if (auto q = try_exact_divide(n, d)) return std::move(*q);
    throw NotDivisible(divide(n, d).remainder);
}

// ---------------------------------------------------------------------------
// gcd: recursive primitive pseudo-remainder sequences.

namespace {

// Coefficients of f viewed as a polynomial in `v`, indexed by degree.
using Univariate = std::vector<Poly>;

Univariate to_univariate(const Poly& f, VarId v) {
    std::vector<std::vector<Term>> buckets(f.degree_in(v) + 1);
    for (const auto& t : f.terms())
        buckets[t.monomial.exponent(v)].push_back({t.monomial.with_exponent(v, 0), t.coeff});
    Univariate out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
    return out;
}

Poly from_univariate(const Univariate& u, VarId v) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < u.size(); ++e)
        for (const auto& t : u[e].terms())
            terms.push_back({t.monomial * Monomial::variable(v, static_cast<std::uint32_t>(e)), t.coeff});
    return Poly::from_terms(std::move(terms));
}

void trim(Univariate& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Poly positive_leading(Poly p) {
    if (!p.is_zero() && p.leading().coeff < 0) return -p;
    return p;
}

Poly content_of(const Univariate& u) {
    Poly g;
    for (const auto& c : u) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Univariate divide_coefficients(const Univariate& u, const Poly& d) {
    Univariate out;
    out.reserve(u.size());
    for (const auto& c : u) out.push_back(exact_divide(c, d));
    return out;
}

// lc(b)^k * a mod b for the appropriate k; b nonzero.
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
    const std::size_t db = b.size() - 1;
    const Poly& lb = b.back();
    trim(a);
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const Poly lr = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= lr * b[i];
        trim(a);
    }
    return a;
}

// Degree bounds from images modulo a prime at a pseudo-random point: when the
// leading coefficients survive, deg_v gcd(f, g) <= deg gcd of the images.
constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1U) r = mul_mod(r, base);
        base = mul_mod(base, base);
        e >>= 1U;
    }
    return r;
}

std::uint64_t reduce_mod(const Integer& c) { return mpz_fdiv_ui(c.get_mpz_t(), kPrime); }

using ModPoly = std::vector<std::uint64_t>;

ModPoly image_in(const Poly& f, VarId v, const std::array<std::uint64_t, Variables::kCapacity>& point) {
    ModPoly out(f.degree_in(v) + 1, 0);
    for (const auto& t : f.terms()) {
        std::uint64_t value = reduce_mod(t.coeff);
        for (std::size_t i = 0; i < point.size() && value != 0; ++i) {
            const std::uint32_t e = t.monomial.exponent(static_cast<VarId>(i));
            if (e != 0 && i != v) value = mul_mod(value, pow_mod(point[i], e));
        }
        auto& slot = out[t.monomial.exponent(v)];
        slot = (slot + value) % kPrime;
    }
    return out;
}

void trim_mod(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b) {
    trim_mod(a);
    trim_mod(b);
    while (!b.empty()) {
        const std::uint64_t inv = pow_mod(b.back(), kPrime - 2);
        while (a.size() >= b.size()) {
            const std::uint64_t factor = mul_mod(a.back(), inv);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] = (a[i + shift] + kPrime - mul_mod(factor, b[i])) % kPrime;
            trim_mod(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

std::uint32_t gcd_degree_bound(const Poly& f, const Poly& g, VarId v) {
    const std::uint32_t fallback = std::min(f.degree_in(v), g.degree_in(v));
    std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ v;
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::array<std::uint64_t, Variables::kCapacity> point{};
        for (auto& x : point) {
            state += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = state;
            z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
            x = (z ^ (z >> 31U)) % kPrime;
        }
        ModPoly fi = image_in(f, v, point);
        ModPoly gi = image_in(g, v, point);
        if (fi.back() == 0 || gi.back() == 0) continue;
        return static_cast<std::uint32_t>(std::min<std::size_t>(mod_gcd_degree(std::move(fi), std::move(gi)), fallback));
    }
    return fallback;
}

// gcd of two polynomials where one is a single term.
Poly gcd_with_term(const Term& term, const Poly& other) {
    Integer c = integer_gcd(term.coeff, other.content());
    Monomial m = term.monomial;
    for (const auto& t : other.terms()) {
        Monomial::Exponents e = m.exponents();
        Monomial next;
        for (std::size_t i = 0; i < e.size(); ++i)
            next = next.with_exponent(static_cast<VarId>(i),
                                      std::min<std::uint32_t>(e[i], t.monomial.exponent(static_cast<VarId>(i))));
        m = next;
        if (m.is_one()) break;
    }
    return Poly::monomial(m, c);
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
    if (f.is_zero()) return positive_leading(g);
    if (g.is_zero()) return positive_leading(f);
    if (f.is_constant() || g.is_constant()) return Poly(integer_gcd(f.content(), g.content()));
    if (f.size() == 1) return gcd_with_term(f.leading(), g);
    if (g.size() == 1) return gcd_with_term(g.leading(), f);
    if (f == g || f == -g) return positive_leading(f);

    // A variable missing from one side cannot occur in the gcd.
    for (VarId v : f.variables())
        if (!g.contains(v)) return gcd(content_of(to_univariate(f, v)), g);
    for (VarId v : g.variables())
        if (!f.contains(v)) return gcd(f, content_of(to_univariate(g, v)));

    const auto vars = f.variables();
    VarId v = vars.front();
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    std::vector<VarId> absent;
    for (VarId w : vars) {
        const std::uint32_t bound = gcd_degree_bound(f, g, w);
        if (bound == 0) absent.push_back(w);
        if (bound > 0 && bound < best) {
            best = bound;
            v = w;
        }
    }
    if (absent.size() == vars.size()) return Poly(integer_gcd(f.content(), g.content()));
    if (!absent.empty()) {
        const VarId w = absent.front();
        return gcd(content_of(to_univariate(f, w)), content_of(to_univariate(g, w)));
    }

    Univariate a = to_univariate(f, v);
    Univariate b = to_univariate(g, v);
    const Poly ca = content_of(a);
    const Poly cb = content_of(b);
    const Poly c = gcd(ca, cb);
    a = divide_coefficients(a, ca);
    b = divide_coefficients(b, cb);
    if (a.size() < b.size()) std::swap(a, b);

    while (true) {
        Univariate r = pseudo_remainder(a, b);
        if (r.empty()) break;
        if (r.size() == 1) {
            b = Univariate{Poly(1L)};
            break;
        }
        a = std::move(b);
        b = divide_coefficients(r, content_of(r));
    }
    Poly primitive = from_univariate(divide_coefficients(b, content_of(b)), v);
    return positive_leading(primitive * c);
}

}  // namespace horadam
