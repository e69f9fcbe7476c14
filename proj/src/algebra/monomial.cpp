#include "horadam/algebra/monomial.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include "horadam/errors.hpp"

namespace horadam {

namespace {

struct Registry {
    std::mutex mutex;
    std::vector<std::string> names{"s", "t", "p", "q", "x", "a", "b", "A", "B"};
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

VarId Variables::intern(std::string_view name) {
    Registry& r = registry();
    std::lock_guard lock(r.mutex);
    auto it = std::find(r.names.begin(), r.names.end(), name);
    if (it != r.names.end()) return static_cast<VarId>(it - r.names.begin());
    if (r.names.size() >= kCapacity)
        throw InvalidArgument("too many indeterminates (limit " + std::to_string(kCapacity) + ")");
    r.names.emplace_back(name);
    return static_cast<VarId>(r.names.size() - 1);
}

std::string Variables::name(VarId id) {
    Registry& r = registry();
    std::lock_guard lock(r.mutex);
    return r.names.at(id);
}

std::size_t Variables::count() {
    Registry& r = registry();
    std::lock_guard lock(r.mutex);
    return r.names.size();
}

Monomial Monomial::variable(VarId id, std::uint32_t power) {
    Monomial m;
    m.exps_[id] = static_cast<std::uint16_t>(power);
    m.degree_ = power;
    return m;
}

std::size_t Monomial::support_size() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(exps_.begin(), exps_.end(), [](std::uint16_t e) { return e != 0; }));
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial m;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        std::uint32_t e = std::uint32_t{exps_[i]} + other.exps_[i];
        if (e > 0xFFFF) throw InvalidArgument("exponent overflow in monomial product");
        m.exps_[i] = static_cast<std::uint16_t>(e);
    }
    m.degree_ = degree_ + other.degree_;
    return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial m;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        m.exps_[i] = static_cast<std::uint16_t>(other.exps_[i] - exps_[i]);
    m.degree_ = other.degree_ - degree_;
    return m;
}

Monomial Monomial::with_exponent(VarId id, std::uint32_t power) const {
    Monomial m = *this;
    m.degree_ = m.degree_ - m.exps_[id] + power;
    m.exps_[id] = static_cast<std::uint16_t>(power);
    return m;
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += Variables::name(static_cast<VarId>(i));
        if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace horadam
