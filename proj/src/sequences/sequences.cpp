#include "horadam/sequences/sequences.hpp"

#include <mutex>

namespace horadam {

HoradamSpec HoradamSpec::make(Scalar a, Scalar b, Scalar s, Scalar t) {
    return HoradamSpec{std::move(a), std::move(b), std::move(s), std::move(t), std::nullopt};
}

HoradamSpec HoradamSpec::from_roots(Scalar a, Scalar b, Scalar p, Scalar q) {
    Scalar s = p + q;
    Scalar t = -(p * q);
    return HoradamSpec{std::move(a), std::move(b), std::move(s), std::move(t),
                       RootPair{std::move(p), std::move(q)}};
}

HoradamSpec HoradamSpec::with_roots(Scalar p, Scalar q) const {
    if (!is_equal(p + q, s) || !is_equal(p * q, -t))
        throw InvalidArgument("roots do not satisfy p + q = s and p*q = -t");
    HoradamSpec out = *this;
    out.roots = RootPair{std::move(p), std::move(q)};
    return out;
}

Scalar HoradamSpec::delta() const { return s * s + Scalar(4L) * t; }

std::vector<Scalar> horadam_terms(const HoradamSpec& spec, std::size_t count) {
    std::vector<Scalar> out;
    out.reserve(count);
    if (count > 0) out.push_back(spec.a);
    if (count > 1) out.push_back(spec.b);
    while (out.size() < count) {
        const std::size_t n = out.size();
        out.push_back(spec.s * out[n - 1] + spec.t * out[n - 2]);
    }
    return out;
}

Scalar horadam_term(const HoradamSpec& spec, std::size_t n) { return horadam_terms(spec, n + 1).back(); }

Scalar lucas_u(std::size_t n, const Scalar& s, const Scalar& t) {
    return horadam_term(HoradamSpec::make(0L, 1L, s, t), n);
}

Scalar lucas_v(std::size_t n, const Scalar& s, const Scalar& t) {
    return horadam_term(HoradamSpec::make(2L, s, s, t), n);
}

Scalar lucas_u_roots(std::size_t n, const Scalar& p, const Scalar& q) {
    Scalar sum;
    for (std::size_t j = 0; j < n; ++j)
        sum += p.pow(static_cast<long>(n - 1 - j)) * q.pow(static_cast<long>(j));
    return sum;
}

Scalar lucas_v_roots(std::size_t n, const Scalar& p, const Scalar& q) {
    return p.pow(static_cast<long>(n)) + q.pow(static_cast<long>(n));
}

BinetCoeffs binet_coeffs(const HoradamSpec& spec) {
    if (!spec.roots) throw InvalidArgument("Binet form needs explicit roots p, q");
    const Scalar& p = spec.roots->p;
    const Scalar& q = spec.roots->q;
    const Scalar diff = p - q;
    if (diff.is_zero()) throw EqualRoots();
    return BinetCoeffs{(spec.b - q * spec.a) / diff, -(spec.b - p * spec.a) / diff};
}

Scalar binet_term(const HoradamSpec& spec, const BinetCoeffs& coeffs, std::size_t n) {
    if (!spec.roots) throw InvalidArgument("Binet form needs explicit roots p, q");
    const auto e = static_cast<long>(n);
    return coeffs.A * spec.roots->p.pow(e) + coeffs.B * spec.roots->q.pow(e);
}

Scalar horadam_binomial_sum(const HoradamSpec& spec, std::size_t n) {
    if (spec.s.is_zero()) throw ZeroS();
    Scalar first;
    for (std::size_t k = 0; 2 * k <= n; ++k)
        first += Scalar(binomial(n - k, k)) * spec.s.pow(static_cast<long>(n - 2 * k)) *
                 spec.t.pow(static_cast<long>(k));
    Scalar second;
    for (std::size_t k = 0; 2 * k + 1 <= n; ++k)
        second += Scalar(binomial(n - k - 1, k)) * spec.s.pow(static_cast<long>(n - 2 * k)) *
                  spec.t.pow(static_cast<long>(k));
    return spec.a * first + (spec.b / spec.s - spec.a) * second;
}

std::vector<Scalar> series_divide(const std::vector<Scalar>& num, const std::vector<Scalar>& den,
                                  std::size_t count) {
    if (den.empty() || den.front().is_zero()) throw DivisionByZero("series denominator has zero constant term");
    const Scalar inv0 = den.front().invert();
    std::vector<Scalar> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        Scalar c = n < num.size() ? num[n] : Scalar{};
        for (std::size_t j = 1; j <= n && j < den.size(); ++j) c -= den[j] * out[n - j];
        out.push_back(c * inv0);
    }
    return out;
}

std::vector<Scalar> ogf_coefficients(const HoradamSpec& spec, std::size_t count) {
    return series_divide({spec.a, spec.b - spec.a * spec.s}, {Scalar(1L), -spec.s, -spec.t}, count);
}

std::vector<Scalar> egf_coefficients(const HoradamSpec& spec, std::size_t count) {
    std::vector<Scalar> out = horadam_terms(spec, count);
    Integer factorial(1);
    for (std::size_t n = 0; n < out.size(); ++n) {
        if (n > 0) factorial *= static_cast<unsigned long>(n);
        out[n] = out[n] / Scalar(factorial);
    }
    return out;
}

Integer n_alpha_term(const Integer& alpha, std::size_t n) {
    if (n == 0) return Integer(0);
    return Integer(static_cast<unsigned long>(n)) * integer_pow(alpha, n - 1);
}

Poly q_integer(std::size_t n, std::string_view indeterminate) {
    const VarId q = Variables::intern(indeterminate);
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j)
        terms.push_back({Monomial::variable(q, static_cast<std::uint32_t>(j)), Integer(1)});
    return Poly::from_terms(std::move(terms));
}

const char* sequence_kind_name(SequenceKind kind) noexcept {
    switch (kind) {
        case SequenceKind::Horadam: return "horadam";
        case SequenceKind::FundamentalU: return "fundamental_U";
        case SequenceKind::PrimordialV: return "primordial_V";
        case SequenceKind::NAlpha: return "n_alpha";
        case SequenceKind::QInteger: return "q_integer";
        case SequenceKind::FibonacciPolynomials: return "fibonacci_polynomials";
        case SequenceKind::Custom: return "custom";
    }
    return "unknown";
}

struct Sequence::State {
    SequenceKind kind;
    std::string label;
    std::optional<HoradamSpec> spec;
    std::mutex mutex;
    std::vector<Scalar> memo;
    bool bounded = false;
};

namespace {

std::shared_ptr<Sequence::State> make_state(SequenceKind kind, std::string label, std::optional<HoradamSpec> spec) {
    auto st = std::make_shared<Sequence::State>();
    st->kind = kind;
    st->label = std::move(label);
    st->spec = std::move(spec);
    return st;
}

std::string describe(const char* head, std::initializer_list<const Scalar*> args) {
    std::string out = head;
    out += '(';
    bool first = true;
    for (const Scalar* a : args) {
        if (!first) out += ", ";
        out += a->to_string();
        first = false;
    }
    return out + ')';
}

}  // namespace

Sequence Sequence::horadam(const HoradamSpec& spec, std::string label) {
    if (label.empty()) label = describe("H", {&spec.a, &spec.b, &spec.s, &spec.t});
    return Sequence(make_state(SequenceKind::Horadam, std::move(label), spec));
}

Sequence Sequence::fundamental_u(const Scalar& s, const Scalar& t, std::string label) {
    if (label.empty()) label = describe("U", {&s, &t});
    return Sequence(make_state(SequenceKind::FundamentalU, std::move(label), HoradamSpec::make(0L, 1L, s, t)));
}

Sequence Sequence::primordial_v(const Scalar& s, const Scalar& t, std::string label) {
    if (label.empty()) label = describe("V", {&s, &t});
    return Sequence(make_state(SequenceKind::PrimordialV, std::move(label), HoradamSpec::make(2L, s, s, t)));
}

Sequence Sequence::fundamental_u_roots(const Scalar& p, const Scalar& q, std::string label) {
    if (label.empty()) label = describe("Uroots", {&p, &q});
    return Sequence(make_state(SequenceKind::FundamentalU, std::move(label), HoradamSpec::from_roots(0L, 1L, p, q)));
}

Sequence Sequence::primordial_v_roots(const Scalar& p, const Scalar& q, std::string label) {
    if (label.empty()) label = describe("Vroots", {&p, &q});
    return Sequence(make_state(SequenceKind::PrimordialV, std::move(label), HoradamSpec::from_roots(2L, p + q, p, q)));
}

Sequence Sequence::n_alpha(const Integer& alpha) {
    if (alpha < 1) throw InvalidArgument("N(alpha) needs alpha >= 1");
    const Scalar al(alpha);
    auto spec = HoradamSpec::from_roots(0L, 1L, al, al);
    return Sequence(make_state(SequenceKind::NAlpha, "N(" + alpha.get_str() + ")", std::move(spec)));
}

Sequence Sequence::q_integers(const Scalar& q) {
    auto spec = HoradamSpec::make(0L, 1L, Scalar(1L) + q, -q);
    if (!is_equal(q, Scalar(1L))) spec.roots = RootPair{Scalar(1L), q};
    return Sequence(make_state(SequenceKind::QInteger, "gauss(" + q.to_string() + ")", std::move(spec)));
}

Sequence Sequence::fibonacci_polynomials(const Scalar& x) {
    return Sequence(make_state(SequenceKind::FibonacciPolynomials, "fibpoly(" + x.to_string() + ")",
                               HoradamSpec::make(0L, 1L, x, 1L)));
}

Sequence Sequence::custom(std::vector<Scalar> terms, std::string label) {
    if (label.empty()) {
        label = "custom(";
        for (std::size_t i = 0; i < terms.size(); ++i) label += (i ? ", " : "") + terms[i].to_string();
        label += ')';
    }
    auto st = make_state(SequenceKind::Custom, std::move(label), std::nullopt);
    st->memo = std::move(terms);
    st->bounded = true;
    return Sequence(std::move(st));
}

Scalar Sequence::term(std::size_t n) const {
    State& st = *state_;
    std::lock_guard lock(st.mutex);
    if (st.bounded) {
        if (n >= st.memo.size())
            throw InvalidArgument("custom sequence has no term " + std::to_string(n) + " (length " +
                                  std::to_string(st.memo.size()) + ")");
        return st.memo[n];
    }
    const HoradamSpec& spec = *st.spec;
    if (st.memo.empty()) st.memo.push_back(spec.a);
    if (st.memo.size() == 1 && n >= 1) st.memo.push_back(spec.b);
    while (st.memo.size() <= n) {
        const std::size_t k = st.memo.size();
        st.memo.push_back(spec.s * st.memo[k - 1] + spec.t * st.memo[k - 2]);
    }
    return st.memo[n];
}

std::vector<Scalar> Sequence::terms(std::size_t count) const {
    std::vector<Scalar> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(term(i));
    return out;
}

SequenceKind Sequence::kind() const noexcept { return state_->kind; }
const std::string& Sequence::label() const noexcept { return state_->label; }
const std::optional<HoradamSpec>& Sequence::spec() const noexcept { return state_->spec; }

std::optional<std::size_t> Sequence::length() const noexcept {
    if (!state_->bounded) return std::nullopt;
    return state_->memo.size();
}

namespace {

std::vector<Scalar> parse_list(std::string_view body, std::size_t expected, std::string_view preset) {
    std::vector<Scalar> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = body.find(',', start);
        out.push_back(parse_scalar(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (expected != 0 && out.size() != expected)
        throw InvalidArgument("preset '" + std::string(preset) + "' expects " + std::to_string(expected) +
                              " comma-separated values");
    return out;
}

}  // namespace

Sequence sequence_preset(std::string_view name) {
    const std::size_t colon = name.find(':');
    const std::string_view head = name.substr(0, colon);
    const std::string_view body = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
    const bool has_body = colon != std::string_view::npos;
    if (!has_body) {
        if (head == "fibonacci") return Sequence::fundamental_u(1L, 1L, "fibonacci");
        if (head == "lucas") return Sequence::primordial_v(1L, 1L, "lucas");
        if (head == "pell") return Sequence::fundamental_u(2L, 1L, "pell");
        if (head == "naturals") return Sequence::fundamental_u(2L, -1L, "naturals");
        if (head == "gauss") return Sequence::q_integers(Scalar::variable("q"));
    } else {
        if (head == "gauss") return Sequence::q_integers(parse_list(body, 1, head)[0]);
        if (head == "nalpha") {
            const auto v = parse_list(body, 1, head)[0].integer_value();
            if (!v || *v < 1) throw InvalidArgument("nalpha expects a positive integer");
            return Sequence::n_alpha(*v);
        }
        if (head == "horadam") {
            auto v = parse_list(body, 4, head);
            return Sequence::horadam(HoradamSpec::make(v[0], v[1], v[2], v[3]));
        }
        if (head == "U") {
            auto v = parse_list(body, 2, head);
            return Sequence::fundamental_u(v[0], v[1]);
        }
        if (head == "V") {
            auto v = parse_list(body, 2, head);
            return Sequence::primordial_v(v[0], v[1]);
        }
        if (head == "Uroots") {
            auto v = parse_list(body, 2, head);
            return Sequence::fundamental_u_roots(v[0], v[1]);
        }
        if (head == "Vroots") {
            auto v = parse_list(body, 2, head);
            return Sequence::primordial_v_roots(v[0], v[1]);
        }
        if (head == "fibpoly") return Sequence::fibonacci_polynomials(parse_list(body, 1, head)[0]);
        if (head == "custom") return Sequence::custom(parse_list(body, 0, head));
    }
    throw InvalidArgument("unknown sequence preset '" + std::string(name) + "'");
}

}  // namespace horadam
