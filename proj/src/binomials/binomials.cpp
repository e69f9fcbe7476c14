#include "horadam/binomials/binomials.hpp"

#include <array>
#include <cctype>
#include <numeric>

namespace horadam {

std::vector<Scalar> f_factorials(const Sequence& seq, std::size_t n) {
    std::vector<Scalar> out;
    out.reserve(n + 1);
    out.push_back(Scalar(1L));
    for (std::size_t i = 1; i <= n; ++i) {
        Scalar term = seq.term(i);
        if (term.is_zero()) throw ZeroTerm(i);
        out.push_back(out.back() * term);
    }
    return out;
}

Scalar f_factorial(const Sequence& seq, std::size_t n) { return f_factorials(seq, n).back(); }

Scalar f_binomial(const Sequence& seq, std::size_t n, std::size_t k) {
    if (k > n) return Scalar{};
    const auto f = f_factorials(seq, n);
    return f[n] / (f[k] * f[n - k]);
}

Scalar f_multinomial(const Sequence& seq, std::size_t n, const std::vector<std::size_t>& parts) {
    if (std::accumulate(parts.begin(), parts.end(), std::size_t{0}) != n) return Scalar{};
    const auto f = f_factorials(seq, n);
    Scalar den(1L);
    for (std::size_t part : parts) den *= f[part];
    return f[n] / den;
}

bool multinomial_factorization_check(const Sequence& seq, std::size_t n, std::size_t k,
                                     const std::vector<std::size_t>& parts) {
    if (k > n || std::accumulate(parts.begin(), parts.end(), std::size_t{0}) != n - k)
        throw InvalidArgument("parts must sum to n - k");
    std::vector<std::size_t> joined{k};
    joined.insert(joined.end(), parts.begin(), parts.end());
    const Scalar whole = f_multinomial(seq, n, joined);
    const Scalar split = f_binomial(seq, n, k) * f_multinomial(seq, n - k, parts);
    Scalar chained = f_binomial(seq, n, k);
    std::size_t remaining = n - k;
    for (std::size_t part : parts) {
        chained *= f_binomial(seq, remaining, part);
        remaining -= part;
    }
    return whole == split && whole == chained;
}

Scalar mixed_binomial(std::size_t r, std::size_t s, const Scalar& s_param, const Scalar& t_param) {
    const auto v = f_factorials(Sequence::primordial_v(s_param, t_param), r + s);
    const auto u = f_factorials(Sequence::fundamental_u(s_param, t_param), s);
    return v[r + s] / (v[r] * u[s]);
}

namespace {

struct SchemeInfo {
    SchemeName name;
    std::string_view cli;
    std::string_view id;
};

constexpr std::array<SchemeInfo, 13> kSchemes{{
    {SchemeName::SymmetricSplit, "symmetric-split", "SYMMETRIC_SPLIT"},
    {SchemeName::T2aRatio, "t2a-ratio", "T2A_RATIO"},
    {SchemeName::T2aAlt, "t2a-alt", "T2A_ALT"},
    {SchemeName::FonteneA, "fontene-a", "FONTENE_A"},
    {SchemeName::FonteneB, "fontene-b", "FONTENE_B"},
    {SchemeName::CorcinoA, "corcino-a", "CORCINO_A"},
    {SchemeName::CorcinoB, "corcino-b", "CORCINO_B"},
    {SchemeName::Husun, "husun", "HUSUN"},
    {SchemeName::HoggattA, "hoggatt-a", "HOGGATT_A"},
    {SchemeName::HoggattB, "hoggatt-b", "HOGGATT_B"},
    {SchemeName::LucasDoubled, "lucas-doubled", "LUCAS_DOUBLED"},
    {SchemeName::Mixed2b, "mixed-2b", "MIXED_2B"},
    {SchemeName::MixedDoubled, "mixed-doubled", "MIXED_DOUBLED"},
}};

const SchemeInfo& info(SchemeName name) {
    for (const auto& i : kSchemes)
        if (i.name == name) return i;
    return kSchemes.front();
}

const HoradamSpec& require_spec(const Sequence& seq, SchemeName scheme) {
    if (!seq.spec())
        throw SchemeNotApplicable(std::string(scheme_id(scheme)) + " needs a recurrence-defined sequence");
    return *seq.spec();
}

/// The scheme acts on U_n(s, t); the sequence must be that U.
const HoradamSpec& require_fundamental(const Sequence& seq, SchemeName scheme) {
    const HoradamSpec& spec = require_spec(seq, scheme);
    if (!spec.a.is_zero() || !spec.b.is_one())
        throw SchemeNotApplicable(std::string(scheme_id(scheme)) + " applies to fundamental sequences (H0 = 0, H1 = 1)");
    return spec;
}

const RootPair& require_roots(const HoradamSpec& spec, SchemeName scheme) {
    if (!spec.roots)
        throw SchemeNotApplicable(std::string(scheme_id(scheme)) + " needs explicit roots p, q (use Uroots:p,q)");
    return *spec.roots;
}

Scalar nonzero_term(const Sequence& seq, std::size_t i) {
    Scalar v = seq.term(i);
    if (v.is_zero()) throw ZeroTerm(i);
    return v;
}

Scalar power(const Scalar& x, std::size_t e) { return x.pow(static_cast<long>(e)); }

}  // namespace

std::string_view scheme_cli_name(SchemeName name) noexcept { return info(name).cli; }
std::string_view scheme_id(SchemeName name) noexcept { return info(name).id; }

std::optional<SchemeName> scheme_from_string(std::string_view text) {
    const auto fold = [](std::string_view v) {
        std::string out(v);
        for (char& ch : out) ch = ch == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        return out;
    };
    const std::string key = fold(text);
    for (const auto& i : kSchemes)
        if (fold(i.cli) == key || fold(i.id) == key) return i.name;
    return std::nullopt;
}

const std::vector<SchemeName>& all_schemes() {
    static const std::vector<SchemeName> names = [] {
        std::vector<SchemeName> out;
        for (const auto& i : kSchemes) out.push_back(i.name);
        return out;
    }();
    return names;
}

bool is_mixed_scheme(SchemeName name) noexcept {
    return name == SchemeName::Mixed2b || name == SchemeName::MixedDoubled;
}

SchemeStep scheme_coefficients(SchemeName scheme, const Sequence& seq, std::size_t r, std::size_t s) {
    if (r == 0 || s == 0) throw InvalidArgument("scheme coefficients need r, s >= 1");
    const Scalar one(1L);
    switch (scheme) {
        case SchemeName::SymmetricSplit: {
            const Scalar whole = seq.term(r + s) / Scalar(2L);
            return {whole / nonzero_term(seq, r), whole / nonzero_term(seq, s), one};
        }
        case SchemeName::FonteneA: {
            const Scalar ar = seq.term(r);
            return {one, (seq.term(r + s) - ar) / nonzero_term(seq, s), one};
        }
        case SchemeName::FonteneB: {
            const Scalar as = seq.term(s);
            return {(seq.term(r + s) - as) / nonzero_term(seq, r), one, one};
        }
        case SchemeName::Husun:
        case SchemeName::HoggattA: {
            const auto& spec = require_fundamental(seq, scheme);
            return {seq.term(s + 1), spec.t * seq.term(r - 1), one};
        }
        case SchemeName::HoggattB: {
            const auto& spec = require_fundamental(seq, scheme);
            return {spec.t * seq.term(s - 1), seq.term(r + 1), one};
        }
        case SchemeName::LucasDoubled: {
            const auto& spec = require_fundamental(seq, scheme);
            return {lucas_v(s, spec.s, spec.t), lucas_v(r, spec.s, spec.t), Scalar(2L)};
        }
        case SchemeName::CorcinoA: {
            const auto& roots = require_roots(require_fundamental(seq, scheme), scheme);
            return {power(roots.p, s), power(roots.q, r), one};
        }
        case SchemeName::CorcinoB: {
            const auto& roots = require_roots(require_fundamental(seq, scheme), scheme);
            return {power(roots.q, s), power(roots.p, r), one};
        }
        case SchemeName::T2aRatio: {
            const auto& spec = require_spec(seq, scheme);
            const auto& roots = require_roots(spec, scheme);
            const BinetCoeffs c = binet_coeffs(spec);
            const Scalar hr = binet_term(spec, c, r);
            const Scalar hs = binet_term(spec, c, s);
            if (hr.is_zero() || hs.is_zero()) throw DenominatorVanishes("T2A_RATIO: A p^r + B q^r vanishes");
            return {c.A * power(roots.p, r + s) / hr, c.B * power(roots.q, r + s) / hs, one};
        }
        case SchemeName::T2aAlt: {
            if (r == s) throw EqualIndices();
            const auto& roots = require_roots(require_spec(seq, scheme), scheme);
            const Scalar &p = roots.p, &q = roots.q;
            const Scalar det = power(p, r) * power(q, s) - power(q, r) * power(p, s);
            if (det.is_zero()) throw DenominatorVanishes("T2A_ALT: p^r q^s - q^r p^s vanishes");
            const Scalar h1 = (power(p, r + s) * power(q, s) - power(q, r + s) * power(p, s)) / det;
            const Scalar h2 = (power(p, r + s) * power(q, r) - power(q, r + s) * power(p, r)) / -det;
            return {h1, h2, one};
        }
        case SchemeName::Mixed2b: {
            const auto& spec = require_spec(seq, scheme);
            return {lucas_u(s + 1, spec.s, spec.t), spec.t * lucas_v(r - 1, spec.s, spec.t), one};
        }
        case SchemeName::MixedDoubled: {
            const auto& spec = require_spec(seq, scheme);
            return {lucas_v(s, spec.s, spec.t), spec.delta() * lucas_u(r, spec.s, spec.t), Scalar(2L)};
        }
    }
    throw InvalidArgument("unknown scheme");
}

bool scheme_identity_holds(SchemeName scheme, const Sequence& seq, std::size_t r, std::size_t s) {
    const SchemeStep step = scheme_coefficients(scheme, seq, r, s);
    if (is_mixed_scheme(scheme)) {
        const auto& spec = *seq.spec();
        const Scalar lhs = step.multiplier * lucas_v(r + s, spec.s, spec.t);
        return lhs == step.h1 * lucas_v(r, spec.s, spec.t) + step.h2 * lucas_u(s, spec.s, spec.t);
    }
    return step.multiplier * seq.term(r + s) == step.h1 * seq.term(r) + step.h2 * seq.term(s);
}

Scalar GBTable::entry(std::size_t n, std::size_t k) const {
    if (k > n) return Scalar{};
    return rows.at(n).at(k);
}

bool GBTable::all_integer() const {
    for (const auto& row : rows)
        for (const auto& v : row)
            if (!v.is_integer()) return false;
    return true;
}

GBTable factorial_table(const Sequence& seq, std::size_t N) {
    const auto f = f_factorials(seq, N);
    GBTable table{seq.label(), N, {}};
    for (std::size_t n = 0; n <= N; ++n) {
        std::vector<Scalar> row;
        row.reserve(n + 1);
        for (std::size_t k = 0; k <= n; ++k) row.push_back(f[n] / (f[k] * f[n - k]));
        table.rows.push_back(std::move(row));
    }
    return table;
}

GBTable mixed_table(const Sequence& seq, std::size_t N) {
    const HoradamSpec& spec = require_spec(seq, SchemeName::Mixed2b);
    const auto v = f_factorials(Sequence::primordial_v(spec.s, spec.t), N);
    const auto u = f_factorials(Sequence::fundamental_u(spec.s, spec.t), N);
    GBTable table{seq.label(), N, {}};
    for (std::size_t n = 0; n <= N; ++n) {
        std::vector<Scalar> row;
        for (std::size_t k = 0; k <= n; ++k) row.push_back(v[n] / (v[n - k] * u[k]));
        table.rows.push_back(std::move(row));
    }
    return table;
}

GBTable recurrence_fill(SchemeName scheme, const Sequence& seq, std::size_t N) {
    const bool mixed = is_mixed_scheme(scheme);
    GBTable table{seq.label(), N, {}};
    std::optional<HoradamSpec> spec;
    if (mixed) spec = require_spec(seq, scheme);
    for (std::size_t n = 0; n <= N; ++n) {
        std::vector<Scalar> row(n + 1);
        row[0] = Scalar(1L);
        if (n > 0) {
            if (mixed) {
                const Scalar un = lucas_u(n, spec->s, spec->t);
                if (un.is_zero()) throw ZeroTerm(n);
                row[n] = table.rows[n - 1][n - 1] * lucas_v(n, spec->s, spec->t) / un;
            } else {
                row[n] = Scalar(1L);
            }
        }
        for (std::size_t k = 1; k < n; ++k) {
            const std::size_t r = n - k;
            const SchemeName effective = (scheme == SchemeName::T2aAlt && r == k) ? SchemeName::T2aRatio : scheme;
            const SchemeStep step = scheme_coefficients(effective, seq, r, k);
            const Scalar& up = table.rows[n - 1][k];
            const Scalar& diag = table.rows[n - 1][k - 1];
            row[k] = (step.h1 * up + step.h2 * diag) / step.multiplier;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::size_t VerificationReport::failures() const {
    std::size_t count = 0;
    for (const auto& c : cells)
        if (!c.pass) ++count;
    return count;
}

VerificationReport verify_scheme(SchemeName scheme, const Sequence& seq, std::size_t N) {
    VerificationReport report;
    report.scheme = scheme;
    report.sequence = seq.label();
    report.N = N;
    try {
        const GBTable expected = is_mixed_scheme(scheme) ? mixed_table(seq, N) : factorial_table(seq, N);
        const GBTable filled = recurrence_fill(scheme, seq, N);
        for (std::size_t n = 0; n <= N; ++n)
            for (std::size_t k = 0; k <= n; ++k) {
                CellCheck cell{n, k, filled.entry(n, k), expected.entry(n, k), false};
                cell.pass = cell.filled == cell.expected;
                report.cells.push_back(std::move(cell));
            }
    } catch (const Error& e) {
        report.error = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    return report;
}

}  // namespace horadam
