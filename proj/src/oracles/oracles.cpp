#include "horadam/oracles/oracles.hpp"

#include <algorithm>
#include <functional>

#include "horadam/binomials/binomials.hpp"

namespace horadam {

namespace {

Poly st_weight(std::size_t squares, std::size_t dominoes) {
    return Poly::monomial(Monomial::variable(Variables::intern("s"), static_cast<std::uint32_t>(squares)) *
                              Monomial::variable(Variables::intern("t"), static_cast<std::uint32_t>(dominoes)),
                          Integer(1));
}

Scalar weigh(const Poly& weights, const Scalar& s, const Scalar& t) {
    return substitute(weights, Assignment{{"s", s}, {"t", t}});
}

}  // namespace

std::vector<TilingWord> enumerate_linear_tilings(std::size_t n, std::uint32_t square_colors, std::uint32_t domino_colors) {
    std::vector<TilingWord> out;
    TilingWord current;
    std::function<void(std::size_t)> extend = [&](std::size_t covered) {
        if (covered == n) {
            out.push_back(current);
            return;
        }
        for (std::uint32_t c = 1; c <= square_colors; ++c) {
            current.push_back({false, c});
            extend(covered + 1);
            current.pop_back();
        }
        if (covered + 2 <= n) {
            for (std::uint32_t c = 1; c <= domino_colors; ++c) {
                current.push_back({true, c});
                extend(covered + 2);
                current.pop_back();
            }
        }
    };
    extend(0);
    return out;
}

Scalar count_linear_tilings(std::size_t n, const Scalar& s, const Scalar& t) {
    std::vector<Term> weights;
    for (const auto& word : enumerate_linear_tilings(n, 1, 1)) {
        std::size_t dominoes = 0;
        for (const auto& tile : word) dominoes += tile.domino ? 1 : 0;
        weights.push_back({st_weight(word.size() - dominoes, dominoes).leading().monomial, Integer(1)});
    }
    return weigh(Poly::from_terms(std::move(weights)), s, t);
}

std::vector<Bracelet> enumerate_bracelets(std::size_t n) {
    if (n == 0 || n > 24) throw InvalidArgument("bracelet circumference must be in 1..24");
    std::vector<Bracelet> out;
    if (n == 1) {
        out.push_back({1, {}});
        return out;
    }
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::uint32_t covered = 0;
        bool ok = true;
        Bracelet b{n, {}};
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1U)) continue;
            const std::uint32_t cells = (1U << i) | (1U << ((i + 1) % n));
            if (covered & cells) ok = false;
            covered |= cells;
            b.domino_starts.push_back(i);
        }
        if (ok) out.push_back(std::move(b));
    }
    return out;
}

Scalar count_bracelets(std::size_t n, const Scalar& s, const Scalar& t) {
    std::vector<Term> weights;
    for (const auto& b : enumerate_bracelets(n)) {
        const std::size_t d = b.domino_starts.size();
        weights.push_back({st_weight(n - 2 * d, d).leading().monomial, Integer(1)});
    }
    return weigh(Poly::from_terms(std::move(weights)), s, t);
}

std::size_t ZigzagPath::area() const {
    std::size_t height = 0;
    std::size_t area = 0;
    for (bool up : north) {
        if (up) {
            ++height;
        } else {
            area += height;
        }
    }
    return area;
}

std::size_t ZigzagPath::inversions() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < north.size(); ++i)
        for (std::size_t j = i + 1; j < north.size(); ++j)
            if (north[i] && !north[j]) ++count;
    return count;
}

std::vector<ZigzagPath> enumerate_paths(std::size_t n, std::size_t k) {
    if (k > n) throw InvalidArgument("paths need k <= n");
    std::vector<ZigzagPath> out;
    ZigzagPath current;
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t east, std::size_t up) {
        if (east == k && up == n - k) {
            out.push_back(current);
            return;
        }
        if (east < k) {
            current.north.push_back(false);
            extend(east + 1, up);
            current.north.pop_back();
        }
        if (up < n - k) {
            current.north.push_back(true);
            extend(east, up + 1);
            current.north.pop_back();
        }
    };
    extend(0, 0);
    return out;
}

Poly AreaDistribution::polynomial(std::string_view indeterminate) const {
    const VarId q = Variables::intern(indeterminate);
    std::vector<Term> terms;
    for (const auto& [a, c] : counts) terms.push_back({Monomial::variable(q, static_cast<std::uint32_t>(a)), c});
    return Poly::from_terms(std::move(terms));
}

Integer AreaDistribution::total() const {
    Integer sum(0);
    for (const auto& [a, c] : counts) sum += c;
    return sum;
}

bool AreaDistribution::symmetric() const {
    const std::size_t top = k * (n - k);
    for (const auto& [a, c] : counts) {
        if (a > top) return false;
        auto it = counts.find(top - a);
        if (it == counts.end() || it->second != c) return false;
    }
    return true;
}

AreaDistribution gaussian_by_paths(std::size_t n, std::size_t k) {
    AreaDistribution dist{n, k, {}};
    for (const auto& path : enumerate_paths(n, k)) dist.counts[path.area()] += 1;
    return dist;
}

bool inversions_equal_area(std::size_t n, std::size_t k) {
    for (const auto& path : enumerate_paths(n, k))
        if (path.area() != path.inversions()) return false;
    return true;
}

Integer count_subspaces(std::size_t n, std::size_t k, long qf) {
    if (qf != 2 && qf != 3 && qf != 4) throw UnsupportedField(qf);
    if (k > n || n > 5) throw InvalidArgument("subspace oracle needs k <= n <= 5");
    Integer count(0);
    std::vector<std::size_t> pivots(k);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t row, std::size_t from) {
        if (row == k) {
            // Free cells: row i, column c > pivots[i] that is not a pivot column.
            std::vector<std::pair<std::size_t, std::size_t>> free_cells;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = pivots[i] + 1; c < n; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cells.emplace_back(i, c);
            // Walk every filling of the free cells with field elements 0..qf-1.
            std::vector<long> digits(free_cells.size(), 0);
            while (true) {
                count += 1;
                std::size_t pos = 0;
                while (pos < digits.size() && ++digits[pos] == qf) digits[pos++] = 0;
                if (pos == digits.size()) break;
            }
            return;
        }
        for (std::size_t c = from; c + (k - row) <= n; ++c) {
            pivots[row] = c;
            choose(row + 1, c + 1);
        }
    };
    choose(0, 0);
    return count;
}

TwoColoredGraphCount count_two_colored_graphs(std::size_t n) {
    if (n > 5) throw InvalidArgument("direct graph enumeration needs n <= 5");
    TwoColoredGraphCount out{Integer(0), Integer(0), Integer(0)};
    for (std::uint32_t coloring = 0; coloring < (1U << n); ++coloring) {
        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if ((coloring >> u & 1U) != (coloring >> v & 1U)) candidates.emplace_back(u, v);
        for (std::uint32_t edges = 0; edges < (1U << candidates.size()); ++edges) out.direct += 1;
    }
    for (std::size_t k = 0; k <= n; ++k)
        out.formula += binomial(n, k) * integer_pow(Integer(2), k * (n - k));
    const Sequence n2 = Sequence::n_alpha(2);
    Scalar row;
    for (std::size_t k = 0; k <= n; ++k) row += f_binomial(n2, n, k);
    out.row_sum = *row.integer_value();
    return out;
}

Integer gamma_alpha(std::size_t n, std::size_t k, const Integer& alpha) {
    if (k == 0) throw InvalidArgument("gamma needs at least one color");
    const Sequence seq = Sequence::n_alpha(alpha);
    Scalar sum;
    std::vector<std::size_t> parts(k, 0);
    std::function<void(std::size_t, std::size_t)> compose = [&](std::size_t index, std::size_t remaining) {
        if (index + 1 == k) {
            parts[index] = remaining;
            sum += f_multinomial(seq, n, parts);
            return;
        }
        for (std::size_t v = 0; v <= remaining; ++v) {
            parts[index] = v;
            compose(index + 1, remaining - v);
        }
    };
    compose(0, n);
    auto value = sum.integer_value();
    if (!value) throw InvalidArgument("gamma sum is not an integer: " + sum.to_string());
    return *value;
}

Scalar abstract_fibonacci(std::size_t r) {
    return horadam_term(HoradamSpec::make(0L, 1L, Scalar::variable("a"), Scalar::variable("b")), r);
}

AdditionReport cigler_addition_report(std::size_t m, std::size_t n) {
    if (n == 0) throw InvalidArgument("addition report needs n >= 1");
    const Scalar b = Scalar::variable("b");
    const auto F = [](std::size_t r) { return abstract_fibonacci(r); };
    AdditionReport report;
    report.m = m;
    report.n = n;
    report.lhs = F(m + n);
    report.printed_rhs = F(m + 1) * F(m) + b * F(n - 1) * F(n);
    report.standard_rhs = F(m + 1) * F(n) + b * F(m) * F(n - 1);
    report.printed_holds = report.lhs == report.printed_rhs;
    report.standard_holds = report.lhs == report.standard_rhs;
    return report;
}

}  // namespace horadam
