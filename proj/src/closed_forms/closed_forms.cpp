#include "horadam/closed_forms/closed_forms.hpp"

#include "horadam/binomials/binomials.hpp"

namespace horadam {

namespace {

void chains_from(std::size_t position, std::size_t n, std::size_t k, std::vector<std::size_t>& xs,
                 const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (position > k) {
        visit(xs);
        return;
    }
    // Leave room for the remaining k - position indices.
    for (std::size_t x = xs[position - 1] + 1; x + (k - position) <= n; ++x) {
        xs[position] = x;
        chains_from(position + 1, n, k, xs, visit);
    }
}

Scalar term_power(const Sequence& seq, std::size_t index, std::size_t exponent) {
    if (exponent == 0) return Scalar(1L);
    return seq.term(index).pow(static_cast<long>(exponent));
}

/// prod_{i=1..m} F_(k-i)^(x_i - x_(i-1) - 1) F_(n - x_i - (k-i) + 1)
Scalar chain_product(const Sequence& seq, std::size_t n, std::size_t k, std::size_t m, const std::vector<std::size_t>& xs) {
    Scalar product(1L);
    for (std::size_t i = 1; i <= m; ++i) {
        product *= term_power(seq, k - i, xs[i] - xs[i - 1] - 1);
        product *= seq.term(n - xs[i] - (k - i) + 1);
        if (product.is_zero()) break;
    }
    return product;
}

void require_zero_origin(const Sequence& seq) {
    if (!seq.term(0).is_zero()) throw InvalidArgument("chain formulas need a sequence with term 0 equal to 0");
}

}  // namespace

void for_each_index_chain(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> xs(k + 1, 0);
    chains_from(1, n, k, xs, visit);
}

Scalar md_fibonomial(std::size_t n, std::size_t k, const Sequence& seq) {
    require_zero_origin(seq);
    if (k > n) return Scalar{};
    Scalar sum;
    for_each_index_chain(n, k, [&](const std::vector<std::size_t>& xs) { sum += chain_product(seq, n, k, k, xs); });
    return sum;
}

Scalar errata_fibonomial(std::size_t n, std::size_t k, const Sequence& seq) {
    require_zero_origin(seq);
    if (k > n) return Scalar{};
    if (k == 0) return Scalar(1L);
    Scalar sum;
    for_each_index_chain(n - 1, k - 1, [&](const std::vector<std::size_t>& xs) {
        const Scalar head = chain_product(seq, n, k, k - 1, xs);
        if (head.is_zero()) return;
        for (std::size_t xk = xs[k - 1] + 1; xk <= n; ++xk) sum += head * seq.term(n - xk);
    });
    return sum;
}

Scalar corrected_benjamin_plott(std::size_t n, std::size_t k, const Sequence& seq) {
    require_zero_origin(seq);
    if (k > n) return Scalar{};
    if (k == 0) return Scalar(1L);
    Scalar sum;
    for_each_index_chain(n - 1, k - 1, [&](const std::vector<std::size_t>& xs) {
        const std::size_t xk = xs[k - 1] + 1;
        sum += chain_product(seq, n, k, k - 1, xs) * seq.term(n - xk + 1);
    });
    return sum;
}

Scalar md_u_binomial(std::size_t n, std::size_t k, const Scalar& s_param, const Scalar& t_param) {
    if (k > n) return Scalar{};
    const Sequence u = Sequence::fundamental_u(s_param, t_param);
    Scalar sum;
    for_each_index_chain(n, k, [&](const std::vector<std::size_t>& xs) {
        const std::size_t weight = k == 0 ? 0 : xs[k] - k;
        sum += t_param.pow(static_cast<long>(weight)) * chain_product(u, n, k, k, xs);
    });
    return sum;
}

Scalar reduce_pq_minus_one(const Scalar& value) {
    return substitute(value, Assignment{{"q", Scalar(-1L) / Scalar::variable("p")}});
}

CarlitzResult carlitz_product(std::size_t n) {
    const Scalar p = Scalar::variable("p");
    const Scalar q = Scalar::variable("q");
    const Scalar x = Scalar::variable("x");
    Scalar lhs(1L);
    for (std::size_t j = 0; j <= n; ++j)
        lhs *= x - p.pow(static_cast<long>(j)) * q.pow(static_cast<long>(n - j));

    std::vector<Scalar> ustar;
    for (std::size_t m = 0; m <= n + 1; ++m) ustar.push_back(p.pow(static_cast<long>(m)) - q.pow(static_cast<long>(m)));
    const Sequence useq = Sequence::custom(ustar, "U*");
    Scalar rhs;
    for (std::size_t r = 0; r <= n + 1; ++r) {
        const long sign = ((r * (r + 1) / 2) % 2 == 0) ? 1 : -1;
        rhs += Scalar(sign) * f_binomial(useq, n + 1, r) * x.pow(static_cast<long>(n + 1 - r));
    }

    CarlitzResult result;
    result.lhs = lhs.num();
    result.rhs = rhs.num();
    const Scalar lr = reduce_pq_minus_one(lhs);
    const Scalar rr = reduce_pq_minus_one(rhs);
    const std::uint32_t shift = std::max(lr.den().total_degree(), rr.den().total_degree());
    const Scalar clear = p.pow(static_cast<long>(shift));
    result.lhs_reduced = (lr * clear).num();
    result.rhs_reduced = (rr * clear).num();
    result.equal = lr == rr;
    return result;
}

QStarResult qstar_transfer(std::size_t n, std::size_t k) {
    const Scalar p = Scalar::variable("p");
    const Scalar q = Scalar::variable("q");
    QStarResult result;
    result.pq_form = f_binomial(Sequence::fundamental_u_roots(p, q), n, k);
    const Scalar gaussian = f_binomial(Sequence::q_integers(q), n, k);
    const Scalar weight = k <= n ? q.pow(static_cast<long>(k * (n - k))) : Scalar(1L);
    result.transferred = weight * substitute(gaussian, Assignment{{"q", p / q}});
    result.equal = result.pq_form == result.transferred;
    return result;
}

}  // namespace horadam
