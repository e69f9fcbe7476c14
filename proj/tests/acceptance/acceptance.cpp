// Acceptance run: one line per criterion with its measured time and budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "horadam/binomials/binomials.hpp"
#include "horadam/closed_forms/closed_forms.hpp"
#include "horadam/cobweb/cobweb.hpp"
#include "horadam/oracles/oracles.hpp"
#include "horadam/sequences/sequences.hpp"

using namespace horadam;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && pass) {
            pass = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> body;
};

Scalar P(const char* text) { return parse_scalar(text); }

Outcome counterexample() {
    Outcome o;
    const auto fib = sequence_preset("fibonacci");
    o.require(errata_fibonomial(5, 3, fib) == Scalar(11L), "erratum formula at (5,3) is not 11");
    o.require(f_binomial(fib, 5, 3) == Scalar(15L), "factorial definition at (5,3) is not 15");
    o.require(md_fibonomial(5, 3, fib) == Scalar(15L), "chain-sum formula at (5,3) is not 15");
    o.require(corrected_benjamin_plott(5, 3, fib) == Scalar(15L), "corrected formula at (5,3) is not 15");
    o.detail = o.pass ? "erratum 11, definition = chain sum = corrected = 15" : o.detail;
    return o;
}

Outcome scheme_sweep() {
    Outcome o;
    const SchemeName schemes[] = {SchemeName::Husun,        SchemeName::HoggattA,  SchemeName::HoggattB,
                                  SchemeName::LucasDoubled, SchemeName::FonteneA, SchemeName::FonteneB};
    std::size_t cells = 0;
    for (const char* name : {"fibonacci", "pell"}) {
        const auto seq = sequence_preset(name);
        for (auto scheme : schemes) {
            const auto rep = verify_scheme(scheme, seq, 12);
            o.require(!rep.error && rep.all_pass(), std::string(scheme_id(scheme)) + " on " + name);
            cells += rep.cells.size();
        }
    }
    if (o.pass) o.detail = std::to_string(cells) + " cells agree across 6 schemes x {fibonacci, pell}";
    return o;
}

Outcome symbolic_corcino() {
    Outcome o;
    const auto roots = sequence_preset("Uroots:p,q");
    for (auto scheme : {SchemeName::CorcinoA, SchemeName::CorcinoB}) {
        const auto rep = verify_scheme(scheme, roots, 10);
        o.require(!rep.error && rep.all_pass(), std::string(scheme_id(scheme)) + " fill in Z[p,q]");
        for (std::size_t r = 1; r < 10; ++r)
            for (std::size_t s = 1; r + s <= 10; ++s)
                o.require(scheme_identity_holds(scheme, roots, r, s), std::string(scheme_id(scheme)) + " step identity");
    }
    const Scalar p = P("p"), q = P("q");
    for (long r = 0; r <= 10; ++r)
        for (long s = 0; r + s <= 10; ++s) {
            const Scalar diff = p.pow(r + s) - q.pow(r + s) - (p.pow(s) * (p.pow(r) - q.pow(r)) + q.pow(r) * (p.pow(s) - q.pow(s)));
            o.require(diff.is_zero(), "root-power splitting identity");
        }
    if (o.pass) o.detail = "both pairings hold as identities for n <= 10; splitting identity normalizes to 0";
    return o;
}

Outcome mixed() {
    Outcome o;
    const auto fib = sequence_preset("fibonacci");
    for (auto scheme : {SchemeName::Mixed2b, SchemeName::MixedDoubled}) {
        const auto rep = verify_scheme(scheme, fib, 12);
        o.require(!rep.error && rep.all_pass(), std::string(scheme_id(scheme)) + " at s = t = 1");
    }
    o.require(fib.spec()->delta() == Scalar(5L), "discriminant is not 5");
    o.require(mixed_binomial(2, 1, 1L, 1L) == Scalar(4L), "mixed(2,1) is not 4");
    if (o.pass) o.detail = "recurrence and doubled fills match the definition for n <= 12; delta = 5; mixed(2,1) = 4";
    return o;
}

Outcome gaussian_triple() {
    Outcome o;
    const auto gauss = sequence_preset("gauss");
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const auto dist = gaussian_by_paths(n, k);
            o.require(f_binomial(gauss, n, k) == Scalar(dist.polynomial("q")), "path area polynomial");
            o.require(inversions_equal_area(n, k), "inversion statistic");
        }
    const Scalar g42 = f_binomial(gauss, 4, 2);
    o.require(g42 == P("1 + q + 2*q^2 + q^3 + q^4"), "(4,2) polynomial");
    const Scalar at2 = substitute(g42, Assignment{{"q", 2L}});
    o.require(at2 == Scalar(35L), "(4,2) at q = 2 is not 35");
    o.require(count_subspaces(4, 2, 2) == 35, "GF(2) subspace count is not 35");
    if (o.pass) o.detail = "factorial = path area = inversions for n <= 8; (4,2) -> 35 = subspaces of GF(2)^4";
    return o;
}

Outcome tilings() {
    Outcome o;
    const std::pair<long, long> grid[] = {{1, 1}, {2, 1}, {1, 2}, {3, 2}};
    for (const auto& [s, t] : grid)
        for (std::size_t n = 0; n <= 10; ++n) {
            o.require(count_linear_tilings(n, s, t) == lucas_u(n + 1, s, t), "linear tilings at n = " + std::to_string(n));
            if (n >= 1) o.require(count_bracelets(n, s, t) == lucas_v(n, s, t), "bracelets at n = " + std::to_string(n));
        }
    if (o.pass) o.detail = "linear = U_(n+1), bracelets = V_n for n <= 10 on 4 (s,t) points";
    return o;
}

Outcome qstar() {
    Outcome o;
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            o.require(qstar_transfer(n, k).equal, "transfer at (" + std::to_string(n) + "," + std::to_string(k) + ")");
    if (o.pass) o.detail = "45 cells hold in the fraction field of Z[p,q]";
    return o;
}

Outcome carlitz() {
    Outcome o;
    for (std::size_t n = 0; n <= 5; ++n) o.require(carlitz_product(n).equal, "product identity at n = " + std::to_string(n));
    const auto one = carlitz_product(1);
    const Scalar target = reduce_pq_minus_one(P("x^2 - (p+q)*x - 1"));
    o.require(reduce_pq_minus_one(Scalar(one.lhs)) == target, "n = 1 product side");
    o.require(reduce_pq_minus_one(Scalar(one.rhs)) == target, "n = 1 sum side");
    o.require(Scalar(one.rhs) == P("x^2 - (p+q)*x - 1"), "n = 1 sum side before reduction");
    if (o.pass) o.detail = "holds under pq = -1 for n <= 5; n = 1 sides normalize to x^2 - (p+q)x - 1";
    return o;
}

Outcome graphs() {
    Outcome o;
    const long expected[] = {1, 2, 6, 26, 162};
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto g = count_two_colored_graphs(n);
        o.require(g.direct == expected[n] && g.formula == expected[n] && g.row_sum == expected[n],
                  "graph counts at n = " + std::to_string(n));
        o.require(gamma_alpha(n, 2, 2) == expected[n], "gamma at n = " + std::to_string(n));
    }
    const std::vector<std::vector<long>> listed{
        {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
        {0, 1, 4, 12, 32, 80, 192, 448, 1024, 2304, 5120},
        {0, 1, 6, 27, 108, 405, 1458, 5103, 17496, 59049, 196830},
        {0, 1, 8, 48, 256, 1280, 6144, 28672, 131072, 589824, 2621440},
    };
    for (std::size_t a = 0; a < listed.size(); ++a) {
        const auto seq = Sequence::n_alpha(static_cast<long>(a + 1));
        for (std::size_t i = 0; i <= 10; ++i)
            o.require(seq.term(i) == Scalar(listed[a][i]), "N(" + std::to_string(a + 1) + ") term " + std::to_string(i));
    }
    if (o.pass) o.detail = "2, 6, 26, 162 three ways; N(1)..N(4) match through index 10";
    return o;
}

Outcome cobweb() {
    Outcome o;
    for (const char* name : {"naturals", "fibonacci", "gauss:2"}) {
        const auto F = sequence_preset(name);
        for (std::size_t n = 0; n <= 6; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                o.require(verify_counting_identity(F, k, n).holds, std::string("counting identity for ") + name);
    }
    o.require(layer_chain_count(make_layer(sequence_preset("fibonacci"), 3, 4)) == 6, "fibonacci layer chain count");
    o.require(layer_chain_count(make_layer(sequence_preset("naturals"), 2, 4)) == 24, "naturals layer chain count");
    const auto nat = sequence_preset("naturals");
    std::size_t searches = 0;
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = m; n <= 6; ++n) {
            const auto result = box_tiling_search(nat, m, n);
            const bool ok = result.status == TilingStatus::Found && validate_partition(nat, m, n, *result.partition);
            o.require(ok, "naturals tiling at m = " + std::to_string(m) + ", n = " + std::to_string(n) + " (" +
                              tiling_status_name(result.status) + ")");
            ++searches;
        }
    if (o.pass)
        o.detail = "identity for k <= n <= 6 on 3 sequences; chain counts 6 and 24; " + std::to_string(searches) +
                   " naturals tilings found and validated (m <= 3, n <= 6)";
    return o;
}

Outcome foundations() {
    Outcome o;
    const auto general = HoradamSpec::make(P("a"), P("b"), P("s"), P("t"));
    const auto terms = horadam_terms(general, 13);
    const auto ogf = ogf_coefficients(general, 13);
    for (std::size_t n = 0; n <= 12; ++n) {
        o.require(horadam_binomial_sum(general, n) == terms[n], "binomial-sum closed form at n = " + std::to_string(n));
        o.require(ogf[n] == terms[n], "generating-function coefficient at n = " + std::to_string(n));
    }
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> pick(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const long p = pick(rng);
        long q = pick(rng);
        if (q == p) q = p + 1;
        const auto spec = HoradamSpec::from_roots(pick(rng), pick(rng), p, q);
        const auto coeffs = binet_coeffs(spec);
        for (std::size_t n = 0; n <= 12; ++n)
            o.require(binet_term(spec, coeffs, n) == horadam_term(spec, n), "Binet form with integer roots");
    }
    const Scalar p = P("p"), q = P("q");
    const Scalar delta = HoradamSpec::from_roots(0L, 1L, p, q).delta();
    for (std::size_t r = 0; r <= 12; ++r)
        for (std::size_t s = 0; r + s <= 12; ++s) {
            const Scalar ur = lucas_u_roots(r, p, q), us = lucas_u_roots(s, p, q);
            const Scalar vr = lucas_v_roots(r, p, q), vs = lucas_v_roots(s, p, q);
            o.require(Scalar(2L) * lucas_u_roots(r + s, p, q) == ur * vs + us * vr, "U addition formula");
            o.require(Scalar(2L) * lucas_v_roots(r + s, p, q) == vr * vs + delta * ur * us, "V addition formula");
        }
    if (o.pass) o.detail = "closed form and OGF symbolic to n = 12; 200 Binet samples; addition formulas to r+s = 12";
    return o;
}

Outcome integrality() {
    Outcome o;
    int integral = 0;
    int degenerate = 0;
    for (long s = -3; s <= 3; ++s)
        for (long t = -3; t <= 3; ++t) {
            const auto seq = Sequence::fundamental_u(s, t);
            bool zero = false;
            for (std::size_t i = 1; i <= 12; ++i) zero = zero || seq.term(i).is_zero();
            if (zero) {
                bool raised = false;
                try {
                    factorial_table(seq, 12);
                } catch (const ZeroTerm&) {
                    raised = true;
                }
                o.require(raised, "missing ZeroTerm at (" + std::to_string(s) + "," + std::to_string(t) + ")");
                ++degenerate;
                continue;
            }
            o.require(factorial_table(seq, 12).all_integer(),
                      "non-integer entry at (" + std::to_string(s) + "," + std::to_string(t) + ")");
            ++integral;
        }
    if (o.pass)
        o.detail = std::to_string(integral) + " parameter pairs integral, " + std::to_string(degenerate) +
                   " degenerate pairs raise ZeroTerm";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "counterexample reproduction", 0.1, counterexample},
        {2, "scheme equivalence sweep", 2, scheme_sweep},
        {3, "symbolic Corcino pairings", 5, symbolic_corcino},
        {4, "mixed V/U binomials", 2, mixed},
        {5, "Gaussian triple agreement", 5, gaussian_triple},
        {6, "tiling oracles", 10, tilings},
        {7, "q* transfer", 5, qstar},
        {8, "Carlitz product identity", 2, carlitz},
        {9, "two-colored graphs and N(alpha)", 10, graphs},
        {10, "cobweb counting and tilings", 30, cobweb},
        {11, "foundations", 5, foundations},
        {12, "integrality of U-binomials", 5, integrality},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = elapsed < c.budget_seconds;
        const bool ok = o.pass && in_budget;
        if (!ok) ++failed;
        std::printf("[%s] %2d %-34s %8.4f s (budget %g s)%s  %s\n", ok ? "PASS" : "FAIL", c.id, c.title, elapsed,
                    c.budget_seconds, in_budget ? "" : " OVER BUDGET", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
