#include <doctest.h>

#include "generators.hpp"
#include "horadam/sequences/sequences.hpp"

using namespace horadam;

namespace {
Scalar P(const char* text) { return parse_scalar(text); }
HoradamSpec symbolic() { return HoradamSpec::make(P("a"), P("b"), P("s"), P("t")); }
const Assignment kToRoots{{"s", parse_scalar("p+q")}, {"t", parse_scalar("-p*q")}};
}  // namespace

TEST_CASE("horadam_term") {
    CHECK(horadam_term(HoradamSpec::make(0L, 1L, 1L, 1L), 6) == Scalar(8L));
    CHECK(horadam_term(symbolic(), 0) == P("a"));
    CHECK(horadam_term(symbolic(), 2) == P("a*t + b*s"));
}

TEST_CASE("lucas U and V") {
    CHECK(lucas_v(0, P("s"), P("t")) == Scalar(2L));
    CHECK(lucas_u(5, 1L, 1L) == Scalar(5L));
    CHECK(lucas_u_roots(3, P("p"), P("q")) == P("p^2 + p*q + q^2"));
    CHECK(lucas_u(4, P("s"), P("t")) == P("s^3 + 2*s*t"));
    for (std::size_t n = 0; n <= 16; ++n) {
        CHECK(substitute(lucas_u(n, P("s"), P("t")), kToRoots) == lucas_u_roots(n, P("p"), P("q")));
        CHECK(substitute(lucas_v(n, P("s"), P("t")), kToRoots) == lucas_v_roots(n, P("p"), P("q")));
    }
}

TEST_CASE("binet coefficients") {
    const auto u = binet_coeffs(HoradamSpec::from_roots(0L, 1L, P("p"), P("q")));
    CHECK(u.A == P("1/(p-q)"));
    CHECK(u.B == P("-1/(p-q)"));
    const auto v = binet_coeffs(HoradamSpec::from_roots(2L, P("p+q"), P("p"), P("q")));
    CHECK(v.A == Scalar(1L));
    CHECK(v.B == Scalar(1L));
    const auto spec = HoradamSpec::from_roots(1L, 0L, P("p"), P("q"));
    const auto w = binet_coeffs(spec);
    CHECK(w.A == P("-q/(p-q)"));
    CHECK(w.B == P("p/(p-q)"));
    CHECK(binet_term(spec, w, 2) == P("-p*q"));
    CHECK_THROWS_AS(binet_coeffs(HoradamSpec::from_roots(0L, 1L, 3L, 3L)), EqualRoots);
    CHECK_THROWS_AS(binet_coeffs(HoradamSpec::make(0L, 1L, 1L, 1L)), InvalidArgument);
    CHECK_THROWS_AS(HoradamSpec::make(0L, 1L, 1L, 1L).with_roots(2L, 3L), InvalidArgument);
}

TEST_CASE("property: Binet sweep over random integer roots") {
    testgen::Gen gen(0xb1e7);
    for (int trial = 0; trial < 40; ++trial) {
        const long p = gen.integer(-6, 6);
        long q = gen.integer(-6, 6);
        if (q == p) q = p + 1;
        const auto spec = HoradamSpec::from_roots(gen.integer(-9, 9), gen.integer(-9, 9), p, q);
        const auto c = binet_coeffs(spec);
        const auto egf = egf_coefficients(spec, 17);
        Integer fact(1);
        for (std::size_t n = 0; n <= 16; ++n) {
            if (n > 0) fact *= static_cast<unsigned long>(n);
            CHECK(binet_term(spec, c, n) == horadam_term(spec, n));
            CHECK(egf[n] * Scalar(fact) == binet_term(spec, c, n));
        }
    }
}

TEST_CASE("closed form with binomial sums") {
    const auto spec = symbolic();
    CHECK(horadam_binomial_sum(spec, 1) == P("b"));
    CHECK(horadam_binomial_sum(spec, 2) == P("a*t + b*s"));
    CHECK(horadam_binomial_sum(HoradamSpec::make(0L, 1L, 1L, 1L), 6) == Scalar(8L));
    for (std::size_t n = 0; n <= 12; ++n) CHECK(horadam_binomial_sum(spec, n) == horadam_term(spec, n));
    CHECK_THROWS_AS(horadam_binomial_sum(HoradamSpec::make(0L, 1L, 0L, 1L), 3), ZeroS);
}

TEST_CASE("ordinary generating function") {
    const auto fib = ogf_coefficients(HoradamSpec::make(0L, 1L, 1L, 1L), 7);
    const std::vector<long> expect{0, 1, 1, 2, 3, 5, 8};
    for (std::size_t i = 0; i < 7; ++i) CHECK(fib[i] == Scalar(expect[i]));
    const auto spec = symbolic();
    const auto c = ogf_coefficients(spec, 13);
    CHECK(c[0] == P("a"));
    CHECK(c[2] == P("a*t + b*s"));
    for (std::size_t n = 0; n <= 12; ++n) CHECK(c[n] == horadam_term(spec, n));
}

TEST_CASE("addition formulas in Z[p,q]") {
    const Scalar p = P("p"), q = P("q");
    const auto spec = HoradamSpec::from_roots(0L, 1L, p, q);
    const Scalar delta = spec.delta();
    CHECK(delta == P("(p-q)^2"));
    CHECK(HoradamSpec::make(0L, 1L, 1L, 1L).delta() == Scalar(5L));
    for (std::size_t r = 0; r <= 12; ++r)
        for (std::size_t s = 0; r + s <= 12; ++s) {
            const Scalar ur = lucas_u_roots(r, p, q), us = lucas_u_roots(s, p, q);
            const Scalar vr = lucas_v_roots(r, p, q), vs = lucas_v_roots(s, p, q);
            CHECK(Scalar(2L) * lucas_u_roots(r + s, p, q) == ur * vs + us * vr);
            CHECK(Scalar(2L) * lucas_v_roots(r + s, p, q) == vr * vs + delta * us * ur);
        }
}

TEST_CASE("N(alpha) and q-integers") {
    const std::vector<long> n2{0, 1, 4, 12, 32, 80};
    for (std::size_t i = 0; i < n2.size(); ++i) CHECK(n_alpha_term(2, i) == n2[i]);
    CHECK(n_alpha_term(1, 7) == 7);
    CHECK(n_alpha_term(3, 3) == 27);
    const auto seq = Sequence::n_alpha(3);
    for (std::size_t i = 0; i <= 10; ++i) CHECK(seq.term(i) == Scalar(n_alpha_term(3, i)));
    CHECK(q_integer(0).is_zero());
    CHECK(Scalar(q_integer(3)) == P("1 + q + q^2"));
    CHECK(substitute(q_integer(4), Assignment{{"q", 2L}}) == Scalar(15L));
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(substitute(lucas_u_roots(n, P("p"), P("q")), Assignment{{"p", 1L}}) == Scalar(q_integer(n)));
}

TEST_CASE("sequence presets and handles") {
    CHECK(sequence_preset("fibonacci").term(10) == Scalar(55L));
    CHECK(sequence_preset("lucas").term(4) == Scalar(7L));
    CHECK(sequence_preset("pell").term(5) == Scalar(29L));
    CHECK(sequence_preset("naturals").term(9) == Scalar(9L));
    CHECK(sequence_preset("gauss:2").term(4) == Scalar(15L));
    CHECK(sequence_preset("gauss").term(3) == P("1+q+q^2"));
    CHECK(sequence_preset("nalpha:2").term(5) == Scalar(80L));
    CHECK(sequence_preset("horadam:a,b,s,t").term(2) == P("a*t+b*s"));
    CHECK(sequence_preset("Uroots:p,q").term(3) == P("p^2+p*q+q^2"));
    CHECK(sequence_preset("Vroots:p,q").term(2) == P("p^2+q^2"));
    CHECK(sequence_preset("V:s,t").term(2) == P("s^2+2*t"));
    CHECK(sequence_preset("fibpoly:x").term(3) == P("x^2+1"));
    const auto c = sequence_preset("custom:0,1,0,5");
    CHECK(c.term(3) == Scalar(5L));
    CHECK_THROWS_AS(c.term(4), InvalidArgument);
    CHECK_THROWS_AS(sequence_preset("bogus"), InvalidArgument);
    CHECK_THROWS_AS(sequence_preset("U:1"), InvalidArgument);
    CHECK_THROWS_AS(sequence_preset("U:1,)"), ParseError);
    const auto copy = c;
    CHECK(copy.label() == c.label());
}
