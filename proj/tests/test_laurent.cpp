#include <doctest.h>

#include "fgva/laurent.hpp"
#include "fgva/literal.hpp"
#include "helpers.hpp"

using namespace fgva;
using namespace fgva::testutil;

namespace {
LaurentSeries L(const char* text) { return parse_laurent(text); }
}

TEST_CASE("ring arithmetic basics") {
    CHECK(L("1+x") * L("1-x") == L("1 - x^2"));
    CHECK(L("x") * L("x^-1") == L("1"));
    CHECK(L("x") + L("0") == L("x"));
    CHECK((L("2*x^3") - L("2*x^3")).is_zero());
}

TEST_CASE("division and inverse") {
    // x / (1-x) truncated: geometric tail
    LaurentSeries g = L("x") / L("1 - x + O(x^6)");
    for (int e = 1; e < 7; ++e) CHECK(g.coeff(e) == 1);
    CHECK(g.order() == 7);
    CHECK_THROWS_AS(L("0 + O(x^4)").inverse(), DivisionByIndeterminate);
    // unit Laurent inverse
    LaurentSeries inv = L("x^-1 + 1 + O(x^5)").inverse();
    CHECK((inv * L("x^-1 + 1 + O(x^5)")).coeff(0) == 1);
}

TEST_CASE("derivative of log(1+x) times (1+x) is 1") {
    // oracle: the explicit termwise expansion sum (-1)^(n-1) x^n / n, differentiated
    const int N = 12;
    std::map<int, Rat> c;
    for (int n = 1; n <= N; ++n) c[n] = Rat((n % 2 == 1) ? 1 : -1, n);
    LaurentSeries lg = LaurentSeries::from_coeffs(std::move(c), N + 1);
    LaurentSeries lhs = lg.derivative() * L("1+x");
    for (int e = 0; e < N - 1; ++e) CHECK(lhs.coeff(e) == (e == 0 ? 1 : 0));
}

TEST_CASE("calculus examples") {
    CHECK(L("x^2").derivative() == L("2*x"));
    CHECK(L("x^-1").derivative() == L("-1*x^-2"));
    CHECK_THROWS_AS(L("x^-1").integral(), ResidueObstruction);
    // integral of 1/(1+x) is log(1+x)
    LaurentSeries inv = L("1").truncated(9) / L("1 + x + O(x^9)");
    CHECK(inv.integral() == log1p_series(10));
}

TEST_CASE("exp and log") {
    CHECK(L("0").exp_series() == L("1"));
    LaurentSeries lg = log1p_series(8);
    CHECK(lg.coeff(1) == 1);
    CHECK(lg.coeff(2) == Rat(-1, 2));
    CHECK(lg.coeff(3) == Rat(1, 3));
    CHECK(lg.coeff(4) == Rat(-1, 4));
    CHECK(L("1 + x + O(x^8)").log_series() == lg);
    for (int n = 4; n <= 20; n += 8) {
        LaurentSeries roundtrip = log1p_series(n).exp_series();
        CHECK(roundtrip == L("1 + x").truncated(n));
    }
    CHECK_THROWS_AS(L("1 + x").exp_series(), DomainViolation);
    CHECK_THROWS_AS(L("2 + x + O(x^5)").log_series(), DomainViolation);
}

TEST_CASE("composition examples") {
    GSeries em1(expm1_series(8));
    CHECK(log1p_series(8).compose(em1.series()) == L("x + O(x^8)"));
    // identity composition (exact identity preserves the input)
    LaurentSeries any = L("x^-2 + 3*x + O(x^6)");
    CHECK(any.compose(L("x")) == any);
    // a truncated identity honestly degrades negative-power terms
    CHECK(any.compose(L("x").truncated(8)) == any.truncated(5));
    // h = x^-1, g = x/(1-x): result times g is 1
    LaurentSeries g = L("x") / L("1 - x + O(x^8)");
    LaurentSeries h = L("x^-1");
    LaurentSeries got = h.compose(g);
    CHECK(got.coeff(-1) == 1);
    CHECK(got.coeff(0) == -1);
    LaurentSeries prod = got * g;
    for (int e = 0; e < prod.order(); ++e) CHECK(prod.coeff(e) == (e == 0 ? 1 : 0));
}

TEST_CASE("double-sum oracle for log(exp(x)-1+1)") {
    // independent oracle: sum_n (-1)^(n-1)/n * (e^x - 1)^n via dense convolution
    const size_t N = 8;
    std::vector<Rat> em1(N, Rat(0));
    Rat fact = 1;
    for (size_t n = 1; n < N; ++n) {
        fact *= static_cast<long long>(n);
        em1[n] = Rat(1) / fact;
    }
    std::vector<Rat> pw(N, Rat(0));
    pw[0] = 1;
    std::vector<Rat> acc(N, Rat(0));
    for (int n = 1; n < static_cast<int>(N); ++n) {
        pw = polymul(pw, em1, N);
        Rat coef = Rat((n % 2 == 1) ? 1 : -1, n);
        for (size_t e = 0; e < N; ++e) acc[e] += coef * pw[e];
    }
    LaurentSeries got = log1p_series(N).compose(GSeries(expm1_series(N)).series());
    for (size_t e = 0; e < N; ++e) {
        CHECK(got.coeff(static_cast<int>(e)) == acc[e]);
        CHECK(acc[e] == (e == 1 ? 1 : 0));
    }
}

TEST_CASE("reversion") {
    GSeries id{L("x").truncated(10)};
    CHECK(id.reversion(10).series() == L("x").truncated(10));
    CHECK(GSeries(log1p_series(10)).reversion(10).series() == expm1_series(10));
    // g = x/(1-x) reverts to x/(1+x)
    GSeries g{L("x") / L("1 - x + O(x^10)")};
    LaurentSeries expect = L("x") / L("1 + x + O(x^10)");
    CHECK(g.reversion(10).series() == expect.truncated(10));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(20260810);
    for (int it = 0; it < 40; ++it) {
        LaurentSeries a = random_laurent(rng, -3, 7);
        LaurentSeries b = random_laurent(rng, -3, 7);
        LaurentSeries c = random_laurent(rng, -2, 7);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("group law of G(Q[[x]]) at order 12") {
    std::mt19937_64 rng(7);
    const int N = 12;
    LaurentSeries id = L("x").truncated(N);
    for (int it = 0; it < 15; ++it) {
        GSeries g = random_gseries(rng, N);
        GSeries h = random_gseries(rng, N);
        GSeries k = random_gseries(rng, N);
        CHECK(g.compose(h).compose(k).series() == g.compose(h.compose(k)).series());
        CHECK(g.compose(GSeries(id)).series() == g.series());
        CHECK(GSeries(id).compose(g).series() == g.series());
        GSeries gi = g.reversion(N);
        CHECK(g.compose(gi).series() == id);
        CHECK(gi.compose(g).series() == id);
    }
}

TEST_CASE("composition is an automorphism of the Laurent field") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 15; ++it) {
        GSeries g = random_gseries(rng, 10);
        LaurentSeries h1 = random_laurent(rng, -2, 6);
        LaurentSeries h2 = random_laurent(rng, -2, 6);
        LaurentSeries lhs = (h1 * h2).compose(g.series());
        LaurentSeries rhs = h1.compose(g.series()) * h2.compose(g.series());
        CHECK(agree_mod(lhs, rhs, std::min(lhs.order(), rhs.order())));
        LaurentSeries ls = (h1 + h2).compose(g.series());
        CHECK(agree_mod(ls, h1.compose(g.series()) + h2.compose(g.series()), ls.order()));
    }
}

TEST_CASE("precision honesty: higher order never changes reported coefficients") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 10; ++it) {
        std::map<int, Rat> cs;
        for (int e = -2; e < 12; ++e) cs[e] = random_rat(rng);
        std::map<int, Rat> gs{{1, Rat(1)}};
        for (int e = 2; e < 14; ++e) gs[e] = random_rat(rng);
        for (int N : {6, 8}) {
            LaurentSeries hN = LaurentSeries::from_coeffs(cs, N);
            LaurentSeries h2 = LaurentSeries::from_coeffs(cs, N + 2);
            LaurentSeries gN = LaurentSeries::from_coeffs(gs, N);
            LaurentSeries g2 = LaurentSeries::from_coeffs(gs, N + 2);
            LaurentSeries r1 = hN.compose(gN);
            LaurentSeries r2 = h2.compose(g2);
            CHECK(agree_mod(r1, r2, r1.order()));
            CHECK(agree_mod(hN * gN, h2 * g2, (hN * gN).order()));
        }
    }
}

TEST_CASE("literal parse/print round trip") {
    for (const char* text : {"x + 1/3*x^3 + 1/5*x^5 + O(x^7)", "0", "-2/7", "x^-2 - x + 4",
                             "1 - 1/2*x^2 + O(x^9)", "0 + O(x^5)"}) {
        LaurentSeries s = parse_laurent(text);
        CHECK(parse_laurent(s.str()) == s);
    }
    std::mt19937_64 rng(11);
    for (int it = 0; it < 25; ++it) {
        LaurentSeries s = random_laurent(rng, -4, 9);
        CHECK(parse_laurent(s.str()) == s);
    }
    CHECK_THROWS_AS(parse_laurent("x + + x"), ParseError);
    CHECK_THROWS_AS(parse_laurent("1/0"), ParseError);
}
