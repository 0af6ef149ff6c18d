#include <doctest.h>

#include <random>

#include "errc_check.hpp"
#include "ffgcd/fqpoly.hpp"
#include "ffgcd/irreducibles.hpp"
#include "naive.hpp"

using namespace ffgcd;

namespace {
Poly P(const char* s, const Field& F) { return parse_poly(s, F); }
}  // namespace

TEST_CASE("basic arithmetic") {
    auto F3 = make_field(3, 1);
    auto F2 = make_field(2, 1);
    Poly f = P("T^2+2*T+1", F3);
    CHECK(f * Poly::one(F3) == f);
    CHECK(format_poly(P("T+1", F3) * P("T+2", F3)) == "T^2+2");
    auto dr = divrem(P("T^3+T+1", F2), P("T+1", F2));
    CHECK(format_poly(dr.quotient) == "T^2+T");
    CHECK(format_poly(dr.remainder) == "1");
    CHECK_ERRC(f / Poly(F3), Errc::DivisionByZero);
    CHECK_ERRC(f + P("T", F2), Errc::MixedContexts);
}

TEST_CASE("gcd and lcm") {
    auto F3 = make_field(3, 1);
    auto F2 = make_field(2, 1);
    Poly f = P("2*T^2+T", F3);
    CHECK(poly_gcd(f, Poly(F3)) == monic(f));
    CHECK(format_poly(poly_gcd(P("T^2+2", F3), P("T^2+T", F3))) == "T+1");
    CHECK(poly_lcm(f, f) == monic(f));
    CHECK(format_poly(poly_lcm(P("T", F3), P("T+1", F3))) == "T^2+T");
    Poly l = poly_lcm(P("T^2+T", F2), P("T^2+1", F2));
    CHECK(format_poly(l) == "T^3+T");
    CHECK(divides(P("T^2+T", F2), l));
    CHECK(divides(P("T^2+1", F2), l));
    CHECK_ERRC(poly_gcd(Poly(F3), Poly(F3)), Errc::BothZero);
    CHECK_ERRC(poly_lcm(f, Poly(F3)), Errc::ZeroInput);
}

TEST_CASE("powmod and pow_sub1") {
    auto F2 = make_field(2, 1);
    auto F3 = make_field(3, 1);
    CHECK(poly_powmod(P("T^2+T", F2), 0, P("T^3+T+1", F2)).is_one());
    CHECK(poly_powmod(P("T", F2), 7, P("T^3+T+1", F2)).is_one());
    for (const auto& pi : enumerate_irreducibles(F3, 4)) {
        if (pi == P("T+1", F3)) continue;
        CHECK(poly_powmod(P("T+1", F3), 80, pi).is_one());
    }
    CHECK(format_poly(poly_pow_sub1(P("T", F3), 5)) == "T^5+2");
    CHECK(format_poly(poly_pow_sub1(P("T+1", F2), 3)) == "T^3+T^2+T");
    CHECK_ERRC(poly_powmod(P("T", F2), 3, Poly::one(F2)), Errc::ConstantModulus);
    try {
        poly_pow_sub1(P("T^2+1", F3), 20000, 1000);
        FAIL("expected DegreeCapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeCapExceeded);
        REQUIRE(e.required_degree());
        CHECK(*e.required_degree() == 40000);
    }
}

TEST_CASE("derivative, evaluate, compose") {
    auto F3 = make_field(3, 1);
    auto F2 = make_field(2, 1);
    CHECK(derivative(Poly::constant(F3, 2)).is_zero());
    CHECK(format_poly(derivative(P("T^3+T", F3))) == "1");
    CHECK(derivative(poly_pow_sub1(P("T", F2), 24)).is_zero());
    CHECK(evaluate(P("T^2+1", F3), 2) == 2);
    CHECK(format_poly(compose(P("T^2", F3), P("T+1", F3))) == "T^2+2*T+1");
}

TEST_CASE("lifting") {
    auto F2 = make_field(2, 1);
    auto F4 = make_field(2, 2);
    auto F16 = make_field(2, 4);
    auto e = make_embedding(F2, F4);
    CHECK(format_poly(lift_poly(P("T", F2), e)) == "T");
    CHECK(format_poly(lift_poly(P("T^2+T+1", F2), e)) == "T^2+T+1");
    auto e2 = make_embedding(F4, F16);
    CHECK(lift_poly(P("T+g", F4), e2)[0] == e2.image_of_generator());
    CHECK_ERRC(lift_poly(P("T", F16), e2), Errc::ContextMismatch);
}

TEST_CASE("parsing and formatting") {
    auto F5 = make_field(5, 1);
    auto F4 = make_field(2, 2);
    CHECK(P("0", F5).is_zero());
    CHECK(P("T^3+2*T+1", F5).coeffs() == std::vector<Elem>{1, 2, 0, 1});
    Poly h = P("(g+1)*T+g", F4);
    CHECK(h.degree() == 1);
    CHECK(h[1] == 3);
    CHECK(h[0] == 2);
    CHECK(format_poly(h) == "(g+1)*T+g");
    CHECK(format_poly(P("1*T^2+0*T+3", F5)) == "T^2+3");
    for (const char* s : {"T^4+(g+1)*T^2+g*T+1", "g*T", "T+(g+1)", "1", "T^7"}) {
        Poly f = P(s, F4);
        CHECK(P(format_poly(f).c_str(), F4) == f);
    }
    CHECK_ERRC(P("T^2+", F5), Errc::SyntaxError);
    CHECK_ERRC(P("T^2-1", F5), Errc::SyntaxError);
    CHECK_ERRC(P("7*T", F5), Errc::CoefficientOutOfRange);
    CHECK_ERRC(P("g*T", F5), Errc::SyntaxError);
}

TEST_CASE("agreement with naive arithmetic") {
    std::mt19937_64 rng(17);
    for (long p : {2L, 3L, 5L, 7L, 65521L}) {
        auto F = make_field(static_cast<u64>(p), 1);
        for (int t = 0; t < 60; ++t) {
            auto f = naive::random_poly(rng, p, static_cast<int>(rng() % 40), false);
            auto g = naive::random_poly(rng, p, 1 + static_cast<int>(rng() % 20), true);
            Poly pf = naive::to_poly(f, F), pg = naive::to_poly(g, F);
            CHECK(naive::from_poly(pf * pg) == naive::mul(f, g, p));
            CHECK(naive::from_poly(pf + pg) == naive::add(f, g, p));
            auto [q, r] = naive::divrem(f, g, p);
            auto dr = divrem(pf, pg);
            CHECK(naive::from_poly(dr.quotient) == q);
            CHECK(naive::from_poly(dr.remainder) == r);
            if (!f.empty()) CHECK(naive::from_poly(poly_gcd(pf, pg)) == naive::gcd(f, g, p));
        }
    }
}

TEST_CASE("ring identities over extension fields") {
    std::mt19937_64 rng(5);
    auto F = make_field(3, 2);
    auto rnd = [&](int d) {
        std::vector<Elem> c(d + 1);
        for (auto& x : c) x = rng() % 9;
        return Poly(F, c);
    };
    for (int t = 0; t < 50; ++t) {
        Poly a = rnd(7), b = rnd(5), c = rnd(3);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (b.is_zero()) continue;
        auto dr = divrem(a, b);
        CHECK(dr.quotient * b + dr.remainder == a);
        CHECK(dr.remainder.degree() < b.degree());
        if (!b.is_constant()) {
            CHECK(poly_powmod(a, 13, b) == poly_pow(a, 13) % b);
        }
    }
}

TEST_CASE("gcd is stable under base change") {
    std::mt19937_64 rng(9);
    auto F2 = make_field(2, 1), F4 = make_field(2, 2), F16 = make_field(2, 4);
    for (auto [src, dst] : {std::pair{F2, F4}, std::pair{F4, F16}}) {
        auto e = make_embedding(src, dst);
        for (int t = 0; t < 30; ++t) {
            std::vector<Elem> a(6), b(5);
            for (auto& x : a) x = rng() % src->q();
            for (auto& x : b) x = rng() % src->q();
            Poly f(src, a), g(src, b);
            if (f.is_zero() && g.is_zero()) continue;
            Poly d = poly_gcd(f, g);
            CHECK(d.degree() == poly_gcd(lift_poly(f, e), lift_poly(g, e)).degree());
            CHECK(lift_poly(d, e) == poly_gcd(lift_poly(f, e), lift_poly(g, e)));
        }
    }
}
