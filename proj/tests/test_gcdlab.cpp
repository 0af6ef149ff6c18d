#include <doctest.h>

#include <numeric>
#include <random>

#include "errc_check.hpp"
#include "ffgcd/gcdlab.hpp"
#include "naive.hpp"

using namespace ffgcd;

namespace {
Poly P(const char* s, const Field& F) { return parse_poly(s, F); }
}  // namespace

TEST_CASE("plans") {
    auto a = plan_exponents(5, 1, 4);
    CHECK(a.r == 1);
    CHECK(a.Q == BigInt(5));
    for (unsigned N = 1; N <= 4; ++N) CHECK(a.exponent(N) == big_pow(5, N) - 1);

    auto b = plan_exponents(3, 1, 1);
    CHECK(b.r == 5);
    CHECK(b.phi_r == 4);
    CHECK(b.Q == BigInt(81));

    auto c = plan_exponents(4, 1, 1);
    CHECK(c.r == 3);
    CHECK(c.Q == BigInt(16));
    CHECK(c.exponent(2) == 85);
    CHECK(c.exponent(3) == 1365);

    auto d = plan_exponents(3, 1, 2);
    CHECK(d.r == 1);
    CHECK(d.Q == BigInt(3));
    CHECK(d.exponent(4) == 80);

    auto e = plan_exponents(3, 2, 6);
    CHECK(e.p_power_i == 1);
    CHECK(e.n1 == 2);
    CHECK(e.p_power() == 3);

    CHECK_ERRC(plan_exponents(4, 1, 4), Errc::N0NotReduced);
    CHECK_ERRC(plan_exponents(4, 1, 0), Errc::N0NotReduced);
    CHECK_ERRC(plan_exponents(6, 1, 1), Errc::NotAPrimePower);
}

TEST_CASE("plan congruence") {
    for (u64 q : {2, 3, 4, 5, 7, 8, 9}) {
        for (unsigned k = 1; k <= 2; ++k) {
            u64 qk = 1;
            for (unsigned i = 0; i < k; ++i) qk *= q;
            for (u64 n0 = 1; n0 < qk; ++n0) {
                auto plan = plan_exponents(q, k, n0);
                CHECK(plan.r % 2 == 1);
                for (unsigned N = 1; N <= 5; ++N) {
                    BigInt n = plan.exponent(N);
                    CHECK(n % qk == n0);
                    CHECK(n > 0);
                }
            }
        }
    }
}

TEST_CASE("large Q is reported, not refused") {
    auto plan = plan_exponents(7, 2, 5, u64{1} << 20);
    CHECK_FALSE(plan.feasible);
    CHECK_FALSE(plan.q_text().empty());
    auto F = make_field(7, 1);
    CHECK_ERRC(witness_certificate(P("T", F), P("T+1", F), plan, 1), Errc::InfeasiblePlan);
    CHECK(lower_bound_constant_symbolic(plan, P("T", F), P("T+1", F)).find("Phi_Q(T^2+T)") != std::string::npos);
}

TEST_CASE("direct degrees") {
    auto F5 = make_field(5, 1);
    auto F3 = make_field(3, 1);
    CHECK(gcd_degree_direct(P("T", F5), P("T+1", F5), 24) == 23);
    CHECK(gcd_degree_direct(P("T^2+1", F5), P("T^2+1", F5), 7) == 14);
    CHECK(gcd_degree_direct(P("T", F3), P("T+1", F3), 80) == 79);
    CHECK(gcd_degree_direct(P("T", F3), P("T+1", F3), 240) == 3 * 79);
    CHECK_ERRC(gcd_degree_direct(P("2*T", F3), P("T+1", F3), 3), Errc::NotMonic);
    CHECK_ERRC(gcd_degree_direct(P("1", F3), P("T+1", F3), 3), Errc::Constant);
    CHECK_ERRC(gcd_degree_direct(P("T", F3), P("T", F5), 3), Errc::MixedContexts);
    CHECK_ERRC(gcd_degree_direct(P("T", F3), P("T+1", F3), 100000), Errc::DegreeCapExceeded);
}

TEST_CASE("direct degree against naive expansion") {
    std::mt19937_64 rng(21);
    for (long p : {2L, 3L, 5L}) {
        auto F = make_field(static_cast<u64>(p), 1);
        for (int t = 0; t < 25; ++t) {
            auto a = naive::random_poly(rng, p, 1 + static_cast<int>(rng() % 3), true);
            auto b = naive::random_poly(rng, p, 1 + static_cast<int>(rng() % 3), true);
            unsigned n = 1 + static_cast<unsigned>(rng() % 30);
            auto g = naive::gcd(naive::pow_sub1(a, n, p), naive::pow_sub1(b, n, p), p);
            CHECK(gcd_degree_direct(naive::to_poly(a, F), naive::to_poly(b, F), n) == static_cast<long>(g.size()) - 1);
        }
    }
}

TEST_CASE("certificate run A") {
    auto F = make_field(3, 1);
    auto plan = plan_exponents(3, 1, 2);
    auto cert = witness_certificate(P("T", F), P("T+1", F), plan, 4);
    CHECK(cert.n == 80);
    CHECK(format_poly(cert.ell) == "T^2+T");
    CHECK(cert.phi_Q_ell == 4);
    CHECK(cert.constant_c == Rational(1, 4));
    CHECK(cert.witnesses.size() == 3);
    CHECK(cert.witness_degree_sum == 12);
    REQUIRE(cert.direct_degree);
    CHECK(*cert.direct_degree == 79);
    CHECK(cert.witnesses == enumerate_progression(F, 4, Poly::one(F), cert.ell));
}

TEST_CASE("certificate run B") {
    auto F = make_field_q(4);
    auto plan = plan_exponents(4, 1, 1);
    auto cert = witness_certificate(P("T", F), P("T+1", F), plan, 3);
    CHECK(cert.n == 1365);
    CHECK(cert.big_field->q() == 16);
    CHECK(cert.phi_Q_ell == 225);
    CHECK(cert.constant_c == Rational(1, 75));
    CHECK(cert.witnesses.size() == 10);
    CHECK(cert.witness_degree_sum == 30);
    REQUIRE(cert.direct_degree);
    CHECK(*cert.direct_degree == 440);
    CHECK(*cert.direct_degree >= boost::multiprecision::numerator(cert.constant_c) * cert.n / boost::multiprecision::denominator(cert.constant_c));
    auto counted = count_progression(cert.big_field, 3, Poly::one(cert.big_field), lift_poly(cert.ell, make_embedding(F, cert.big_field)));
    CHECK(counted.exact == cert.witnesses.size());
}

TEST_CASE("lower bound constant") {
    auto F3 = make_field(3, 1);
    auto F4 = make_field_q(4);
    CHECK(lower_bound_constant(plan_exponents(3, 1, 2), P("T", F3), P("T+1", F3)) == Rational(1, 4));
    CHECK(lower_bound_constant(plan_exponents(4, 1, 1), P("T", F4), P("T+1", F4)) == Rational(1, 75));
    auto F5 = make_field(5, 1);
    CHECK(lower_bound_constant(plan_exponents(5, 1, 4), P("T", F5), P("T", F5)) == Rational(1, 4));
}

TEST_CASE("T and T+1 identities") {
    auto r2 = example1_identity(make_field(2, 1), 2);
    CHECK(r2.n == 3);
    CHECK(r2.deg_gcd == 2);
    CHECK(format_poly(r2.gcd) == "T^2+T+1");
    auto r5 = example1_identity(make_field(5, 1), 2);
    CHECK(r5.n == 24);
    CHECK(r5.deg_gcd == 23);
    CHECK(r5.ok());
    auto r4 = example1_identity(make_field_q(4), 1);
    CHECK(r4.deg_gcd == 2);
    CHECK(r4.ok());
}

TEST_CASE("frobenius scaling") {
    auto F2 = make_field(2, 1);
    auto F3 = make_field(3, 1);
    auto a = frobenius_scaling(P("T", F2), P("T+1", F2), 3, 1);
    CHECK(a.deg_base == 2);
    CHECK(a.deg_scaled == 4);
    CHECK(a.ok());
    CHECK(frobenius_scaling(P("T", F3), P("T^2+1", F3), 4, 1).ok());
    auto z = frobenius_scaling(P("T^2+T+2", F3), P("T+1", F3), 5, 0);
    CHECK(z.deg_base == z.deg_scaled);
    CHECK(z.ok());
}

TEST_CASE("multiplicative independence") {
    auto F3 = make_field(3, 1);
    CHECK_FALSE(multiplicative_independence(P("T+1", F3), P("T+1", F3)));
    CHECK(multiplicative_independence(P("T", F3), P("T+1", F3)));
    CHECK_FALSE(multiplicative_independence(P("T^2", F3), P("T^3", F3)));
    CHECK(multiplicative_independence(P("T^2+T", F3), P("T", F3)));
    CHECK_FALSE(multiplicative_independence(P("T^4+T^2+1", F3), P("T^2+2", F3)));
}

TEST_CASE("scan") {
    auto F5 = make_field(5, 1);
    auto rows = scan_degrees(P("T", F5), P("T+1", F5), 1, 30);
    REQUIRE(rows.size() == 30);
    CHECK(rows[23].n == 24);
    CHECK(rows[23].deg_gcd == 23);
    CHECK(rows[3].deg_gcd == example1_identity(F5, 1).deg_gcd);
    auto threaded = scan_degrees(P("T", F5), P("T+1", F5), 1, 30, kDefaultDegreeCap, 4);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == threaded[i].n);
        CHECK(rows[i].deg_gcd == threaded[i].deg_gcd);
    }
    auto F2 = make_field(2, 1);
    CHECK(scan_degrees(P("T", F2), P("T+1", F2), 2, 2)[0].deg_gcd == 0);
}

TEST_CASE("integer table") {
    auto rows = integer_gcd_table(2, 3, 12);
    CHECK(rows[0].gcd == 1);
    CHECK(rows[5].gcd == 7);
    for (const auto& row : rows) {
        BigInt x = big_pow(2, row.n) - 1, y = big_pow(3, row.n) - 1;
        CHECK(row.gcd == boost::multiprecision::gcd(x, y));
    }
    CHECK(integer_gcd_table(4, 6, 1)[0].gcd == 1);
    CHECK_ERRC(integer_gcd_table(2, 8, 5), Errc::MultiplicativelyDependent);
    CHECK_ERRC(integer_gcd_table(2, 3, 5000), Errc::BudgetExceeded);
}
