#include "ffgcd/gcdlab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

namespace ffgcd {

namespace {

// Q is written out only below this many bits.
constexpr double kMaxQBits = 1 << 20;

u64 inverse_mod(u64 a, u64 m) {
    __int128 old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        __int128 quot = old_r / r;
        __int128 t = old_r - quot * r;
        old_r = r;
        r = t;
        t = old_s - quot * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw Error(Errc::InternalError, "value is not invertible");
    __int128 v = old_s % static_cast<__int128>(m);
    if (v < 0) v += m;
    return static_cast<u64>(v);
}

void check_gcd_inputs(const Poly& a, const Poly& b) {
    if (!a.ctx()->same_as(*b.ctx())) throw Error(Errc::MixedContexts, "a and b are over different fields");
    if (a.is_constant() || b.is_constant()) throw Error(Errc::Constant, "a and b must be nonconstant");
    if (!a.is_monic() || !b.is_monic()) throw Error(Errc::NotMonic, "a and b must be monic");
}

}  // namespace

BigInt ExponentPlan::p_power() const { return big_pow(BigInt(p), p_power_i); }

BigInt ExponentPlan::p_free_exponent(u64 N) const {
    if (!Q) throw Error(Errc::InfeasiblePlan, "Q = " + q_text() + " is too large to materialize");
    return (big_pow(*Q, N) - 1) / r;
}

BigInt ExponentPlan::exponent(u64 N) const { return p_power() * p_free_exponent(N); }

std::string ExponentPlan::q_text() const {
    if (Q) return Q->str();
    return std::to_string(base_q) + "^" + std::to_string(q_exponent);
}

ExponentPlan plan_exponents(u64 base_q, unsigned k, u64 n0, u64 field_cap) {
    auto [p, m] = prime_power_decompose(base_q);
    if (p == 0) throw Error(Errc::NotAPrimePower, std::to_string(base_q) + " is not a prime power");
    if (k == 0) throw Error(Errc::InvalidArgument, "k must be at least 1");
    const BigInt modulus = big_pow(BigInt(base_q), k);
    if (modulus > kMaxPlanModulus) {
        throw Error(Errc::InvalidArgument, "q^k = " + modulus.str() + " exceeds the supported limit 2^40");
    }
    ExponentPlan plan;
    plan.base_q = base_q;
    plan.p = p;
    plan.m = m;
    plan.k = k;
    plan.modulus = static_cast<u64>(modulus);
    if (n0 >= plan.modulus) {
        throw Error(Errc::N0NotReduced, "n0 = " + std::to_string(n0) + " is not reduced mod q^k = " + std::to_string(plan.modulus));
    }
    if (n0 == 0) {
        throw Error(Errc::N0NotReduced, "n0 = 0 has no decomposition p^i * n1 with p not dividing n1");
    }
    plan.n0 = n0;
    plan.n1 = n0;
    while (plan.n1 % p == 0) {
        plan.n1 /= p;
        ++plan.p_power_i;
    }
    // Smallest odd r with r * n1 = -1 mod q^k.
    const u64 r0 = (plan.modulus - inverse_mod(plan.n1 % plan.modulus, plan.modulus)) % plan.modulus;
    plan.r = (r0 % 2 == 1) ? r0 : r0 + plan.modulus;
    plan.phi_r = euler_phi_u64(plan.r);
    plan.q_exponent = static_cast<u64>(k) * plan.phi_r;
    if (static_cast<double>(plan.q_exponent) * std::log2(static_cast<double>(base_q)) <= kMaxQBits) {
        plan.Q = big_pow(BigInt(base_q), plan.q_exponent);
        plan.feasible = *plan.Q <= field_cap && *plan.Q <= kHardCardinalityLimit;
    }
    return plan;
}

Poly gcd_pow_sub1(const Poly& a, const Poly& b, const BigInt& n, u64 degree_cap) {
    return poly_gcd(poly_pow_sub1(a, n, degree_cap), poly_pow_sub1(b, n, degree_cap));
}

BigInt gcd_degree_direct(const Poly& a, const Poly& b, const BigInt& n, u64 degree_cap) {
    check_gcd_inputs(a, b);
    if (n < 1) throw Error(Errc::InvalidArgument, "n must be at least 1");
    const u64 p = a.ctx()->p();
    BigInt reduced = n;
    BigInt scale = 1;
    while (reduced % p == 0) {
        reduced /= p;
        scale *= p;
    }
    return scale * gcd_pow_sub1(a, b, reduced, degree_cap).degree();
}

GcdCertificate witness_certificate(const Poly& a, const Poly& b, const ExponentPlan& plan, unsigned N,
                                   const CertificateOptions& opts) {
    check_gcd_inputs(a, b);
    if (N == 0) throw Error(Errc::InvalidArgument, "N must be at least 1");
    if (a.ctx()->q() != plan.base_q) {
        throw Error(Errc::ContextMismatch, "polynomials are over F_" + std::to_string(a.ctx()->q()) +
                                               " but the plan is for q = " + std::to_string(plan.base_q));
    }
    if (!plan.feasible) {
        throw Error(Errc::InfeasiblePlan, "plan needs a field of order Q = " + plan.q_text() + " (" +
                                              std::to_string(plan.base_q) + "^" + std::to_string(plan.q_exponent) +
                                              "), above the field cap");
    }
    GcdCertificate cert{a, b, plan, N, plan.exponent(N), poly_lcm(a, b), nullptr, 0, 0, {}, 0, std::nullopt, opts.seed};
    cert.big_field = make_field(plan.p, plan.m * static_cast<unsigned>(plan.q_exponent), opts.field_cap);
    const Embedding emb = make_embedding(a.ctx(), cert.big_field);
    const Poly ell = lift_poly(cert.ell, emb);
    const Poly la = lift_poly(a, emb);
    const Poly lb = lift_poly(b, emb);

    cert.witnesses = enumerate_progression(cert.big_field, N, Poly::one(cert.big_field), ell, opts.enumeration);
    for (const auto& pi : cert.witnesses) {
        if (!poly_powmod(la, cert.n, pi).is_one() || !poly_powmod(lb, cert.n, pi).is_one()) {
            throw Error(Errc::InternalError, "witness " + format_poly(pi) + " does not divide both a^n - 1 and b^n - 1");
        }
    }
    cert.witness_degree_sum = BigInt(N) * cert.witnesses.size();
    cert.phi_Q_ell = phi_q(ell);
    cert.constant_c = Rational(BigInt(plan.r), cert.phi_Q_ell);

    if (opts.compute_direct) {
        try {
            cert.direct_degree = gcd_degree_direct(a, b, cert.n, opts.degree_cap);
        } catch (const Error& e) {
            if (e.code() != Errc::DegreeCapExceeded) throw;
        }
        if (cert.direct_degree && *cert.direct_degree < cert.witness_degree_sum) {
            throw Error(Errc::InternalError, "direct gcd degree is below the certified witness degree sum");
        }
    }
    return cert;
}

Rational lower_bound_constant(const ExponentPlan& plan, const Poly& a, const Poly& b, u64 field_cap) {
    check_gcd_inputs(a, b);
    if (!plan.feasible) {
        throw Error(Errc::InfeasiblePlan, "Q = " + plan.q_text() + " exceeds the field cap; use the symbolic form");
    }
    Field big = make_field(plan.p, plan.m * static_cast<unsigned>(plan.q_exponent), field_cap);
    const Poly ell = lift_poly(poly_lcm(a, b), make_embedding(a.ctx(), big));
    return Rational(BigInt(plan.r), phi_q(ell));
}

std::string lower_bound_constant_symbolic(const ExponentPlan& plan, const Poly& a, const Poly& b) {
    check_gcd_inputs(a, b);
    return std::to_string(plan.r) + "/Phi_Q(" + format_poly(poly_lcm(a, b)) + "), Q = " + std::to_string(plan.base_q) +
           "^" + std::to_string(plan.q_exponent);
}

Example1Report example1_identity(const Field& ctx, unsigned N, u64 degree_cap) {
    if (N == 0) throw Error(Errc::InvalidArgument, "N must be at least 1");
    Example1Report rep{ctx->q(), N, big_pow(BigInt(ctx->q()), N) - 1, 0, false, false, false, Poly(ctx)};
    const Poly t = Poly::variable(ctx);
    const Poly t1 = t + Poly::one(ctx);
    const Poly an = poly_pow_sub1(t, rep.n, degree_cap);
    const Poly bn = poly_pow_sub1(t1, rep.n, degree_cap);

    const DivRem scaled = divrem(t * an, t1);
    rep.b_identity = scaled.remainder.is_zero() && scaled.quotient == bn;

    rep.gcd = poly_gcd(an, bn);
    const DivRem expected = divrem(an, t1);
    rep.gcd_identity = expected.remainder.is_zero() && rep.gcd == monic(expected.quotient);

    rep.deg_gcd = rep.gcd.degree();
    rep.degree_identity = BigInt(rep.deg_gcd) == rep.n - 1;
    return rep;
}

FrobeniusReport frobenius_scaling(const Poly& a, const Poly& b, u64 m, unsigned i, u64 degree_cap) {
    check_gcd_inputs(a, b);
    if (m == 0) throw Error(Errc::InvalidArgument, "m must be at least 1");
    const BigInt pi = big_pow(BigInt(a.ctx()->p()), i);
    if (pi * m * std::max(a.degree(), b.degree()) > degree_cap) {
        throw Error(Errc::DegreeCapExceeded, "frobenius check at exponent m p^i exceeds the degree cap",
                    pi * m * std::max(a.degree(), b.degree()));
    }
    FrobeniusReport rep{a, b, m, i, static_cast<u64>(pi), 0, 0, false, false, false};
    const Poly base = gcd_pow_sub1(a, b, BigInt(m), degree_cap);
    const Poly scaled = gcd_pow_sub1(a, b, BigInt(m) * pi, degree_cap);
    rep.deg_base = base.degree();
    rep.deg_scaled = scaled.degree();
    rep.identity_holds = scaled == poly_pow(base, rep.p_power);
    rep.degree_scales = BigInt(rep.deg_scaled) == pi * rep.deg_base;
    rep.reduced_path_agrees = gcd_degree_direct(a, b, BigInt(m) * pi, degree_cap) == rep.deg_scaled;
    return rep;
}

bool multiplicative_independence(const Poly& a, const Poly& b) {
    check_gcd_inputs(a, b);
    std::map<std::vector<Elem>, std::pair<BigInt, BigInt>> exps;
    for (const auto& f : factorize(a).factors) exps[f.prime.coeffs()].first = f.multiplicity;
    for (const auto& f : factorize(b).factors) exps[f.prime.coeffs()].second = f.multiplicity;
    // Parallel exponent vectors <=> a^i = b^j for some positive i, j.
    for (const auto& [k1, e1] : exps) {
        for (const auto& [k2, e2] : exps) {
            if (e1.first * e2.second != e2.first * e1.second) return true;
        }
    }
    return false;
}

std::vector<ScanRow> scan_degrees(const Poly& a, const Poly& b, u64 n_from, u64 n_to, u64 degree_cap, unsigned threads) {
    check_gcd_inputs(a, b);
    if (n_from < 1 || n_to < n_from) throw Error(Errc::InvalidArgument, "scan range must satisfy 1 <= from <= to");
    const BigInt need = BigInt(n_to) * std::max(a.degree(), b.degree());
    if (need > degree_cap) {
        throw Error(Errc::DegreeCapExceeded, "scan up to n = " + std::to_string(n_to) + " exceeds the degree cap", need);
    }
    std::vector<ScanRow> rows;
    for (u64 n = n_from; n <= n_to; ++n) rows.push_back({n, 0});
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows.size())));
    auto work = [&](unsigned t) {
        for (std::size_t idx = t; idx < rows.size(); idx += workers) {
            rows[idx].deg_gcd = gcd_degree_direct(a, b, BigInt(rows[idx].n), degree_cap);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
    }
    return rows;
}

std::vector<IntegerGcdRow> integer_gcd_table(u64 a, u64 b, u64 n_max, u64 budget) {
    if (a < 2 || b < 2) throw Error(Errc::InvalidArgument, "integers must be at least 2");
    if (n_max < 1) throw Error(Errc::InvalidArgument, "n_max must be at least 1");
    if (n_max > budget) {
        throw Error(Errc::BudgetExceeded, "n_max = " + std::to_string(n_max) + " exceeds big-integer budget " + std::to_string(budget));
    }
    std::map<u64, std::pair<u64, u64>> exps;
    for (auto [pr, e] : factor_u64(a)) exps[pr].first = e;
    for (auto [pr, e] : factor_u64(b)) exps[pr].second = e;
    bool independent = false;
    for (const auto& [p1, e1] : exps) {
        for (const auto& [p2, e2] : exps) {
            if (e1.first * e2.second != e2.first * e1.second) independent = true;
        }
    }
    if (!independent) {
        throw Error(Errc::MultiplicativelyDependent, std::to_string(a) + " and " + std::to_string(b) + " are multiplicatively dependent");
    }
    std::vector<IntegerGcdRow> rows;
    BigInt an = 1, bn = 1;
    for (u64 n = 1; n <= n_max; ++n) {
        an *= a;
        bn *= b;
        BigInt g = boost::multiprecision::gcd(BigInt(an - 1), BigInt(bn - 1));
        rows.push_back({n, g, log_big(g) / static_cast<double>(n)});
    }
    return rows;
}

}  // namespace ffgcd
