#pragma once

// Lower bounds for deg gcd(a^n - 1, b^n - 1) over F_q[T].
//
// For a residue class n0 mod q^k the exponents n(Q^N) = p^i (Q^N - 1)/r all lie in the class, and
// every monic irreducible pi over F_Q of degree N with pi = 1 (mod lcm(a, b)) divides both
// a^n - 1 and b^n - 1. Counting those primes certifies deg gcd >= N * #witnesses, which grows
// like r / Phi_Q(lcm(a, b)) * n.

#include <optional>
#include <string>
#include <vector>

#include "ffgcd/bigint.hpp"
#include "ffgcd/ffield.hpp"
#include "ffgcd/fqpoly.hpp"
#include "ffgcd/irreducibles.hpp"

namespace ffgcd {

// Largest q^k accepted by plan_exponents.
inline constexpr u64 kMaxPlanModulus = u64{1} << 40;
inline constexpr u64 kDefaultIntegerBudget = 2000;

struct ExponentPlan {
    u64 base_q = 0;
    u64 p = 0;
    unsigned m = 0;  // base_q = p^m
    unsigned k = 0;
    u64 modulus = 0;  // q^k
    u64 n0 = 0;
    unsigned p_power_i = 0;
    u64 n1 = 0;  // n0 = p^i * n1, p does not divide n1
    u64 r = 0;
    u64 phi_r = 0;
    u64 q_exponent = 0;       // Q = q^q_exponent = q^(k phi(r))
    std::optional<BigInt> Q;  // absent when Q is too large to write down
    bool feasible = false;    // Q under the field-construction cap

    BigInt p_power() const;
    // (Q^N - 1) / r.
    BigInt p_free_exponent(u64 N) const;
    // p^i (Q^N - 1) / r, congruent to n0 mod q^k.
    BigInt exponent(u64 N) const;
    // "q^e" when Q is absent, the decimal value otherwise.
    std::string q_text() const;
};

ExponentPlan plan_exponents(u64 base_q, unsigned k, u64 n0, u64 field_cap = kDefaultCardinalityCap);

// Monic gcd of the expanded polynomials a^n - 1 and b^n - 1.
Poly gcd_pow_sub1(const Poly& a, const Poly& b, const BigInt& n, u64 degree_cap = kDefaultDegreeCap);

// deg gcd(a^n - 1, b^n - 1), computed at the p-free part n' of n = p^i n' and scaled by p^i.
// The cap applies to n' * max(deg a, deg b).
BigInt gcd_degree_direct(const Poly& a, const Poly& b, const BigInt& n, u64 degree_cap = kDefaultDegreeCap);

struct CertificateOptions {
    u64 degree_cap = kDefaultDegreeCap;
    u64 field_cap = kDefaultCardinalityCap;
    EnumOptions enumeration;
    u64 seed = 0;
    bool compute_direct = true;
};

struct GcdCertificate {
    Poly a;
    Poly b;
    ExponentPlan plan;
    unsigned N = 0;
    BigInt n;
    Poly ell;          // lcm(a, b) over F_q
    Field big_field;   // F_Q
    BigInt phi_Q_ell;  // Phi_Q(ell)
    Rational constant_c;
    std::vector<Poly> witnesses;  // S_{Q,N}(1, ell) in enumeration order
    BigInt witness_degree_sum;
    std::optional<BigInt> direct_degree;
    u64 seed = 0;
};

GcdCertificate witness_certificate(const Poly& a, const Poly& b, const ExponentPlan& plan, unsigned N,
                                   const CertificateOptions& opts = {});

// r / Phi_Q(lcm(a, b)). InfeasiblePlan when F_Q cannot be built.
Rational lower_bound_constant(const ExponentPlan& plan, const Poly& a, const Poly& b, u64 field_cap = kDefaultCardinalityCap);
// The same constant with Q left symbolic, e.g. "3/Phi_Q(T^2+T), Q = 4^2".
std::string lower_bound_constant_symbolic(const ExponentPlan& plan, const Poly& a, const Poly& b);

struct Example1Report {
    u64 q = 0;
    unsigned N = 0;
    BigInt n;  // q^N - 1
    int deg_gcd = 0;
    bool b_identity = false;       // (T+1)^n - 1 = T (T^n - 1) / (T+1)
    bool gcd_identity = false;     // gcd = (T^n - 1) / (T+1)
    bool degree_identity = false;  // deg gcd = n - 1
    Poly gcd;

    bool ok() const { return b_identity && gcd_identity && degree_identity; }
};

Example1Report example1_identity(const Field& ctx, unsigned N, u64 degree_cap = kDefaultDegreeCap);

struct FrobeniusReport {
    Poly a;
    Poly b;
    u64 m = 0;
    unsigned i = 0;
    u64 p_power = 0;
    int deg_base = 0;
    int deg_scaled = 0;
    bool identity_holds = false;     // gcd(a^{m p^i}-1, b^{m p^i}-1) = gcd(a^m-1, b^m-1)^{p^i}
    bool degree_scales = false;      // deg_scaled = p^i deg_base
    bool reduced_path_agrees = false;  // gcd_degree_direct at m p^i equals deg_scaled

    bool ok() const { return identity_holds && degree_scales && reduced_path_agrees; }
};

FrobeniusReport frobenius_scaling(const Poly& a, const Poly& b, u64 m, unsigned i, u64 degree_cap = kDefaultDegreeCap);

// True iff there is no (i, j) != (0, 0) with a^i = b^j.
bool multiplicative_independence(const Poly& a, const Poly& b);

struct ScanRow {
    u64 n;
    BigInt deg_gcd;
};

std::vector<ScanRow> scan_degrees(const Poly& a, const Poly& b, u64 n_from, u64 n_to,
                                  u64 degree_cap = kDefaultDegreeCap, unsigned threads = 1);

struct IntegerGcdRow {
    u64 n;
    BigInt gcd;
    double log_gcd_over_n;
};

std::vector<IntegerGcdRow> integer_gcd_table(u64 a, u64 b, u64 n_max, u64 budget = kDefaultIntegerBudget);

}  // namespace ffgcd
