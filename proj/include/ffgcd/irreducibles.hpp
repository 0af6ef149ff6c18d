#pragma once

// Monic irreducibles over F_q: testing, enumeration (plain and in residue classes), exact
// counting, factorization and the function-field Euler function.

#include <functional>
#include <optional>
#include <vector>

#include "ffgcd/bigint.hpp"
#include "ffgcd/ffield.hpp"
#include "ffgcd/fqpoly.hpp"

namespace ffgcd {

inline constexpr u64 kDefaultEnumerationCap = u64{1} << 26;

struct EnumOptions {
    u64 candidate_cap = kDefaultEnumerationCap;
    unsigned threads = 1;
};

// Rabin's test. Constants are never irreducible; degree-1 polynomials always are.
bool is_irreducible(const Poly& f);

// Number of monic degree-N candidates, q^N; EnumerationCapExceeded above the cap.
u64 candidate_count(const Field& ctx, unsigned N, u64 candidate_cap);

// The monic degree-N polynomial whose lower coefficients, read as base-q digits with T^{N-1}
// most significant, spell `code`. Enumeration order is ascending code.
Poly monic_from_code(const Field& ctx, unsigned N, u64 code);

// Streams the monic irreducibles of degree N with candidate code in [begin, end), in order.
class IrreducibleStream {
   public:
    IrreducibleStream(Field ctx, unsigned N, u64 begin, u64 end);
    IrreducibleStream(Field ctx, unsigned N, u64 candidate_cap = kDefaultEnumerationCap);

    std::optional<Poly> next();

   private:
    Field ctx_;
    unsigned n_;
    u64 code_;
    u64 end_;
};

// Materializes S_{q,N} (optionally filtered) in enumeration order. With threads > 1 the code
// range is split into contiguous blocks and the results concatenated, so the output does not
// depend on the thread count.
std::vector<Poly> enumerate_irreducibles(const Field& ctx, unsigned N, const EnumOptions& opts = {},
                                         const std::function<bool(const Poly&)>& keep = {});

// #S_{q,N} via (1/N) sum_{d|N} mu(d) q^{N/d}.
BigInt count_irreducibles_exact(const BigInt& q, u64 N);

// S_{q,N}(alpha, mu): NotCoprime unless gcd(alpha, mu) = 1; mu must be nonconstant.
std::vector<Poly> enumerate_progression(const Field& ctx, unsigned N, const Poly& alpha, const Poly& mu,
                                        const EnumOptions& opts = {});

struct ClassCount {
    Poly residue;
    BigInt count;
    Rational deviation;  // count - q^N / (N Phi_q(mu))
};

struct CountReport {
    u64 q = 0;
    unsigned N = 0;
    BigInt exact;
    Rational main_term;
    Rational deviation;
    std::optional<Poly> modulus;
    std::optional<Poly> alpha;
    std::optional<std::vector<ClassCount>> per_class;
};

// Enumerated #S_{q,N} against q^N / N.
CountReport count_irreducibles(const Field& ctx, unsigned N, const EnumOptions& opts = {});
// #S_{q,N}(alpha, mu) against q^N / (N Phi_q(mu)).
CountReport count_progression(const Field& ctx, unsigned N, const Poly& alpha, const Poly& mu,
                              const EnumOptions& opts = {});
// Per-class counts over every invertible residue mod mu. `exact` is the number of enumerated
// primes coprime to mu, `main_term` is q^N / N, and each class carries its own deviation.
CountReport count_progression_classes(const Field& ctx, unsigned N, const Poly& mu, const EnumOptions& opts = {});

struct Factor {
    Poly prime;
    unsigned multiplicity;
};

struct Factorization {
    FqElem unit;
    std::vector<Factor> factors;  // sorted by (degree, canonical text)

    Poly product() const;
};

// Squarefree decomposition, distinct-degree and equal-degree (Cantor-Zassenhaus) splitting.
Factorization factorize(const Poly& f, u64 seed = 0);

// Distinct roots in the coefficient field, ascending by code.
std::vector<Elem> roots(const Poly& f, u64 seed = 0);

// |(F_q[T]/mu)^*|; 1 for nonzero constants.
BigInt phi_q(const Poly& mu);

u64 euler_phi_int(u64 r);

}  // namespace ffgcd
