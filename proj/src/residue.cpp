#include "ffgcd/residue.hpp"

namespace ffgcd {

namespace {

void check_r(const FieldCtx& F, u64 r) {
    if (r == 0) throw Error(Errc::InvalidArgument, "r must be positive");
    if ((F.q() - 1) % r != 0) {
        throw Error(Errc::RNotDividingQMinus1, std::to_string(r) + " does not divide q - 1 = " + std::to_string(F.q() - 1));
    }
}

void check_prime(const Poly& pi) {
    if (pi.is_zero() || !pi.is_monic() || !is_irreducible(pi)) {
        throw Error(Errc::NotIrreducible, format_poly(pi) + " is not a monic irreducible");
    }
}

}  // namespace

FqElem residue_symbol(const Poly& alpha, const Poly& pi, u64 r) {
    if (!alpha.ctx()->same_as(*pi.ctx())) throw Error(Errc::MixedContexts, "polynomials over different fields");
    const auto& F = *pi.ctx();
    check_r(F, r);
    check_prime(pi);
    const Poly a = alpha % pi;
    if (a.is_zero()) return {pi.ctx(), 0};
    const BigInt e = (big_pow(BigInt(F.q()), static_cast<u64>(pi.degree())) - 1) / r;
    const Poly v = poly_powmod(a, e, pi);
    if (!v.is_constant() || v.is_zero()) {
        throw Error(Errc::InternalError, "residue symbol of " + format_poly(alpha) + " mod " + format_poly(pi) +
                                             " is not a nonzero constant");
    }
    return {pi.ctx(), v[0]};
}

bool is_rth_power_mod(const Poly& mu, const Poly& pi, u64 r) {
    const FqElem s = residue_symbol(mu, pi, r);
    if (s.is_zero()) throw Error(Errc::NotCoprime, format_poly(pi) + " divides " + format_poly(mu));
    return s.is_one();
}

bool is_rth_power_exhaustive(const Poly& mu, const Poly& pi, u64 r) {
    if (!mu.ctx()->same_as(*pi.ctx())) throw Error(Errc::MixedContexts, "polynomials over different fields");
    check_prime(pi);
    const auto N = static_cast<unsigned>(pi.degree());
    const BigInt size = big_pow(BigInt(pi.ctx()->q()), N);
    if (size > kBruteForceLimit) {
        throw Error(Errc::BudgetExceeded, "residue ring of size " + size.str() + " exceeds exhaustive-search limit");
    }
    const Poly target = mu % pi;
    const u64 q = pi.ctx()->q();
    for (u64 code = 0; code < static_cast<u64>(size); ++code) {
        std::vector<Elem> c(N);
        u64 v = code;
        for (unsigned i = 0; i < N; ++i) {
            c[i] = v % q;
            v /= q;
        }
        if (poly_powmod(Poly(pi.ctx(), std::move(c)), BigInt(r), pi) == target) return true;
    }
    return false;
}

ReciprocityReport check_reciprocity(const Poly& mu, u64 r, unsigned degree_bound, const ReciprocityOptions& opts) {
    const auto& F = *mu.ctx();
    if (r % 2 == 0) throw Error(Errc::EvenR, "r = " + std::to_string(r) + " is even; only odd r is supported");
    check_r(F, r);
    if (mu.is_constant()) throw Error(Errc::InvalidArgument, "mu must be nonconstant");
    if (!mu.is_monic()) throw Error(Errc::NotMonic, "mu must be monic");

    ReciprocityReport rep{mu.ctx(), r, mu, degree_bound, 0, {}, 0, 0};
    const Poly one = Poly::one(mu.ctx());
    for (unsigned N = static_cast<unsigned>(mu.degree()); N <= degree_bound; ++N) {
        for (const auto& pi : enumerate_progression(mu.ctx(), N, one, mu, opts.enumeration)) {
            ++rep.tested;
            const FqElem sym = residue_symbol(mu, pi, r);
            const bool holds = sym.is_one();
            if (!holds) rep.violations.push_back({pi, sym});
            if (opts.crosscheck && big_pow(BigInt(F.q()), N) <= kBruteForceLimit) {
                ++rep.crosschecked;
                if (is_rth_power_exhaustive(mu, pi, r) != holds) ++rep.crosscheck_mismatches;
            }
        }
    }
    return rep;
}

}  // namespace ffgcd
