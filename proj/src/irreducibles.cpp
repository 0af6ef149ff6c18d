#include "ffgcd/irreducibles.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace ffgcd {

namespace {

// T^(q^k) mod f for k = 1..count, by repeated q-th powering.
std::vector<Poly> frobenius_powers(const Poly& f, unsigned count) {
    const BigInt q = f.ctx()->q();
    std::vector<Poly> out;
    Poly h = Poly::variable(f.ctx()) % f;
    for (unsigned k = 0; k < count; ++k) {
        h = poly_powmod(h, q, f);
        out.push_back(h);
    }
    return out;
}

bool has_root_small_field(const Poly& f) {
    const auto& F = *f.ctx();
    for (Elem x = 0; x < F.q(); ++x) {
        if (evaluate(f, x) == 0) return true;
    }
    return false;
}

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.is_zero()) throw Error(Errc::ZeroInput, "irreducibility of the zero polynomial");
    if (f.degree() == 0) return false;
    if (f.degree() == 1) return true;
    const Poly g = monic(f);
    const auto N = static_cast<unsigned>(g.degree());
    if (g[0] == 0) return false;
    const Poly x = Poly::variable(g.ctx());
    const auto frob = frobenius_powers(g, N);
    if (frob[N - 1] != x) return false;
    for (auto [s, e] : factor_u64(N)) {
        const Poly h = frob[N / s - 1] - x;
        if (!poly_gcd(h, g).is_one()) return false;
    }
    return true;
}

u64 candidate_count(const Field& ctx, unsigned N, u64 candidate_cap) {
    if (N == 0) throw Error(Errc::InvalidArgument, "degree must be at least 1");
    BigInt total = big_pow(BigInt(ctx->q()), N);
    if (total > candidate_cap) {
        throw Error(Errc::EnumerationCapExceeded, "enumerating degree " + std::to_string(N) + " over F_" +
                                                      std::to_string(ctx->q()) + " needs " + total.str() +
                                                      " candidates, cap is " + std::to_string(candidate_cap));
    }
    return static_cast<u64>(total);
}

Poly monic_from_code(const Field& ctx, unsigned N, u64 code) {
    std::vector<Elem> c(N + 1);
    const u64 q = ctx->q();
    for (unsigned i = 0; i < N; ++i) {
        c[i] = code % q;
        code /= q;
    }
    c[N] = 1;
    return Poly(ctx, std::move(c));
}

IrreducibleStream::IrreducibleStream(Field ctx, unsigned N, u64 begin, u64 end)
    : ctx_(std::move(ctx)), n_(N), code_(begin), end_(end) {
    if (N == 0) throw Error(Errc::InvalidArgument, "degree must be at least 1");
}

IrreducibleStream::IrreducibleStream(Field ctx, unsigned N, u64 candidate_cap)
    : IrreducibleStream(ctx, N, 0, candidate_count(ctx, N, candidate_cap)) {}

std::optional<Poly> IrreducibleStream::next() {
    const bool root_filter = n_ >= 2 && ctx_->q() <= 64;
    while (code_ < end_) {
        const u64 code = code_++;
        if (n_ >= 2 && code % ctx_->q() == 0) continue;  // T divides it
        Poly f = monic_from_code(ctx_, n_, code);
        if (root_filter && has_root_small_field(f)) continue;
        if (is_irreducible(f)) return f;
    }
    return std::nullopt;
}

std::vector<Poly> enumerate_irreducibles(const Field& ctx, unsigned N, const EnumOptions& opts,
                                         const std::function<bool(const Poly&)>& keep) {
    const u64 total = candidate_count(ctx, N, opts.candidate_cap);
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(std::min<u64>(total, 256))));
    std::vector<std::vector<Poly>> blocks(threads);
    auto work = [&](unsigned t) {
        const u64 begin = total / threads * t + std::min<u64>(t, total % threads);
        const u64 end = begin + total / threads + (t < total % threads ? 1 : 0);
        IrreducibleStream stream(ctx, N, begin, end);
        while (auto f = stream.next()) {
            if (!keep || keep(*f)) blocks[t].push_back(std::move(*f));
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    std::vector<Poly> out;
    for (auto& b : blocks) {
        for (auto& f : b) out.push_back(std::move(f));
    }
    return out;
}

BigInt count_irreducibles_exact(const BigInt& q, u64 N) {
    if (N == 0) throw Error(Errc::InvalidArgument, "degree must be at least 1");
    BigInt sum = 0;
    for (u64 d = 1; d <= N; ++d) {
        if (N % d) continue;
        const int mu = moebius_u64(d);
        if (mu == 0) continue;
        BigInt term = big_pow(q, N / d);
        sum += mu > 0 ? term : BigInt(-term);
    }
    return sum / N;
}

namespace {

Poly reduced_coprime_alpha(const Poly& alpha, const Poly& mu) {
    if (mu.is_constant()) throw Error(Errc::InvalidArgument, "modulus mu must be nonconstant");
    Poly a = alpha % mu;
    if (a.is_zero() || !poly_gcd(a, mu).is_one()) {
        throw Error(Errc::NotCoprime, "alpha = " + format_poly(alpha) + " is not coprime to mu = " + format_poly(mu));
    }
    return a;
}

Rational main_term(u64 q, unsigned N, const BigInt& phi) {
    return Rational(big_pow(BigInt(q), N), BigInt(N) * phi);
}

}  // namespace

std::vector<Poly> enumerate_progression(const Field& ctx, unsigned N, const Poly& alpha, const Poly& mu,
                                        const EnumOptions& opts) {
    const Poly a = reduced_coprime_alpha(alpha, mu);
    return enumerate_irreducibles(ctx, N, opts, [&](const Poly& f) { return f % mu == a; });
}

CountReport count_irreducibles(const Field& ctx, unsigned N, const EnumOptions& opts) {
    CountReport rep;
    rep.q = ctx->q();
    rep.N = N;
    rep.exact = enumerate_irreducibles(ctx, N, opts).size();
    rep.main_term = main_term(rep.q, N, 1);
    rep.deviation = Rational(rep.exact) - rep.main_term;
    return rep;
}

CountReport count_progression(const Field& ctx, unsigned N, const Poly& alpha, const Poly& mu,
                              const EnumOptions& opts) {
    const Poly a = reduced_coprime_alpha(alpha, mu);
    CountReport rep;
    rep.q = ctx->q();
    rep.N = N;
    rep.exact = enumerate_progression(ctx, N, a, mu, opts).size();
    rep.main_term = main_term(rep.q, N, phi_q(mu));
    rep.deviation = Rational(rep.exact) - rep.main_term;
    rep.modulus = mu;
    rep.alpha = a;
    return rep;
}

CountReport count_progression_classes(const Field& ctx, unsigned N, const Poly& mu, const EnumOptions& opts) {
    if (mu.is_constant()) throw Error(Errc::InvalidArgument, "modulus mu must be nonconstant");
    const auto dmu = static_cast<unsigned>(mu.degree());
    const u64 residues = candidate_count(ctx, dmu, opts.candidate_cap);
    const u64 q = ctx->q();

    std::vector<Poly> classes;
    std::map<std::vector<Elem>, std::size_t> index;
    for (u64 code = 0; code < residues; ++code) {
        std::vector<Elem> c(dmu);
        u64 v = code;
        for (unsigned i = 0; i < dmu; ++i) {
            c[i] = v % q;
            v /= q;
        }
        Poly r(ctx, c);
        if (r.is_zero() || !poly_gcd(r, mu).is_one()) continue;
        index.emplace(r.coeffs(), classes.size());
        classes.push_back(std::move(r));
    }
    std::vector<BigInt> counts(classes.size(), 0);
    for (const auto& f : enumerate_irreducibles(ctx, N, opts)) {
        auto it = index.find((f % mu).coeffs());
        if (it != index.end()) ++counts[it->second];
    }

    CountReport rep;
    rep.q = q;
    rep.N = N;
    rep.modulus = mu;
    rep.exact = 0;
    const Rational class_main = main_term(q, N, BigInt(classes.size()));
    std::vector<ClassCount> per;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        rep.exact += counts[i];
        per.push_back({classes[i], counts[i], Rational(counts[i]) - class_main});
    }
    rep.main_term = main_term(q, N, 1);
    rep.deviation = Rational(rep.exact) - rep.main_term;
    rep.per_class = std::move(per);
    return rep;
}

u64 euler_phi_int(u64 r) {
    if (r == 0) throw Error(Errc::InvalidArgument, "euler_phi_int needs r >= 1");
    return euler_phi_u64(r);
}

BigInt phi_q(const Poly& mu) {
    if (mu.is_zero()) throw Error(Errc::ZeroInput, "Phi_q of the zero polynomial");
    if (mu.is_constant()) return 1;
    const BigInt q = mu.ctx()->q();
    BigInt phi = 1;
    for (const auto& [prime, e] : factorize(mu).factors) {
        const BigInt norm = big_pow(q, static_cast<u64>(prime.degree()));
        phi *= big_pow(norm, e - 1) * (norm - 1);
    }
    return phi;
}

}  // namespace ffgcd
