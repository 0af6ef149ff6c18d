#include <algorithm>
#include <map>
#include <random>

#include "ffgcd/irreducibles.hpp"

namespace ffgcd {

namespace {

constexpr int kMaxSplitAttempts = 256;

Poly pth_root(const Poly& f) {
    const auto& F = *f.ctx();
    const u64 p = F.p();
    std::vector<Elem> out(f.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out[i / p] = F.pth_root(f[i]);
    return Poly(f.ctx(), std::move(out));
}

using Parts = std::vector<std::pair<Poly, unsigned>>;

// Squarefree decomposition of a monic polynomial: f = prod part^mult with parts squarefree and
// pairwise coprime.
Parts squarefree_parts(const Poly& f) {
    Parts out;
    if (f.degree() < 1) return out;
    const u64 p = f.ctx()->p();
    const Poly fp = derivative(f);
    if (fp.is_zero()) {
        for (auto& [g, e] : squarefree_parts(pth_root(f))) out.emplace_back(std::move(g), e * p);
        return out;
    }
    Poly c = poly_gcd(f, fp);
    Poly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly fac = w / y;
        if (!fac.is_one()) out.emplace_back(std::move(fac), i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_one()) {
        for (auto& [g, e] : squarefree_parts(pth_root(c))) out.emplace_back(std::move(g), e * p);
    }
    return out;
}

// Distinct-degree factorization of a monic squarefree polynomial: (product of all degree-d
// factors, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f) {
    std::vector<std::pair<Poly, unsigned>> out;
    const BigInt q = f.ctx()->q();
    const Poly x = Poly::variable(f.ctx());
    Poly rest = f;
    Poly h = x % rest;
    unsigned d = 0;
    while (rest.degree() >= 2 * static_cast<int>(d + 1)) {
        ++d;
        h = poly_powmod(h, q, rest);
        Poly g = poly_gcd(h - x, rest);
        if (!g.is_one()) {
            rest = rest / g;
            h = h % rest;
            out.emplace_back(std::move(g), d);
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
    return out;
}

class Splitter {
   public:
    explicit Splitter(u64 seed) : rng_(seed) {}

    // f is monic, squarefree, with every irreducible factor of degree d.
    void split(const Poly& f, unsigned d, std::vector<Poly>& out) {
        if (f.degree() <= static_cast<int>(d)) {
            if (f.degree() > 0) out.push_back(f);
            return;
        }
        for (int attempt = 0; attempt < kMaxSplitAttempts; ++attempt) {
            Poly g = try_split(f, d);
            if (g.degree() > 0 && g.degree() < f.degree()) {
                split(g, d, out);
                split(f / g, d, out);
                return;
            }
        }
        exhaustive_split(f, d, out);
    }

   private:
    Poly random_below(const Poly& f) {
        const u64 q = f.ctx()->q();
        std::vector<Elem> c(static_cast<std::size_t>(f.degree()));
        for (auto& x : c) x = rng_() % q;
        return Poly(f.ctx(), std::move(c));
    }

    Poly try_split(const Poly& f, unsigned d) {
        const auto& F = *f.ctx();
        Poly a = random_below(f);
        if (a.is_constant()) return Poly(f.ctx());
        Poly g = poly_gcd(a, f);
        if (!g.is_one()) return g;
        Poly b(f.ctx());
        if (F.p() == 2) {
            // Absolute trace to F_2: a + a^2 + ... + a^(2^(m d - 1)).
            const u64 steps = static_cast<u64>(F.m()) * d;
            Poly t = a;
            b = a;
            for (u64 i = 1; i < steps; ++i) {
                t = mulmod(t, t, f);
                b = b + t;
            }
        } else {
            const BigInt e = (big_pow(BigInt(F.q()), d) - 1) / 2;
            b = poly_powmod(a, e, f) - Poly::one(f.ctx());
        }
        if (b.is_zero()) return Poly(f.ctx());
        return poly_gcd(b, f);
    }

    // Trial division by every monic irreducible of degree d; only reachable after repeated
    // unlucky random draws.
    static void exhaustive_split(const Poly& f, unsigned d, std::vector<Poly>& out) {
        Poly rest = f;
        IrreducibleStream stream(f.ctx(), d, kDefaultEnumerationCap);
        while (rest.degree() > 0) {
            auto pi = stream.next();
            if (!pi) throw Error(Errc::InternalError, "equal-degree splitting failed");
            if (divides(*pi, rest)) {
                rest = rest / *pi;
                out.push_back(std::move(*pi));
            }
        }
    }

    std::mt19937_64 rng_;
};

}  // namespace

Poly Factorization::product() const {
    Poly out = Poly::constant(unit.ctx(), unit.code());
    for (const auto& [prime, e] : factors) out = out * poly_pow(prime, e);
    return out;
}

Factorization factorize(const Poly& f, u64 seed) {
    if (f.is_zero()) throw Error(Errc::ZeroInput, "factorization of the zero polynomial");
    Factorization result{FqElem(f.ctx(), f.lead()), {}};
    const Poly g = monic(f);
    Splitter splitter(seed);
    std::map<std::vector<Elem>, Factor> merged;
    for (const auto& [part, mult] : squarefree_parts(g)) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<Poly> primes;
            splitter.split(block, d, primes);
            for (auto& pi : primes) {
                auto [it, inserted] = merged.try_emplace(pi.coeffs(), Factor{pi, 0});
                it->second.multiplicity += mult;
            }
        }
    }
    for (auto& [key, fac] : merged) result.factors.push_back(std::move(fac));
    std::sort(result.factors.begin(), result.factors.end(), [](const Factor& a, const Factor& b) {
        if (a.prime.degree() != b.prime.degree()) return a.prime.degree() < b.prime.degree();
        return format_poly(a.prime) < format_poly(b.prime);
    });
    return result;
}

std::vector<Elem> roots(const Poly& f, u64 seed) {
    if (f.is_zero()) throw Error(Errc::ZeroInput, "roots of the zero polynomial");
    std::vector<Elem> out;
    if (f.degree() < 1) return out;
    const Poly g = monic(f);
    const Poly x = Poly::variable(g.ctx());
    Poly linear = g.degree() == 1 ? g : poly_gcd(poly_powmod(x, BigInt(g.ctx()->q()), g) - x, g);
    std::vector<Poly> factors;
    Splitter(seed).split(linear, 1, factors);
    for (const auto& l : factors) out.push_back(g.ctx()->neg(l[0]));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ffgcd
