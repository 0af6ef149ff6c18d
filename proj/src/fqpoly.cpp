#include "ffgcd/fqpoly.hpp"

#include <algorithm>

#include "scanner.hpp"

namespace ffgcd {

namespace {

const Field& common(const Poly& f, const Poly& g) {
    if (!f.ctx()->same_as(*g.ctx())) throw Error(Errc::MixedContexts, "polynomials over different fields");
    return f.ctx();
}

// r <- r mod g, in place, with g nonzero; q receives the quotient when non-null.
void reduce_in_place(const FieldCtx& F, std::vector<Elem>& r, const std::vector<Elem>& g, std::vector<Elem>* q) {
    const std::size_t dg = g.size() - 1;
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.size() < g.size()) {
        if (q) q->clear();
        return;
    }
    const Elem inv_lead = F.inv(g.back());
    const bool monic = g.back() == 1;
    if (q) q->assign(r.size() - dg, 0);
    for (std::size_t k = r.size() - g.size() + 1; k-- > 0;) {
        Elem top = r[k + dg];
        if (top == 0) continue;
        Elem c = monic ? top : F.mul(top, inv_lead);
        if (q) (*q)[k] = c;
        Elem nc = F.neg(c);
        for (std::size_t j = 0; j < dg; ++j) {
            if (g[j]) r[k + j] = F.add(r[k + j], F.mul(nc, g[j]));
        }
        r[k + dg] = 0;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

std::vector<Elem> mul_raw(const FieldCtx& F, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Elem> out(a.size() + b.size() - 1, 0);
    if (F.is_prime_field() && F.p() <= 0xFFFF && a.size() + b.size() < (std::size_t{1} << 31)) {
        // Products stay below 2^32, so the accumulators cannot overflow before the final reduction.
        for (std::size_t i = 0; i < a.size(); ++i) {
            const u64 ai = a[i];
            if (!ai) continue;
            u64* dst = out.data() + i;
            for (std::size_t j = 0; j < b.size(); ++j) dst[j] += ai * b[j];
        }
        for (auto& x : out) x %= F.p();
        return out;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j]) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
        }
    }
    return out;
}

}  // namespace

Poly::Poly(Field ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (auto c : c_) {
        if (!ctx_->is_valid(c)) throw Error(Errc::CoefficientOutOfRange, "coefficient code out of range");
    }
    trim();
}

Poly Poly::constant(Field ctx, Elem c) { return Poly(std::move(ctx), std::vector<Elem>{c}); }

Poly Poly::monomial(Field ctx, Elem c, std::size_t k) {
    std::vector<Elem> v(k + 1, 0);
    v[k] = c;
    return Poly(std::move(ctx), std::move(v));
}

Poly operator+(const Poly& f, const Poly& g) {
    const auto& F = common(f, g);
    std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F->add(f[i], g[i]);
    return Poly(F, std::move(out));
}

Poly operator-(const Poly& f, const Poly& g) {
    const auto& F = common(f, g);
    std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F->sub(f[i], g[i]);
    return Poly(F, std::move(out));
}

Poly operator-(const Poly& f) {
    std::vector<Elem> out(f.coeffs());
    for (auto& c : out) c = f.ctx()->neg(c);
    return Poly(f.ctx(), std::move(out));
}

Poly operator*(const Poly& f, const Poly& g) {
    const auto& F = common(f, g);
    return Poly(F, mul_raw(*F, f.coeffs(), g.coeffs()));
}

Poly scale(const Poly& f, Elem c) {
    std::vector<Elem> out(f.coeffs());
    for (auto& x : out) x = f.ctx()->mul(x, c);
    return Poly(f.ctx(), std::move(out));
}

DivRem divrem(const Poly& f, const Poly& g) {
    const auto& F = common(f, g);
    if (g.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    std::vector<Elem> r(f.coeffs());
    std::vector<Elem> q;
    reduce_in_place(*F, r, g.coeffs(), &q);
    return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly operator/(const Poly& f, const Poly& g) { return divrem(f, g).quotient; }

Poly operator%(const Poly& f, const Poly& g) {
    const auto& F = common(f, g);
    if (g.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    std::vector<Elem> r(f.coeffs());
    reduce_in_place(*F, r, g.coeffs(), nullptr);
    return Poly(F, std::move(r));
}

bool divides(const Poly& d, const Poly& f) { return (f % d).is_zero(); }

Poly monic(const Poly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return scale(f, f.ctx()->inv(f.lead()));
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    const auto& F = common(f, g);
    if (f.is_zero() && g.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
    std::vector<Elem> a(f.coeffs()), b(g.coeffs());
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        // Normalizing the divisor keeps the inner loop free of a multiplication by the inverse.
        if (b.back() != 1) {
            Elem inv = F->inv(b.back());
            for (auto& x : b) x = F->mul(x, inv);
        }
        reduce_in_place(*F, a, b, nullptr);
        std::swap(a, b);
    }
    return monic(Poly(F, std::move(a)));
}

Poly poly_lcm(const Poly& f, const Poly& g) {
    common(f, g);
    if (f.is_zero() || g.is_zero()) throw Error(Errc::ZeroInput, "lcm with zero");
    return monic((f / poly_gcd(f, g)) * g);
}

Poly mulmod(const Poly& f, const Poly& g, const Poly& m) { return (f * g) % m; }

Poly poly_powmod(const Poly& f, const BigInt& e, const Poly& m) {
    if (m.is_constant()) throw Error(Errc::ConstantModulus, "modulus must be nonconstant");
    if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    Poly base = f % m;
    Poly result = Poly::one(m.ctx());
    if (e == 0) return result;
    const auto bits = boost::multiprecision::msb(e);
    for (auto i = bits + 1; i-- > 0;) {
        result = mulmod(result, result, m);
        if (boost::multiprecision::bit_test(e, i)) result = mulmod(result, base, m);
    }
    return result;
}

Poly poly_pow(const Poly& f, u64 e) {
    Poly result = Poly::one(f.ctx());
    Poly base = f;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly poly_pow_sub1(const Poly& f, const BigInt& e, u64 degree_cap) {
    if (e < 1) throw Error(Errc::InvalidArgument, "exponent must be at least 1");
    if (f.is_zero()) return -Poly::one(f.ctx());
    BigInt required = e * f.degree();
    if (required > degree_cap) {
        throw Error(Errc::DegreeCapExceeded,
                    "expanding f^e - 1 needs degree " + required.str() + " above cap " + std::to_string(degree_cap),
                    required);
    }
    Poly out = f.degree() == 0 ? Poly::constant(f.ctx(), f.ctx()->pow(f.lead(), e))
                               : poly_pow(f, static_cast<u64>(e));
    return out - Poly::one(f.ctx());
}

Poly derivative(const Poly& f) {
    if (f.degree() < 1) return Poly(f.ctx());
    const auto& F = *f.ctx();
    std::vector<Elem> out(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) out[i - 1] = F.mul(f[i], F.from_int(i % F.p()));
    return Poly(f.ctx(), std::move(out));
}

Elem evaluate(const Poly& f, Elem x) {
    const auto& F = *f.ctx();
    Elem v = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) v = F.add(F.mul(v, x), f[i]);
    return v;
}

Poly compose(const Poly& f, const Poly& g) {
    const auto& F = common(f, g);
    Poly v(F);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) v = v * g + Poly::constant(F, f[i]);
    return v;
}

Poly lift_poly(const Poly& f, const Embedding& emb) {
    if (!f.ctx()->same_as(*emb.src())) throw Error(Errc::ContextMismatch, "polynomial is not over the embedding source");
    std::vector<Elem> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = emb.apply(f[i]);
    return Poly(emb.dst(), std::move(out));
}

Poly parse_poly(std::string_view text, const Field& ctx) {
    constexpr u64 kMaxParsedDegree = u64{1} << 26;
    const auto& F = *ctx;
    detail::Scanner sc(text);
    std::vector<Elem> acc;
    auto add_term = [&](Elem c, u64 k) {
        if (k > kMaxParsedDegree) sc.fail("exponent too large");
        if (acc.size() <= k) acc.resize(k + 1, 0);
        acc[k] = F.add(acc[k], c);
    };
    do {
        Elem c = 1;
        bool have_coeff = true;
        const char ch = sc.peek();
        if (sc.peek_digit()) {
            BigInt v = sc.read_uint();
            if (v >= F.p()) throw Error(Errc::CoefficientOutOfRange, "coefficient " + v.str() + " not below p = " + std::to_string(F.p()));
            c = static_cast<Elem>(v);
        } else if (ch == '(') {
            sc.expect('(');
            c = F.parse(sc.take_until(')'));
            sc.expect(')');
        } else if (ch == 'g' && !F.is_prime_field()) {
            c = F.pow(F.generator(), sc.read_monomial('g'));
        } else if (ch == 'T') {
            have_coeff = false;
        } else {
            sc.fail("expected term");
        }
        u64 k = 0;
        if (!have_coeff) {
            k = sc.read_monomial('T');
        } else if (sc.consume('*')) {
            k = sc.read_monomial('T');
        }
        add_term(c, k);
    } while (sc.consume('+'));
    if (!sc.at_end()) sc.fail("trailing input");
    return Poly(ctx, std::move(acc));
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    const auto& F = *f.ctx();
    std::string out;
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        const Elem c = f[k];
        if (!c) continue;
        if (!out.empty()) out += '+';
        std::string cs = F.format(c);
        if (cs.find_first_of("+*") != std::string::npos) cs = "(" + cs + ")";
        if (k == 0) {
            out += cs;
            continue;
        }
        if (c != 1) out += cs + "*";
        out += 'T';
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

bool poly_less(const Poly& f, const Poly& g) noexcept {
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace ffgcd
