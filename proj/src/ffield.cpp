#include "ffgcd/ffield.hpp"

#include <algorithm>

#include "ffgcd/fqpoly.hpp"
#include "ffgcd/irreducibles.hpp"
#include "scanner.hpp"

namespace ffgcd {

FieldCtx::FieldCtx(u64 p, unsigned m, std::vector<u64> modulus) : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    pow_p_.reserve(m);
    for (unsigned i = 0; i < m; ++i) {
        pow_p_.push_back(q_);
        q_ *= p;
    }
    if (m_ > 1 && q_ <= kTableLimit) build_tables();
}

void FieldCtx::build_tables() {
    const u64 order = q_ - 1;
    const auto factors = factor_u64(order);
    Elem primitive = 0;
    for (Elem cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (auto [s, e] : factors) {
            if (pow(cand, order / s) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            primitive = cand;
            break;
        }
    }
    std::vector<std::uint32_t> exp(2 * order);
    std::vector<std::uint32_t> log(q_, 0);
    Elem x = 1;
    for (u64 i = 0; i < order; ++i) {
        exp[i] = static_cast<std::uint32_t>(x);
        exp[i + order] = static_cast<std::uint32_t>(x);
        log[x] = static_cast<std::uint32_t>(i);
        x = mul_generic(x, primitive);
    }
    log_ = std::move(log);
    exp_ = std::move(exp);
}

Elem FieldCtx::add_digits(Elem a, Elem b) const noexcept {
    Elem out = 0;
    for (unsigned i = 0; i < m_; ++i) {
        u64 s = a % p_ + b % p_;
        a /= p_;
        b /= p_;
        if (s >= p_) s -= p_;
        out += s * pow_p_[i];
    }
    return out;
}

Elem FieldCtx::neg_digits(Elem a) const noexcept {
    Elem out = 0;
    for (unsigned i = 0; i < m_; ++i) {
        u64 d = a % p_;
        a /= p_;
        if (d) out += (p_ - d) * pow_p_[i];
    }
    return out;
}

Elem FieldCtx::mul_generic(Elem a, Elem b) const noexcept {
    std::vector<u64> da(m_), db(m_);
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    std::vector<u64> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < m_; ++j) {
            if (!db[j]) continue;
            u64 t = mulmod_u64(da[i], db[j], p_);
            u64 s = prod[i + j] + t;
            prod[i + j] = s >= p_ ? s - p_ : s;
        }
    }
    for (std::size_t k = prod.size(); k-- > m_;) {
        u64 c = prod[k];
        if (!c) continue;
        // prod -= c * g^(k-m) * modulus
        for (unsigned t = 0; t <= m_; ++t) {
            u64 sub = mulmod_u64(c, modulus_[t], p_);
            u64& slot = prod[k - m_ + t];
            slot = slot >= sub ? slot - sub : slot + p_ - sub;
        }
    }
    Elem out = 0;
    for (unsigned i = 0; i < m_; ++i) out += prod[i] * pow_p_[i];
    return out;
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

Elem FieldCtx::pow(Elem a, u64 e) const noexcept {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

Elem FieldCtx::pow(Elem a, const BigInt& e) const {
    if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    if (e == 0) return 1;
    if (a == 0) return 0;
    return pow(a, static_cast<u64>(e % (q_ - 1)));
}

Elem FieldCtx::pth_root(Elem a) const noexcept {
    if (m_ == 1) return a;
    return pow(a, q_ / p_);
}

std::vector<u64> FieldCtx::digits(Elem a) const {
    std::vector<u64> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem FieldCtx::from_digits(std::span<const u64> d) const {
    Elem out = 0;
    for (std::size_t i = 0; i < d.size() && i < m_; ++i) out += (d[i] % p_) * pow_p_[i];
    return out;
}

std::string FieldCtx::format(Elem a) const {
    if (m_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    auto d = digits(a);
    std::string out;
    for (unsigned i = m_; i-- > 0;) {
        if (!d[i]) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += 'g';
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Elem FieldCtx::parse(std::string_view text) const {
    detail::Scanner sc(text);
    auto coefficient = [&](const BigInt& v) {
        if (v >= p_) throw Error(Errc::CoefficientOutOfRange, "coefficient " + v.str() + " not below p = " + std::to_string(p_));
        return static_cast<Elem>(v);
    };
    if (m_ == 1) {
        Elem v = coefficient(sc.read_uint());
        if (!sc.at_end()) sc.fail("trailing input");
        return v;
    }
    Elem total = 0;
    do {
        Elem c = 1;
        u64 e = 0;
        if (sc.peek_digit()) {
            c = coefficient(sc.read_uint());
            if (sc.consume('*')) e = sc.read_monomial('g');
        } else if (sc.peek() == 'g') {
            e = sc.read_monomial('g');
        } else {
            sc.fail("expected term");
        }
        total = add(total, mul(c, pow(generator(), e)));
    } while (sc.consume('+'));
    if (!sc.at_end()) sc.fail("trailing input");
    return total;
}

namespace {

void check_cardinality(u64 p, unsigned m, u64 cap) {
    if (!is_prime_u64(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (m == 0) throw Error(Errc::DegreeZero, "extension degree must be at least 1");
    BigInt q = big_pow(BigInt(p), m);
    if (q > cap || q > kHardCardinalityLimit) {
        throw Error(Errc::CardinalityLimitExceeded,
                    "field of order " + std::to_string(p) + "^" + std::to_string(m) + " = " + q.str() +
                        " exceeds cardinality cap " + std::to_string(std::min(cap, kHardCardinalityLimit)));
    }
}

}  // namespace

Field make_field(u64 p, unsigned m, u64 cardinality_cap) {
    check_cardinality(p, m, cardinality_cap);
    if (m == 1) return Field(new FieldCtx(p, 1, {}));
    Field prime = make_field(p, 1, cardinality_cap);
    const u64 count = static_cast<u64>(big_pow(BigInt(p), m));
    for (u64 code = 0; code < count; ++code) {
        std::vector<Elem> coeffs(m + 1);
        u64 c = code;
        for (unsigned i = 0; i < m; ++i) {
            coeffs[i] = c % p;
            c /= p;
        }
        coeffs[m] = 1;
        if (coeffs[0] == 0) continue;  // divisible by g
        if (is_irreducible(Poly(prime, coeffs))) return Field(new FieldCtx(p, m, std::move(coeffs)));
    }
    throw Error(Errc::InternalError, "no irreducible polynomial found");
}

Field make_field_with_modulus(u64 p, std::vector<u64> modulus, u64 cardinality_cap) {
    if (modulus.size() < 2) throw Error(Errc::DegreeZero, "modulus must have degree at least 1");
    const auto m = static_cast<unsigned>(modulus.size() - 1);
    check_cardinality(p, m, cardinality_cap);
    if (modulus.back() != 1) throw Error(Errc::NotMonic, "modulus must be monic");
    if (m == 1) return Field(new FieldCtx(p, 1, {}));
    Field prime = make_field(p, 1, cardinality_cap);
    for (auto c : modulus) {
        if (c >= p) throw Error(Errc::CoefficientOutOfRange, "modulus coefficient out of range");
    }
    if (!is_irreducible(Poly(prime, modulus))) throw Error(Errc::NotIrreducible, "modulus is reducible over F_p");
    return Field(new FieldCtx(p, m, std::move(modulus)));
}

Field make_field_q(u64 q, u64 cardinality_cap) {
    auto [p, m] = prime_power_decompose(q);
    if (p == 0) throw Error(Errc::NotAPrimePower, std::to_string(q) + " is not a prime power");
    return make_field(p, m, cardinality_cap);
}

FqElem::FqElem(Field ctx, Elem code) : ctx_(std::move(ctx)), code_(code) {
    if (!ctx_->is_valid(code_)) throw Error(Errc::CoefficientOutOfRange, "element code out of range");
}

namespace {

const Field& common(const FqElem& x, const FqElem& y) {
    if (!x.ctx()->same_as(*y.ctx())) throw Error(Errc::MixedContexts, "elements belong to different fields");
    return x.ctx();
}

}  // namespace

FqElem operator+(const FqElem& x, const FqElem& y) {
    const auto& f = common(x, y);
    return {f, f->add(x.code(), y.code())};
}
FqElem operator-(const FqElem& x, const FqElem& y) {
    const auto& f = common(x, y);
    return {f, f->sub(x.code(), y.code())};
}
FqElem operator*(const FqElem& x, const FqElem& y) {
    const auto& f = common(x, y);
    return {f, f->mul(x.code(), y.code())};
}
FqElem operator/(const FqElem& x, const FqElem& y) {
    const auto& f = common(x, y);
    return {f, f->div(x.code(), y.code())};
}

FqElem parse_elem(const Field& ctx, std::string_view text) { return {ctx, ctx->parse(text)}; }

FqElem elem_pow(const FqElem& x, const BigInt& e) { return {x.ctx(), x.ctx()->pow(x.code(), e)}; }

u64 multiplicative_order(const FqElem& x) {
    if (x.is_zero()) throw Error(Errc::ZeroElement, "zero has no multiplicative order");
    const auto& f = *x.ctx();
    u64 order = f.q() - 1;
    for (auto [s, e] : factor_u64(order)) {
        while (order % s == 0 && f.pow(x.code(), order / s) == 1) order /= s;
    }
    return order;
}

Embedding::Embedding(Field src, Field dst, Elem image) : src_(std::move(src)), dst_(std::move(dst)), image_(image) {
    Elem x = 1;
    for (unsigned i = 0; i < src_->m(); ++i) {
        powers_.push_back(x);
        x = dst_->mul(x, image_);
    }
}

Elem Embedding::apply(Elem x) const {
    if (!src_->is_valid(x)) throw Error(Errc::ContextMismatch, "element not in source field");
    if (src_->is_prime_field()) return x;
    const u64 p = src_->p();
    Elem out = 0;
    for (unsigned i = 0; i < src_->m(); ++i) {
        u64 c = x % p;
        x /= p;
        if (c) out = dst_->add(out, dst_->mul(c, powers_[i]));
    }
    return out;
}

FqElem Embedding::apply(const FqElem& x) const {
    if (!x.ctx()->same_as(*src_)) throw Error(Errc::ContextMismatch, "element not in source field");
    return {dst_, apply(x.code())};
}

Embedding make_embedding(Field src, Field dst) {
    if (src->p() != dst->p()) throw Error(Errc::IncompatibleCharacteristic, "fields have different characteristic");
    if (dst->m() % src->m() != 0) {
        throw Error(Errc::NotASubfield, "F_" + std::to_string(src->q()) + " is not a subfield of F_" + std::to_string(dst->q()));
    }
    if (src->same_as(*dst)) {
        Elem g = dst->generator();
        return Embedding(std::move(src), std::move(dst), g);
    }
    if (src->is_prime_field()) return Embedding(std::move(src), std::move(dst), 1);

    // Prime-subfield codes coincide in both fields, so the modulus lifts coefficient-wise.
    const auto& mod = src->modulus();
    Elem image = 0;
    bool found = false;
    if (dst->q() <= (u64{1} << 16)) {
        for (Elem x = 0; x < dst->q() && !found; ++x) {
            Elem v = 0;
            for (std::size_t i = mod.size(); i-- > 0;) v = dst->add(dst->mul(v, x), mod[i]);
            if (v == 0) {
                image = x;
                found = true;
            }
        }
    } else {
        auto rs = roots(Poly(dst, std::vector<Elem>(mod.begin(), mod.end())));
        if (!rs.empty()) {
            image = rs.front();
            found = true;
        }
    }
    if (!found) throw Error(Errc::InternalError, "source modulus has no root in destination field");
    return Embedding(std::move(src), std::move(dst), image);
}

}  // namespace ffgcd
