#pragma once

// Finite fields F_{p^m} presented as F_p[g]/(modulus).
//
// Elements are passed around as integer codes: the element c_0 + c_1 g + ... + c_{m-1} g^{m-1}
// has code c_0 + c_1 p + ... + c_{m-1} p^{m-1}. The prime subfield is exactly the codes [0, p).
// Codes are only meaningful together with the FieldCtx they came from; FqElem bundles the two.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffgcd/bigint.hpp"
#include "ffgcd/error.hpp"

namespace ffgcd {

using Elem = u64;

inline constexpr u64 kDefaultCardinalityCap = u64{1} << 40;
// Codes and products of prime-field residues must fit the word arithmetic below.
inline constexpr u64 kHardCardinalityLimit = u64{1} << 62;
// Extension fields up to this size get log/antilog tables.
inline constexpr u64 kTableLimit = u64{1} << 20;

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

class FieldCtx {
   public:
    u64 p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    u64 q() const noexcept { return q_; }
    BigInt cardinality() const { return BigInt(q_); }
    bool is_prime_field() const noexcept { return m_ == 1; }

    // Monic modulus over F_p, little-endian, m + 1 entries. Empty for prime fields.
    const std::vector<u64>& modulus() const noexcept { return modulus_; }

    bool same_as(const FieldCtx& other) const noexcept {
        return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
    }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    // The generator symbol g; for prime fields there is none and this is 1.
    Elem generator() const noexcept { return m_ == 1 ? 1 : p_; }
    Elem from_int(u64 v) const noexcept { return v % p_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (m_ == 1) {
            u64 s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept {
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        if (p_ == 2) return a;
        return neg_digits(a);
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (m_ == 1) {
            if (p_ <= 0xFFFFFFFFULL) return a * b % p_;
            return mulmod_u64(a, b, p_);
        }
        if (!exp_.empty()) {
            if (a == 0 || b == 0) return 0;
            return exp_[log_[a] + log_[b]];
        }
        return mul_generic(a, b);
    }
    // Throws DivisionByZero for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, u64 e) const noexcept;
    Elem pow(Elem a, const BigInt& e) const;

    // Inverse Frobenius a -> a^(q/p), the unique p-th root.
    Elem pth_root(Elem a) const noexcept;

    std::vector<u64> digits(Elem a) const;
    Elem from_digits(std::span<const u64> d) const;

    std::string format(Elem a) const;
    Elem parse(std::string_view text) const;

    bool is_valid(Elem a) const noexcept { return a < q_; }

   private:
    friend Field make_field_with_modulus(u64 p, std::vector<u64> modulus, u64 cardinality_cap);
    friend Field make_field(u64 p, unsigned m, u64 cardinality_cap);

    FieldCtx(u64 p, unsigned m, std::vector<u64> modulus);

    Elem add_digits(Elem a, Elem b) const noexcept;
    Elem neg_digits(Elem a) const noexcept;
    Elem mul_generic(Elem a, Elem b) const noexcept;
    void build_tables();

    u64 p_;
    unsigned m_;
    u64 q_;
    std::vector<u64> modulus_;
    std::vector<u64> pow_p_;  // p^i for i < m
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;  // length 2(q-1)
};

// Field of order p^m with the canonical modulus: the first monic irreducible of degree m in
// ascending order of the code (c_{m-1}, ..., c_0).
Field make_field(u64 p, unsigned m, u64 cardinality_cap = kDefaultCardinalityCap);
// Field with a caller-chosen modulus (monic, little-endian, irreducible over F_p).
Field make_field_with_modulus(u64 p, std::vector<u64> modulus, u64 cardinality_cap = kDefaultCardinalityCap);
// Decomposes q = p^m first; NotAPrimePower otherwise.
Field make_field_q(u64 q, u64 cardinality_cap = kDefaultCardinalityCap);

// An element bundled with its field.
class FqElem {
   public:
    FqElem(Field ctx, Elem code);

    const Field& ctx() const noexcept { return ctx_; }
    Elem code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }
    // Length-m coefficient vector in powers of g, little-endian.
    std::vector<u64> coeffs() const { return ctx_->digits(code_); }
    std::string to_string() const { return ctx_->format(code_); }

    friend FqElem operator+(const FqElem& x, const FqElem& y);
    friend FqElem operator-(const FqElem& x, const FqElem& y);
    friend FqElem operator*(const FqElem& x, const FqElem& y);
    friend FqElem operator/(const FqElem& x, const FqElem& y);
    friend bool operator==(const FqElem& x, const FqElem& y) noexcept {
        return x.code_ == y.code_ && x.ctx_->same_as(*y.ctx_);
    }

   private:
    Field ctx_;
    Elem code_;
};

FqElem parse_elem(const Field& ctx, std::string_view text);
FqElem elem_pow(const FqElem& x, const BigInt& e);
// Least e >= 1 with x^e = 1. Throws ZeroElement.
u64 multiplicative_order(const FqElem& x);

// Inclusion F_{p^m} -> F_{p^M}, m | M, sending g to a fixed root of the source modulus.
class Embedding {
   public:
    const Field& src() const noexcept { return src_; }
    const Field& dst() const noexcept { return dst_; }
    Elem image_of_generator() const noexcept { return image_; }

    Elem apply(Elem x) const;
    FqElem apply(const FqElem& x) const;

   private:
    friend Embedding make_embedding(Field src, Field dst);
    Embedding(Field src, Field dst, Elem image);

    Field src_;
    Field dst_;
    Elem image_;
    std::vector<Elem> powers_;  // image^i for i < src.m
};

// The generator goes to the least-code root of src.modulus in dst.
Embedding make_embedding(Field src, Field dst);

}  // namespace ffgcd
