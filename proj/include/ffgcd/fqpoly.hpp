#pragma once

// Dense univariate polynomials over a FieldCtx.

#include <string>
#include <string_view>
#include <vector>

#include "ffgcd/bigint.hpp"
#include "ffgcd/ffield.hpp"

namespace ffgcd {

inline constexpr u64 kDefaultDegreeCap = 20000;
// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

class Poly {
   public:
    explicit Poly(Field ctx) : ctx_(std::move(ctx)) {}
    // Little-endian coefficient codes; trailing zeros are trimmed.
    Poly(Field ctx, std::vector<Elem> coeffs);

    static Poly constant(Field ctx, Elem c);
    static Poly monomial(Field ctx, Elem c, std::size_t k);
    // The indeterminate T.
    static Poly variable(Field ctx) { return monomial(std::move(ctx), 1, 1); }
    static Poly one(Field ctx) { return constant(std::move(ctx), 1); }

    const Field& ctx() const noexcept { return ctx_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    FqElem coeff(std::size_t i) const { return {ctx_, (*this)[i]}; }

    friend bool operator==(const Poly& f, const Poly& g) noexcept {
        return f.c_ == g.c_ && f.ctx_->same_as(*g.ctx_);
    }

   private:
    void trim() noexcept {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Field ctx_;
    std::vector<Elem> c_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator-(const Poly& f);
Poly operator*(const Poly& f, const Poly& g);
Poly scale(const Poly& f, Elem c);

DivRem divrem(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);  // quotient
Poly operator%(const Poly& f, const Poly& g);  // remainder
bool divides(const Poly& d, const Poly& f);

Poly monic(const Poly& f);
Poly poly_gcd(const Poly& f, const Poly& g);
Poly poly_lcm(const Poly& f, const Poly& g);

Poly mulmod(const Poly& f, const Poly& g, const Poly& m);
Poly poly_powmod(const Poly& f, const BigInt& e, const Poly& m);
Poly poly_pow(const Poly& f, u64 e);
// f^e - 1 fully expanded; DegreeCapExceeded (carrying the required degree) when e*deg f > cap.
Poly poly_pow_sub1(const Poly& f, const BigInt& e, u64 degree_cap = kDefaultDegreeCap);

Poly derivative(const Poly& f);
Elem evaluate(const Poly& f, Elem x);
// f(g(T)).
Poly compose(const Poly& f, const Poly& g);

Poly lift_poly(const Poly& f, const Embedding& emb);

Poly parse_poly(std::string_view text, const Field& ctx);
std::string format_poly(const Poly& f);

// The "coefficient order" used for enumeration and sorting: degree first, then coefficient
// codes from the top down.
bool poly_less(const Poly& f, const Poly& g) noexcept;

}  // namespace ffgcd
