#include "ffgcd/bigint.hpp"

#include <cmath>

namespace ffgcd {

BigInt big_pow(const BigInt& base, u64 exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
    auto num = boost::multiprecision::numerator(x);
    auto den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<u64, unsigned>> factor_u64(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
        if (n % d) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

u64 euler_phi_u64(u64 n) {
    u64 phi = n;
    for (auto [prime, e] : factor_u64(n)) phi = phi / prime * (prime - 1);
    return phi;
}

int moebius_u64(u64 n) {
    int mu = 1;
    for (auto [prime, e] : factor_u64(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

std::pair<u64, unsigned> prime_power_decompose(u64 q) {
    if (q < 2) return {0, 0};
    auto f = factor_u64(q);
    if (f.size() != 1) return {0, 0};
    return f.front();
}

double log_big(const BigInt& x) {
    if (x <= 0) return -INFINITY;
    auto bits = boost::multiprecision::msb(x);
    if (bits < 60) return std::log(static_cast<double>(static_cast<u64>(x)));
    auto shift = bits - 60;
    BigInt top = x >> shift;
    return std::log(static_cast<double>(static_cast<u64>(top))) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace ffgcd
