#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffgcd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigInt big_pow(const BigInt& base, u64 exp);
std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(u64 n);

u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 a, u64 e, u64 m);

// Prime factorization by trial division, ascending primes with multiplicities.
std::vector<std::pair<u64, unsigned>> factor_u64(u64 n);

u64 euler_phi_u64(u64 n);
int moebius_u64(u64 n);

// Returns (p, m) with q = p^m, or nullopt-like (0, 0) when q is not a prime power.
std::pair<u64, unsigned> prime_power_decompose(u64 q);

// Natural logarithm of a positive big integer, accurate to double precision.
double log_big(const BigInt& x);

}  // namespace ffgcd
