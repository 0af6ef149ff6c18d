#pragma once

// r-th power residue symbols modulo monic irreducibles of F_q[T], and an exhaustive check of
// the implication  pi = 1 (mod mu)  =>  mu is an r-th power modulo pi  (r odd, r | q - 1).

#include <vector>

#include "ffgcd/ffield.hpp"
#include "ffgcd/fqpoly.hpp"
#include "ffgcd/irreducibles.hpp"

namespace ffgcd {

// Residue rings up to this size may be searched exhaustively for r-th roots.
inline constexpr u64 kBruteForceLimit = u64{1} << 16;

// alpha^((q^deg pi - 1)/r) mod pi, which is a constant in mu_r. Zero when pi | alpha.
FqElem residue_symbol(const Poly& alpha, const Poly& pi, u64 r);

bool is_rth_power_mod(const Poly& mu, const Poly& pi, u64 r);

// Searches every X in F_q[T]/pi for X^r = mu. BudgetExceeded above kBruteForceLimit.
bool is_rth_power_exhaustive(const Poly& mu, const Poly& pi, u64 r);

struct ReciprocityViolation {
    Poly pi;
    FqElem symbol;
};

struct ReciprocityReport {
    Field ctx;
    u64 r = 0;
    Poly mu;
    unsigned degree_bound = 0;
    u64 tested = 0;
    std::vector<ReciprocityViolation> violations;
    // Primes whose answer was also confirmed by exhaustive search, and disagreements found.
    u64 crosschecked = 0;
    u64 crosscheck_mismatches = 0;
};

struct ReciprocityOptions {
    bool crosscheck = false;
    EnumOptions enumeration;
};

// Walks S_{q,N}(1, mu) for 1 <= N <= degree_bound. mu must be monic and nonconstant, r odd with
// r | q - 1.
ReciprocityReport check_reciprocity(const Poly& mu, u64 r, unsigned degree_bound, const ReciprocityOptions& opts = {});

}  // namespace ffgcd
