#pragma once

// Prime field layer. Elements are canonical residues in [0, p) held in
// mpz_class; all operations reduce fully before returning.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "entropoid/errors.hpp"
#include "entropoid/rng.hpp"

namespace entropoid {

struct PrimeModulus {
    mpz_class p;
    mpz_class q;        // (p-1)/2 when p is a safe prime, else 0
    unsigned bits = 0;  // bit length of p
    bool safe = false;

    bool operator==(const PrimeModulus& o) const { return p == o.p; }
};

// Builds the modulus record for a known prime; computes bits and the safe
// prime flag. Throws InvalidConstant if p < 3 or p is composite.
PrimeModulus modulus_from_prime(const mpz_class& p);

// Canonical residue of v mod p (result in [0, p) even for negative v).
mpz_class mod_reduce(const mpz_class& v, const PrimeModulus& m);

mpz_class mod_add(const mpz_class& a, const mpz_class& b, const PrimeModulus& m);
mpz_class mod_sub(const mpz_class& a, const mpz_class& b, const PrimeModulus& m);
mpz_class mod_mul(const mpz_class& a, const mpz_class& b, const PrimeModulus& m);

// Multiplicative inverse mod p; throws ZeroInverse when a == 0 (mod p).
mpz_class mod_inv(const mpz_class& a, const PrimeModulus& m);

// a/b mod p, i.e. a * b^-1; throws ZeroInverse when b == 0 (mod p).
mpz_class mod_div(const mpz_class& a, const mpz_class& b, const PrimeModulus& m);

// Miller-Rabin based compositeness test with error below 2^-128.
bool is_probable_prime(const mpz_class& n);

// True iff n and (n-1)/2 both pass is_probable_prime; pre n >= 5.
bool is_safe_prime(const mpz_class& n);

// Random safe prime with exactly `bits` bits (top bit set). Samples q as an
// odd prime in [2^(bits-2), 2^(bits-1)) and tests p = 2q + 1. Throws
// ExhaustedAttempts when the candidate budget runs out.
PrimeModulus gen_safe_prime(unsigned bits, RandomSource& rng,
                            uint64_t max_attempts = 4'000'000);

// Uniform integer in [0, bound) by rejection sampling; pre bound > 0.
mpz_class rand_below(const mpz_class& bound, RandomSource& rng);

// Uniform element of [0, p) avoiding the values in `exclude`.
mpz_class rand_field_element(const PrimeModulus& m, RandomSource& rng,
                             const std::vector<mpz_class>& exclude = {});

} // namespace entropoid
