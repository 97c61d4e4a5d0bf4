#include "entropoid/field.hpp"

#include <algorithm>

namespace entropoid {

namespace {

// GMP runs trial division, BPSW, then extra Miller-Rabin rounds; 64 reps
// puts the error bound far below 2^-128.
constexpr int kPrimeReps = 64;

} // namespace

bool is_probable_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), kPrimeReps) != 0;
}

bool is_safe_prime(const mpz_class& n) {
    if (n < 5 || mpz_even_p(n.get_mpz_t())) return false;
    if (!is_probable_prime(n)) return false;
    mpz_class q = (n - 1) / 2;
    return is_probable_prime(q);
}

PrimeModulus modulus_from_prime(const mpz_class& p) {
    if (p < 3 || !is_probable_prime(p))
        throw InvalidConstant("modulus must be an odd prime >= 3");
    PrimeModulus m;
    m.p = p;
    m.bits = static_cast<unsigned>(mpz_sizeinbase(p.get_mpz_t(), 2));
    mpz_class q = (p - 1) / 2;
    if (is_probable_prime(q)) {
        m.q = q;
        m.safe = true;
    }
    return m;
}

mpz_class mod_reduce(const mpz_class& v, const PrimeModulus& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.p.get_mpz_t());
    return r;
}

mpz_class mod_add(const mpz_class& a, const mpz_class& b, const PrimeModulus& m) {
    return mod_reduce(a + b, m);
}

mpz_class mod_sub(const mpz_class& a, const mpz_class& b, const PrimeModulus& m) {
    return mod_reduce(a - b, m);
}

mpz_class mod_mul(const mpz_class& a, const mpz_class& b, const PrimeModulus& m) {
    return mod_reduce(a * b, m);
}

mpz_class mod_inv(const mpz_class& a, const PrimeModulus& m) {
    mpz_class r = mod_reduce(a, m);
    if (r == 0) throw ZeroInverse();
    mpz_class out;
    if (mpz_invert(out.get_mpz_t(), r.get_mpz_t(), m.p.get_mpz_t()) == 0)
        throw ZeroInverse("no inverse modulo p");
    return out;
}

mpz_class mod_div(const mpz_class& a, const mpz_class& b, const PrimeModulus& m) {
    return mod_mul(a, mod_inv(b, m), m);
}

PrimeModulus gen_safe_prime(unsigned bits, RandomSource& rng, uint64_t max_attempts) {
    if (bits < 3) throw InvalidConstant("safe primes need at least 3 bits");
    // q gets exactly bits-1 bits so p = 2q + 1 has exactly `bits`.
    const unsigned qbits = bits - 1;
    for (uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        mpz_class q = rand_below(mpz_class(1) << qbits, rng);
        mpz_setbit(q.get_mpz_t(), qbits - 1); // top bit
        mpz_setbit(q.get_mpz_t(), 0);         // odd
        if (!is_probable_prime(q)) continue;
        mpz_class p = 2 * q + 1;
        if (!is_probable_prime(p)) continue;
        PrimeModulus m;
        m.p = p;
        m.q = q;
        m.bits = static_cast<unsigned>(mpz_sizeinbase(p.get_mpz_t(), 2));
        m.safe = true;
        return m;
    }
    throw ExhaustedAttempts("no safe prime found within attempt budget");
}

mpz_class rand_below(const mpz_class& bound, RandomSource& rng) {
    const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const size_t nbytes = (bits + 7) / 8;
    const unsigned top_mask =
        (bits % 8 == 0) ? 0xff : ((1u << (bits % 8)) - 1);
    std::vector<uint8_t> buf(nbytes);
    mpz_class v;
    do {
        rng.fill(buf.data(), nbytes);
        buf[nbytes - 1] &= static_cast<uint8_t>(top_mask);
        mpz_import(v.get_mpz_t(), nbytes, -1, 1, 0, 0, buf.data());
    } while (v >= bound);
    return v;
}

mpz_class rand_field_element(const PrimeModulus& m, RandomSource& rng,
                             const std::vector<mpz_class>& exclude) {
    for (;;) {
        mpz_class v = rand_below(m.p, rng);
        if (std::find(exclude.begin(), exclude.end(), v) == exclude.end())
            return v;
    }
}

} // namespace entropoid
