#pragma once

// Core algebra: the two-component structure over F_p x F_p with the
// non-commutative, non-associative product * (entropic: satisfies the
// interchange law) and the abelian addition [+] it distributes over.
//
// Parameters (a3, a8, b2, b7) with a3, a8, b2, b7 all nonzero define
//   x * y = ( c1 + a3*x2 + y1*(c2 + a8*x2),
//             c3 + b2*x1 + y2*(c4 + b7*x1) )
// where c1 = a3(a8 b2 - b7)/(a8 b7), c2 = a8 b2 / b7,
//       c3 = -b2(a8 - a3 b7)/(a8 b7), c4 = a3 b7 / a8.
// The absorbing zero is (-a3/a8, -b2/b7) and the left unit is
// (1/b7 - a3/a8, 1/a8 - b2/b7); every element off the zero row/column has a
// two-sided inverse relative to the unit.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "entropoid/field.hpp"

namespace entropoid {

struct Element {
    mpz_class x1, x2;

    bool operator==(const Element& o) const { return x1 == o.x1 && x2 == o.x2; }
    bool operator!=(const Element& o) const { return !(*this == o); }
    bool operator<(const Element& o) const {
        return x1 < o.x1 || (x1 == o.x1 && x2 < o.x2);
    }
};

std::string to_string(const Element& e);

// Mixes the low limbs; fine for hash containers of reduced elements.
struct ElementHash {
    size_t operator()(const Element& e) const {
        uint64_t a = e.x1.get_mpz_t()->_mp_size ? mpz_getlimbn(e.x1.get_mpz_t(), 0) : 0;
        uint64_t b = e.x2.get_mpz_t()->_mp_size ? mpz_getlimbn(e.x2.get_mpz_t(), 0) : 0;
        uint64_t h = a * 0x9e3779b97f4a7c15ull;
        h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<size_t>(h);
    }
};

struct EntropoidParams {
    PrimeModulus m;
    mpz_class a3, a8, b2, b7;
    // Precomputed product coefficients, see header comment.
    mpz_class c1, c2, c3, c4;
    mpz_class d1, d2;  // a3/a8 and b2/b7, the [+] offsets
    Element zero_star; // absorbing element, also the [+] neutral
    Element one_star;  // left unit for *, two-sided for inverses
};

// Validates p prime and a3, a8, b2, b7 nonzero mod p, then precomputes the
// product coefficients and distinguished elements. Throws InvalidConstant.
EntropoidParams params_new(const PrimeModulus& m, const mpz_class& a3,
                           const mpz_class& a8, const mpz_class& b2,
                           const mpz_class& b7);

// The product. star_mut is aliasing-safe (out may be x or y) and avoids
// temporary churn in hot loops.
Element star(const EntropoidParams& E, const Element& x, const Element& y);
void star_mut(const EntropoidParams& E, const Element& x, const Element& y,
              Element& out);

// Abelian addition, its inverse, and negation:
//   x [+] y = (x1 + y1 + a3/a8, x2 + y2 + b2/b7)
Element box_add(const EntropoidParams& E, const Element& x, const Element& y);
Element box_sub(const EntropoidParams& E, const Element& x, const Element& y);
Element box_neg(const EntropoidParams& E, const Element& x);

// Two-sided *-inverse relative to one_star; throws NotInvertible exactly on
// the zero row/column (x1 = -a3/a8 or x2 = -b2/b7).
Element inv_star(const EntropoidParams& E, const Element& x);

// True iff x avoids the zero row and column (x is in the cancellative part).
bool is_unit(const EntropoidParams& E, const Element& x);

// Randomized check of the interchange law (x*y)*(z*w) == (x*z)*(y*w) plus
// two-sided distributivity over [+]; returns false on the first violation.
bool check_entropic(const EntropoidParams& E, int trials, RandomSource& rng);

// All x with x * x == one_star, found by solving the first coordinate for x2
// row by row; size is p - 1. Guard: p <= 2^20, else TooLarge.
std::set<Element> sqrt_units(const EntropoidParams& E);

// Uniform element of F_p x F_p.
Element rand_element(const EntropoidParams& E, RandomSource& rng);
// Uniform element avoiding the zero row and column.
Element rand_unit(const EntropoidParams& E, RandomSource& rng);

// Fixed-width wire form: x1 then x2, each ceil(bits/8) bytes little-endian.
size_t element_bytes(const EntropoidParams& E);
std::vector<uint8_t> encode_element(const EntropoidParams& E, const Element& x);
// Throws BadLength on size mismatch, NonCanonical if a component is >= p.
Element decode_element(const EntropoidParams& E, const uint8_t* data, size_t len);
Element decode_element(const EntropoidParams& E, const std::vector<uint8_t>& bytes);

} // namespace entropoid
