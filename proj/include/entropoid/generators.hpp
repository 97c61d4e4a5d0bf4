#pragma once

// Generator search (the five-inequality heuristic and its Sylow variant),
// generated-set computation, and the even/odd power parity distinguisher.

#include <cstdint>
#include <set>

#include "entropoid/powindex.hpp"

namespace entropoid {

struct GeneratorCertificate {
    Element g;
    bool checks[5] = {false, false, false, false, false};
    mpz_class claimed_order; // (p-1)^2 for gen, q^2 for gen_q

    bool all_checks() const {
        return checks[0] && checks[1] && checks[2] && checks[3] && checks[4];
    }
};

// Runs the five inequality checks on candidate g:
//   g != g^(p,[0..],2); g*g != g^(p-1,[0..],2); g*(g*g) != g^(p-2,[0..],2);
//   g*(g*g) != (g*g)*g; g*(g*(g*g)) != (g*(g*g))*g.
GeneratorCertificate certify_generator(const EntropoidParams& E, const Element& g);

// Samples candidates off the zero row/column until one passes all five
// checks; pre p safe prime. Throws ExhaustedAttempts.
GeneratorCertificate gen(const EntropoidParams& E, RandomSource& rng,
                         uint64_t max_attempts = 4096);

// The fixed 6-factor shape (g*(g*(g*((g*g)*g)))) that lands in the Sylow
// subquasigroup when g is a full generator.
Element sylow_shape(const EntropoidParams& E, const Element& g);

// g_q = sylow_shape(gen's output); claimed order q^2; the certificate keeps
// the underlying full generator's five check bits. Pre p safe prime, p >= 11.
GeneratorCertificate gen_q(const EntropoidParams& E, RandomSource& rng,
                           uint64_t max_attempts = 4096);

// <x>_2: the base-2 power sequence x, x*x, x*(x*x), ... until it closes.
// Size divides 2(p-1). Pre 2(p-1) <= guard, else TooLarge.
std::set<Element> span2(const EntropoidParams& E, const Element& x,
                        uint64_t guard = 1u << 20);

// <x>: the full *-closure of {x} (all shaped powers), by pairwise fixpoint.
// Size divides (p-1)^2. Pre (p-1)^2 <= guard, else TooLarge.
std::set<Element> span(const EntropoidParams& E, const Element& x,
                       uint64_t guard = 1u << 20);

enum class Parity { Even, Odd };

// Computes y^(p-1,[0..],2): one_star means the integer part of y's index in
// base g is even, the negated unit means odd. Throws Inconclusive when the
// power is neither value (non-units at toy sizes).
Parity parity_test(const EntropoidParams& E,
                   [[maybe_unused]] const Element& g, const Element& y);

} // namespace entropoid
