#pragma once

// Cryptanalysis and combinatorics lab: discrete-log style solvers over power
// indices, pattern-space partitions with their entropies, the even/odd base
// dichotomy experiment, and the toy meet-in-the-middle forgery attack.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "entropoid/sig.hpp"

namespace entropoid {

// Randomized solver: samples (base in [3, b_max], a in [1,(p-1)^2], uniform
// pattern) until pow_fast(g, idx) == y; nullopt after `budget` attempts.
std::optional<PowerIndex> delp_random(const EntropoidParams& E, const Element& g,
                                      const Element& y, uint64_t budget,
                                      RandomSource& rng);

// Exhaustive solver: iterates a = 2..(p-1)^2 and every pattern of the digit
// length of a, returning the first index with pow_fast(g, idx) == y.
// Pre base odd >= 3, (p-1)^2 <= 2^20, else TooLarge.
std::optional<PowerIndex> delp_brute(const EntropoidParams& E, const Element& g,
                                     const Element& y, unsigned base);

// Partition of the level-i pattern space: evaluates g^(base^(i-1), P, base)
// for all (base-1)^i patterns P, groups by value, fills class sizes and the
// three entropies. Member pattern strings kept when keep_members.
// Pre (base-1)^i <= 2^22, else TooLarge.
PartitionReport partition_xi(const EntropoidParams& E, const Element& g,
                             unsigned base, unsigned level,
                             bool keep_members = false);

// Entropies in bits over an explicit distribution; probabilities must be
// nonnegative and sum to 1 within 1e-12, else BadDistribution.
double entropy_shannon(const std::vector<double>& probs);
double entropy_renyi(const std::vector<double>& probs, double alpha);
double entropy_min(const std::vector<double>& probs);
// Fills report.h1/h2/hmin from its class sizes.
void fill_entropies(PartitionReport& report);

// Conjectured max class size for even bases: (b-1)((b-1)^(i-1) - (b-2)^(i-1)).
mpz_class conjecture3_predict(unsigned base, unsigned level);
// True iff the measured max class size of partition_xi equals the prediction.
bool conjecture3_check(const EntropoidParams& E, const Element& g,
                       unsigned base, unsigned level);

// Birthday estimate of the collision entropy of the value distribution at a
// random exponent: per trial, fix a random integer part, draw random
// full-length patterns until a value repeats (T draws), estimate
// 2*log2(T) - 1; returns the mean over `trials`.
double collision_entropy_experiment(const EntropoidParams& E, const Element& g,
                                    unsigned base, RandomSource& rng,
                                    uint64_t trials);

// Size grids of <x>_2 and <x> over all of F_p x F_p (rows x1, columns x2).
struct GridReport {
    mpz_class p;
    Element zero_star; // marks the excluded row/column
    std::vector<std::vector<uint64_t>> span2_sizes;
    std::vector<std::vector<uint64_t>> span_sizes;
    uint64_t max_span2 = 0;
    uint64_t max_span = 0;
};
// Pre p <= 64 (full p^2 closure enumeration), else TooLarge.
GridReport grid_report(const EntropoidParams& E);

// CSV with schema: base, i, r_i, n_ij list, H1, H2, Hmin. The n_ij list is
// semicolon-joined inside one quoted field.
void write_partition_csv_header(std::ostream& os);
void write_partition_csv_row(std::ostream& os, const PartitionReport& report);

// One meet-in-the-middle run against scheme 1 at toy size: T1 holds p-1
// pairs (z, z^B), T2 holds p-1 rows (I, M, H, (y*I)^H). found_root flags a
// direct root hit z^B = y; success means some collision z^B = (y*I)^H gave a
// signature that verifies. Pre p <= 2^14, else TooLarge.
struct MitmResult {
    bool success = false;
    bool found_root = false;
    size_t t1_rows = 0, t2_rows = 0;
    uint64_t trials = 0; // rows built across both tables
    std::vector<uint8_t> forged_msg;
    Signature forged; // valid only when success
};
MitmResult mitm_toy_attack(const SigParams& P, RandomSource& rng);

struct MitmStats {
    int runs = 0;
    int successes = 0;
    int lucky_roots = 0;
    double success_rate = 0.0;
};
MitmStats mitm_success_rate(const SigParams& P, RandomSource& rng, int runs);

} // namespace entropoid
