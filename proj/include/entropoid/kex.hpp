#pragma once

// Diffie-Hellman style key exchange over the entropoid: both sides raise the
// agreed Sylow generator to secret power indices; palintropy makes the two
// derivations land on the same element. Wire format is the fixed-width
// element encoding, one element per direction.

#include <cstdint>
#include <vector>

#include "entropoid/generators.hpp"

namespace entropoid {

struct KexSuite {
    EntropoidParams E;
    GeneratorCertificate gq; // gq.g is the agreed generator, claimed order q^2
    unsigned base = 3;       // odd, 3 <= base < b_max
};

// Fresh suite: safe prime of exactly lambda bits, random nonzero constants,
// g_q via the Sylow search. Pre base odd >= 3; errors propagate.
KexSuite suite_new(unsigned lambda, unsigned base, RandomSource& rng);

// Suite over fixed, already-agreed parameters.
KexSuite suite_from_params(const EntropoidParams& E,
                           const GeneratorCertificate& gq, unsigned base);

struct KexKeypair {
    PowerIndex secret; // integer part uniform in [1, p-1]
    Element pub;       // g_q ^ secret
};

KexKeypair kex_keygen(const KexSuite& s, RandomSource& rng);

// pow_fast(theirs, mine.secret); throws InvalidPeer when `theirs` sits on
// the zero row/column (membership predicate).
Element kex_derive(const KexSuite& s, const KexKeypair& mine, const Element& theirs);

struct CostMetrics {
    uint64_t star_ops = 0;
    uint64_t field_mults = 0; // 6 per star op
    uint64_t field_adds = 0;  // 6 per star op
};

CostMetrics cost_metrics(const KexSuite& s, const PowerIndex& idx);

} // namespace entropoid
