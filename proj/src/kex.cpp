#include "entropoid/kex.hpp"

namespace entropoid {

namespace {

void check_base(const KexSuite& s) {
    if (s.base < 3 || s.base % 2 == 0)
        throw InvalidConstant("kex base must be odd and >= 3");
    if (s.base >= b_max(s.E))
        throw InvalidConstant("kex base must be below b_max");
}

} // namespace

KexSuite suite_new(unsigned lambda, unsigned base, RandomSource& rng) {
    const PrimeModulus m = gen_safe_prime(lambda, rng);
    const std::vector<mpz_class> zero{mpz_class(0)};
    EntropoidParams E = params_new(m, rand_field_element(m, rng, zero),
                                   rand_field_element(m, rng, zero),
                                   rand_field_element(m, rng, zero),
                                   rand_field_element(m, rng, zero));
    KexSuite s;
    s.E = std::move(E);
    s.gq = gen_q(s.E, rng);
    s.base = base;
    check_base(s);
    return s;
}

KexSuite suite_from_params(const EntropoidParams& E,
                           const GeneratorCertificate& gq, unsigned base) {
    KexSuite s;
    s.E = E;
    s.gq = gq;
    s.base = base;
    check_base(s);
    return s;
}

KexKeypair kex_keygen(const KexSuite& s, RandomSource& rng) {
    KexKeypair kp;
    // Integer part uniform in Z_p^*: random_index draws [1, p), i.e. [1, p-1].
    kp.secret = random_index(s.base, s.E.m.p, rng);
    kp.pub = pow_fast(s.E, s.gq.g, kp.secret);
    return kp;
}

Element kex_derive(const KexSuite& s, const KexKeypair& mine, const Element& theirs) {
    if (!is_unit(s.E, theirs))
        throw InvalidPeer("peer element on the zero row or column");
    return pow_fast(s.E, theirs, mine.secret);
}

CostMetrics cost_metrics(const KexSuite& s, const PowerIndex& idx) {
    (void)s;
    CostMetrics c;
    c.star_ops = op_count(idx);
    c.field_mults = 6 * c.star_ops;
    c.field_adds = 6 * c.star_ops;
    return c;
}

} // namespace entropoid
