#include "entropoid/generators.hpp"

#include <vector>

namespace entropoid {

GeneratorCertificate certify_generator(const EntropoidParams& E, const Element& g) {
    GeneratorCertificate cert;
    cert.g = g;
    cert.claimed_order = (E.m.p - 1) * (E.m.p - 1);

    const Element gg = star(E, g, g);
    const Element g_gg = star(E, g, gg);        // g*(g*g)
    const Element gg_g = star(E, gg, g);        // (g*g)*g
    const Element g_g_gg = star(E, g, g_gg);    // g*(g*(g*g))
    const Element g_gg_g = star(E, g_gg, g);    // (g*(g*g))*g

    cert.checks[0] = g != pow_fast(E, g, base2_index(E.m.p));
    cert.checks[1] = gg != pow_fast(E, g, base2_index(E.m.p - 1));
    cert.checks[2] = g_gg != pow_fast(E, g, base2_index(E.m.p - 2));
    cert.checks[3] = g_gg != gg_g;
    cert.checks[4] = g_g_gg != g_gg_g;
    return cert;
}

GeneratorCertificate gen(const EntropoidParams& E, RandomSource& rng,
                         uint64_t max_attempts) {
    if (!E.m.safe) throw InvalidConstant("gen requires a safe prime modulus");
    for (uint64_t i = 0; i < max_attempts; ++i) {
        const Element g = rand_unit(E, rng);
        GeneratorCertificate cert = certify_generator(E, g);
        if (cert.all_checks()) return cert;
    }
    throw ExhaustedAttempts("no generator candidate passed the five checks");
}

Element sylow_shape(const EntropoidParams& E, const Element& g) {
    Element t = star(E, star(E, g, g), g); // (g*g)*g
    t = star(E, g, t);
    t = star(E, g, t);
    return star(E, g, t);
}

GeneratorCertificate gen_q(const EntropoidParams& E, RandomSource& rng,
                           uint64_t max_attempts) {
    if (!E.m.safe || E.m.p < 11)
        throw InvalidConstant("gen_q requires a safe prime p >= 11");
    GeneratorCertificate cert = gen(E, rng, max_attempts);
    cert.g = sylow_shape(E, cert.g);
    cert.claimed_order = E.m.q * E.m.q;
    return cert;
}

std::set<Element> span2(const EntropoidParams& E, const Element& x, uint64_t guard) {
    const mpz_class period = 2 * (E.m.p - 1);
    if (period > guard) throw TooLarge("span2 exceeds enumeration guard");

    std::set<Element> out;
    // The base-2 power sequence is eventually periodic with period dividing
    // 2(p-1); a full period window with no new values certifies closure.
    const uint64_t window = period.get_ui();
    uint64_t since_new = 0;
    for (mpz_class a = 1; since_new <= window; ++a) {
        if (a > 64 * mpz_class(window))
            throw Error("span2 failed to close within the expected period");
        if (out.insert(pow_fast(E, x, base2_index(a))).second) since_new = 0;
        else ++since_new;
    }
    return out;
}

std::set<Element> span(const EntropoidParams& E, const Element& x, uint64_t guard) {
    if ((E.m.p - 1) * (E.m.p - 1) > guard)
        throw TooLarge("span exceeds enumeration guard");

    std::vector<Element> elems{x};
    std::set<Element> seen{x};
    // Pairwise closure: every bracketed power splits as a product of two
    // smaller ones, so closing under left+right products of known pairs
    // reaches every shaped power.
    for (size_t next = 0; next < elems.size(); ++next) {
        const Element e = elems[next];
        for (size_t i = 0; i <= next; ++i) {
            for (const Element& v : {star(E, e, elems[i]), star(E, elems[i], e)}) {
                if (seen.insert(v).second) elems.push_back(v);
            }
        }
    }
    return seen;
}

Parity parity_test(const EntropoidParams& E,
                   [[maybe_unused]] const Element& g, const Element& y) {
    const Element v = pow_fast(E, y, base2_index(E.m.p - 1));
    if (v == E.one_star) return Parity::Even;
    if (v == box_neg(E, E.one_star)) return Parity::Odd;
    throw Inconclusive("y^(p-1) is neither the unit nor its negation");
}

} // namespace entropoid
