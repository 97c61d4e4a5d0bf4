#include "entropoid/entropoid.hpp"

#include <cassert>

namespace entropoid {

std::string to_string(const Element& e) {
    return "(" + e.x1.get_str() + "," + e.x2.get_str() + ")";
}

EntropoidParams params_new(const PrimeModulus& m, const mpz_class& a3,
                           const mpz_class& a8, const mpz_class& b2,
                           const mpz_class& b7) {
    EntropoidParams E;
    E.m = m;
    E.a3 = mod_reduce(a3, m);
    E.a8 = mod_reduce(a8, m);
    E.b2 = mod_reduce(b2, m);
    E.b7 = mod_reduce(b7, m);
    if (E.a3 == 0 || E.a8 == 0 || E.b2 == 0 || E.b7 == 0)
        throw InvalidConstant("a3, a8, b2, b7 must be nonzero mod p");

    const mpz_class inv_a8 = mod_inv(E.a8, m);
    const mpz_class inv_b7 = mod_inv(E.b7, m);

    E.c1 = mod_mul(E.a3, mod_mul(mod_sub(E.a8 * E.b2, E.b7, m), inv_a8 * inv_b7, m), m);
    E.c2 = mod_mul(E.a8 * E.b2, inv_b7, m);
    E.c3 = mod_reduce(-(E.b2 * mod_sub(E.a8, E.a3 * E.b7, m)) * inv_a8 * inv_b7, m);
    E.c4 = mod_mul(E.a3 * E.b7, inv_a8, m);

    E.d1 = mod_mul(E.a3, inv_a8, m);
    E.d2 = mod_mul(E.b2, inv_b7, m);
    E.zero_star = {mod_reduce(-E.d1, m), mod_reduce(-E.d2, m)};
    E.one_star = {mod_sub(inv_b7, E.d1, m), mod_sub(inv_a8, E.d2, m)};

#ifndef NDEBUG
    // Deterministic probes: the left unit and the absorbing element behave.
    for (int i = 0; i < 100; ++i) {
        Element x{mod_reduce(mpz_class(i * 37 + 1), m),
                  mod_reduce(mpz_class(i * 53 + 2), m)};
        assert(star(E, E.one_star, x) == x);
        assert(star(E, E.zero_star, x) == E.zero_star);
        assert(star(E, x, E.zero_star) == E.zero_star);
    }
#endif
    return E;
}

void star_mut(const EntropoidParams& E, const Element& x, const Element& y,
              Element& out) {
    static thread_local mpz_class t, r1, r2;
    // r1 = c1 + a3*x2 + y1*(c2 + a8*x2)
    mpz_mul(t.get_mpz_t(), E.a8.get_mpz_t(), x.x2.get_mpz_t());
    mpz_add(t.get_mpz_t(), t.get_mpz_t(), E.c2.get_mpz_t());
    mpz_mul(t.get_mpz_t(), t.get_mpz_t(), y.x1.get_mpz_t());
    mpz_mul(r1.get_mpz_t(), E.a3.get_mpz_t(), x.x2.get_mpz_t());
    mpz_add(r1.get_mpz_t(), r1.get_mpz_t(), E.c1.get_mpz_t());
    mpz_add(r1.get_mpz_t(), r1.get_mpz_t(), t.get_mpz_t());
    mpz_mod(r1.get_mpz_t(), r1.get_mpz_t(), E.m.p.get_mpz_t());
    // r2 = c3 + b2*x1 + y2*(c4 + b7*x1)
    mpz_mul(t.get_mpz_t(), E.b7.get_mpz_t(), x.x1.get_mpz_t());
    mpz_add(t.get_mpz_t(), t.get_mpz_t(), E.c4.get_mpz_t());
    mpz_mul(t.get_mpz_t(), t.get_mpz_t(), y.x2.get_mpz_t());
    mpz_mul(r2.get_mpz_t(), E.b2.get_mpz_t(), x.x1.get_mpz_t());
    mpz_add(r2.get_mpz_t(), r2.get_mpz_t(), E.c3.get_mpz_t());
    mpz_add(r2.get_mpz_t(), r2.get_mpz_t(), t.get_mpz_t());
    mpz_mod(r2.get_mpz_t(), r2.get_mpz_t(), E.m.p.get_mpz_t());

    mpz_swap(out.x1.get_mpz_t(), r1.get_mpz_t());
    mpz_swap(out.x2.get_mpz_t(), r2.get_mpz_t());
}

Element star(const EntropoidParams& E, const Element& x, const Element& y) {
    Element out;
    star_mut(E, x, y, out);
    return out;
}

Element box_add(const EntropoidParams& E, const Element& x, const Element& y) {
    return {mod_reduce(x.x1 + y.x1 + E.d1, E.m),
            mod_reduce(x.x2 + y.x2 + E.d2, E.m)};
}

Element box_sub(const EntropoidParams& E, const Element& x, const Element& y) {
    return {mod_reduce(x.x1 - y.x1 - E.d1, E.m),
            mod_reduce(x.x2 - y.x2 - E.d2, E.m)};
}

Element box_neg(const EntropoidParams& E, const Element& x) {
    return box_sub(E, E.zero_star, x);
}

Element inv_star(const EntropoidParams& E, const Element& x) {
    // x^-1 = ( (1 - a3 b2 - a3 b7 x2) / (a8 (b2 + b7 x2)),
    //          (1 - a3 b2 - a8 b2 x1) / (b7 (a3 + a8 x1)) )
    const mpz_class den1 = mod_mul(E.a8, mod_reduce(E.b2 + E.b7 * x.x2, E.m), E.m);
    const mpz_class den2 = mod_mul(E.b7, mod_reduce(E.a3 + E.a8 * x.x1, E.m), E.m);
    if (den1 == 0 || den2 == 0)
        throw NotInvertible("element on the zero row or column");
    const mpz_class common = mod_reduce(1 - E.a3 * E.b2, E.m);
    const mpz_class num1 = mod_sub(common, E.a3 * E.b7 * x.x2, E.m);
    const mpz_class num2 = mod_sub(common, E.a8 * E.b2 * x.x1, E.m);
    return {mod_div(num1, den1, E.m), mod_div(num2, den2, E.m)};
}

bool is_unit(const EntropoidParams& E, const Element& x) {
    return x.x1 != E.zero_star.x1 && x.x2 != E.zero_star.x2;
}

bool check_entropic(const EntropoidParams& E, int trials, RandomSource& rng) {
    for (int i = 0; i < trials; ++i) {
        const Element x = rand_element(E, rng);
        const Element y = rand_element(E, rng);
        const Element z = rand_element(E, rng);
        const Element w = rand_element(E, rng);
        if (star(E, star(E, x, y), star(E, z, w)) !=
            star(E, star(E, x, z), star(E, y, w)))
            return false;
        if (star(E, x, box_add(E, y, z)) !=
            box_add(E, star(E, x, y), star(E, x, z)))
            return false;
        if (star(E, box_add(E, y, z), x) !=
            box_add(E, star(E, y, x), star(E, z, x)))
            return false;
    }
    return true;
}

std::set<Element> sqrt_units(const EntropoidParams& E) {
    if (E.m.p > (mpz_class(1) << 20)) throw TooLarge("sqrt_units needs p <= 2^20");
    std::set<Element> out;
    const Element& u = E.one_star;
    // x*x = (c1 + c2 x1 + x2(a3 + a8 x1), c3 + b2 x1 + x2(c4 + b7 x1)).
    for (mpz_class x1 = 0; x1 < E.m.p; ++x1) {
        const mpz_class den = mod_reduce(E.a3 + E.a8 * x1, E.m);
        if (den == 0) continue; // zero row squares to zero_star
        const mpz_class x2 =
            mod_div(mod_sub(u.x1, E.c1 + E.c2 * x1, E.m), den, E.m);
        const mpz_class second =
            mod_reduce(E.c3 + E.b2 * x1 + x2 * (E.c4 + E.b7 * x1), E.m);
        if (second == u.x2) out.insert({x1, x2});
    }
    return out;
}

Element rand_element(const EntropoidParams& E, RandomSource& rng) {
    return {rand_below(E.m.p, rng), rand_below(E.m.p, rng)};
}

Element rand_unit(const EntropoidParams& E, RandomSource& rng) {
    return {rand_field_element(E.m, rng, {E.zero_star.x1}),
            rand_field_element(E.m, rng, {E.zero_star.x2})};
}

size_t element_bytes(const EntropoidParams& E) {
    return 2 * ((E.m.bits + 7) / 8);
}

namespace {

void export_fixed(const mpz_class& v, uint8_t* out, size_t width) {
    size_t count = 0;
    for (size_t i = 0; i < width; ++i) out[i] = 0;
    if (v != 0) mpz_export(out, &count, -1, 1, 0, 0, v.get_mpz_t());
    assert(count <= width);
    (void)count;
}

} // namespace

std::vector<uint8_t> encode_element(const EntropoidParams& E, const Element& x) {
    const size_t w = element_bytes(E) / 2;
    std::vector<uint8_t> out(2 * w);
    export_fixed(x.x1, out.data(), w);
    export_fixed(x.x2, out.data() + w, w);
    return out;
}

Element decode_element(const EntropoidParams& E, const uint8_t* data, size_t len) {
    const size_t w = element_bytes(E) / 2;
    if (len != 2 * w) throw BadLength("element must be exactly " +
                                      std::to_string(2 * w) + " bytes");
    Element e;
    mpz_import(e.x1.get_mpz_t(), w, -1, 1, 0, 0, data);
    mpz_import(e.x2.get_mpz_t(), w, -1, 1, 0, 0, data + w);
    if (e.x1 >= E.m.p || e.x2 >= E.m.p)
        throw NonCanonical("component not reduced mod p");
    return e;
}

Element decode_element(const EntropoidParams& E, const std::vector<uint8_t>& bytes) {
    return decode_element(E, bytes.data(), bytes.size());
}

} // namespace entropoid
