#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "entropoid/params_std.hpp"
#include "entropoid/powindex.hpp"

using namespace entropoid;

TEST_CASE("index construction and validation") {
    const PowerIndex idx = make_index(3, {2, 1}, {1, 0});
    CHECK(index_value(idx) == 5);

    CHECK_THROWS_AS(make_index(1, {1}, {0}), InvalidIndex);      // base too small
    CHECK_THROWS_AS(make_index(3, {}, {}), InvalidIndex);        // no digits
    CHECK_THROWS_AS(make_index(3, {3}, {0}), InvalidIndex);      // digit >= base
    CHECK_THROWS_AS(make_index(3, {1, 0}, {0, 0}), InvalidIndex); // trailing zero
    CHECK_THROWS_AS(make_index(3, {1, 1}, {0}), InvalidIndex);   // length mismatch
    CHECK_THROWS_AS(make_index(3, {1, 1}, {0, 2}), InvalidIndex); // pattern > base-2

    const PowerIndex b2 = base2_index(6);
    CHECK(b2.base == 2);
    CHECK(b2.digits == std::vector<uint32_t>{0, 1, 1});
    CHECK(b2.pattern == std::vector<uint32_t>{0, 0, 0});

    const PowerIndex gen = index_from_integer(49223, 257, {0, 1});
    CHECK(index_value(gen) == 49223);
    CHECK(gen.digits == std::vector<uint32_t>{136, 191}); // 49223 = 136 + 191*257
}

TEST_CASE("index text form") {
    const PowerIndex idx = make_index(4, {3, 0, 2}, {2, 1, 0});
    const std::string text = format_index(idx);
    CHECK(text == "b:4;a:35;p:2,1,0");
    CHECK(parse_index(text) == idx);

    CHECK(parse_index("b:2;a:6;p:0,0,0") == base2_index(6));

    CHECK_THROWS_AS(parse_index(""), InvalidIndex);
    CHECK_THROWS_AS(parse_index("b:4;a:35"), InvalidIndex);
    CHECK_THROWS_AS(parse_index("a:35;b:4;p:0"), InvalidIndex);
    CHECK_THROWS_AS(parse_index("b:4;a:0;p:"), InvalidIndex);
    CHECK_THROWS_AS(parse_index("b:4;a:35;p:3,0,0"), InvalidIndex); // pattern digit
    CHECK_THROWS_AS(parse_index("b:x;a:35;p:0,0,0"), InvalidIndex);
}

TEST_CASE("random index sampling") {
    Mt19937Rng rng(11);
    for (unsigned base : {2u, 3u, 7u, 257u}) {
        for (int t = 0; t < 500; ++t) {
            const PowerIndex idx = random_index(base, 100000, rng);
            const mpz_class a = index_value(idx);
            CHECK(a >= 1);
            CHECK(a < 100000);
            CHECK(idx.digits.back() != 0);
            CHECK(idx.pattern.size() == idx.digits.size());
            for (uint32_t p : idx.pattern) CHECK(p <= base - 2);
        }
    }
    Mt19937Rng a(3), b(3);
    CHECK(random_index(5, 1000, a) == random_index(5, 1000, b));
}

TEST_CASE("catalan and narayana numbers") {
    const mpz_class want[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (unsigned n = 0; n < 10; ++n) CHECK(catalan(n) == want[n]);

    CHECK(narayana(3, 1) == 1);
    CHECK(narayana(3, 2) == 3);
    CHECK(narayana(3, 3) == 1);
    CHECK(narayana(4, 2) == 6);
    CHECK(narayana(5, 2) == 10);
    CHECK(narayana(5, 3) == 20);
    CHECK(narayana(7, 4) == 175); // the dominant class for base 8

    // rows sum to the Catalan numbers
    for (unsigned n = 1; n <= 10; ++n) {
        mpz_class sum = 0;
        for (unsigned k = 1; k <= n; ++k) sum += narayana(n, k);
        CHECK(sum == catalan(n));
    }
}

TEST_CASE("largest usable base") {
    CHECK(b_max(std_entropoid("e7")) == 6);   // C_5 = 42 > 36
    CHECK(b_max(std_entropoid("e11")) == 7);  // C_6 = 132 > 100
    CHECK(b_max(std_entropoid("e13")) == 8);  // C_7 = 429 > 144
    const EntropoidParams big = std_entropoid("e49223");
    const unsigned b = b_max(big);
    const mpz_class bound = (big.m.p - 1) * (big.m.p - 1);
    CHECK(catalan(b - 1) > bound);
    CHECK(catalan(b - 2) <= bound);
}

TEST_CASE("representatives at p=7") {
    const EntropoidParams E = std_entropoid("e7");
    const auto r4 = representatives(E, Element{0, 2}, 4);
    REQUIRE(r4.size() == 3);
    CHECK(r4[0] == Element{3, 2});
    CHECK(r4[1] == Element{2, 4});
    CHECK(r4[2] == Element{4, 3});

    // (0,3) collapses to two distinct values among its three classes
    const auto r4b = representatives(E, Element{0, 3}, 4);
    const std::set<Element> vals(r4b.begin(), r4b.end());
    CHECK(vals == std::set<Element>{Element{3, 3}, Element{0, 6}});
}

TEST_CASE("representative recurrences") {
    const EntropoidParams E = std_entropoid("e49223");
    Mt19937Rng rng(12);
    const Element x = rand_unit(E, rng);
    auto prev = representatives(E, x, 2);
    CHECK(prev == std::vector<Element>{star(E, x, x)});
    for (uint64_t a = 3; a <= 9; ++a) {
        const auto cur = representatives(E, x, a);
        REQUIRE(cur.size() == a - 1);
        for (size_t i = 0; i + 1 < cur.size(); ++i)
            CHECK(cur[i] == star(E, x, prev[i]));
        CHECK(cur.back() == star(E, prev[0], x));
        for (size_t j = 0; j < cur.size(); ++j)
            CHECK(representative_entry(E, x, a, j) == cur[j]);
        prev = cur;
    }
    CHECK_THROWS_AS(representatives(E, x, 1), InvalidIndex);
}

TEST_CASE("shape enumeration and census") {
    for (unsigned n = 1; n <= 9; ++n) {
        const auto shapes = enumerate_shapes(n);
        CHECK(mpz_class(shapes.size()) == catalan(n - 1));
        for (const auto& s : shapes) CHECK(leaf_count(s) == n);
    }
    CHECK(shape_to_string(shape_leaf()) == "x");
    const Shape xx = shape_node(shape_leaf(), shape_leaf());
    CHECK(shape_to_string(xx) == "(x*x)");
    CHECK(shape_to_string(shape_node(shape_leaf(), xx)) == "(x*(x*x))");
    CHECK_THROWS_AS(enumerate_shapes(15), TooLarge);
    CHECK_THROWS_AS(enumerate_shapes(0), TooLarge);
}

TEST_CASE("ladder unfolds to a shape with the right leaf count") {
    Mt19937Rng rng(13);
    for (unsigned base : {2u, 3u, 4u, 17u, 257u}) {
        for (int t = 0; t < 200; ++t) {
            const PowerIndex idx = random_index(base, mpz_class(1) << 100, rng);
            CHECK(leaf_count(index_to_shape(idx)) == index_value(idx));
        }
    }
    // the two smallest ladders are the classic products
    const EntropoidParams E = std_entropoid("e7");
    const Element x{0, 2};
    CHECK(shape_to_string(index_to_shape(base2_index(2))) == "(x*x)");
    CHECK(shape_to_string(index_to_shape(base2_index(3))) == "((x*x)*x)");
    CHECK(pow_fast(E, x, base2_index(2)) == star(E, x, x));
    CHECK(pow_fast(E, x, base2_index(3)) == star(E, star(E, x, x), x));
}

TEST_CASE("fast power agrees with the tree oracle") {
    const EntropoidParams E = std_entropoid("e11");
    Mt19937Rng rng(14);
    for (unsigned base : {2u, 3u, 4u}) {
        for (uint64_t a = 2; a <= 12; ++a) {
            for (int t = 0; t < 50; ++t) {
                const PowerIndex idx = [&] {
                    PowerIndex r = random_index(base, mpz_class(a) + 1, rng);
                    while (index_value(r) != mpz_class(a))
                        r = random_index(base, mpz_class(a) + 1, rng);
                    return r;
                }();
                const Element x = rand_unit(E, rng);
                CHECK(pow_fast(E, x, idx) == pow_oracle(E, x, index_to_shape(idx)));
            }
        }
    }
}

TEST_CASE("operation count closed form") {
    Mt19937Rng rng(15);
    const EntropoidParams E = std_entropoid("e11");
    CHECK(op_count(base2_index(2)) == 1);
    CHECK(op_count(base2_index(3)) == 2);
    for (unsigned base : {2u, 3u, 4u, 7u}) {
        for (int t = 0; t < 300; ++t) {
            const PowerIndex idx = random_index(base, 5000, rng);
            uint64_t k = idx.digits.size() - 1, expect = k * (base - 1);
            bool first = true;
            for (uint32_t d : idx.digits)
                if (d) { expect += first ? d - 1 : d; first = false; }
            CHECK(op_count(idx) == expect);

            uint64_t measured = 0;
            const Element x = rand_unit(E, rng);
            pow_fast_counted(E, x, idx, measured);
            CHECK(measured == op_count(idx));
        }
    }
}

TEST_CASE("power laws") {
    const EntropoidParams E = std_entropoid("e49223");
    Mt19937Rng rng(16);
    for (int t = 0; t < 500; ++t) {
        const Element x = rand_unit(E, rng), y = rand_unit(E, rng);
        const PowerIndex A = random_index(2 + unsigned(rng.below(4)), 100000, rng);
        const PowerIndex B = random_index(2 + unsigned(rng.below(4)), 100000, rng);
        // powers act homomorphically and commute as maps
        CHECK(pow_fast(E, star(E, x, y), A) ==
              star(E, pow_fast(E, x, A), pow_fast(E, y, A)));
        CHECK(pow_fast(E, pow_fast(E, x, A), B) ==
              pow_fast(E, pow_fast(E, x, B), A));
    }
}

TEST_CASE("shape classes follow the Narayana row") {
    const EntropoidParams E = std_entropoid("e7");
    const Element g = std_generator("e7");
    for (unsigned a = 3; a <= 7; ++a) {
        std::map<Element, uint64_t> by_value;
        for (const auto& s : enumerate_shapes(a)) ++by_value[pow_oracle(E, g, s)];

        std::multiset<mpz_class> sizes, want;
        for (const auto& [v, n] : by_value) sizes.insert(n);
        for (unsigned k = 1; k < a; ++k) want.insert(narayana(a - 1, k));
        CHECK(sizes == want);

        // and the distinct values are exactly the representatives
        const auto reps = representatives(E, g, a);
        const std::set<Element> vals(reps.begin(), reps.end());
        std::set<Element> got;
        for (const auto& [v, n] : by_value) got.insert(v);
        CHECK(got == vals);
    }
}

TEST_CASE("equivalence report structure") {
    const EntropoidParams E = std_entropoid("e7");
    const Element g = std_generator("e7");
    const PartitionReport rep = equivalence_classes(E, g, 4);
    CHECK(rep.class_count == 3);
    uint64_t total = 0;
    for (const auto& c : rep.classes) total += c.size;
    CHECK(total == 5); // all Catalan(3) shapes accounted for
    CHECK(rep.classes[0].value == Element{3, 2});
    CHECK(rep.classes[0].members.size() == rep.classes[0].size);
    CHECK(rep.h1 == -1); // entropies stay unset until the analysis pass
    CHECK_THROWS_AS(equivalence_classes(E, g, 15), TooLarge);
}
