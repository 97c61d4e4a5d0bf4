#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "entropoid/analysis.hpp"
#include "entropoid/generators.hpp"
#include "entropoid/params_std.hpp"

using namespace entropoid;

TEST_CASE("randomized solver recovers solvable targets") {
    const EntropoidParams E = std_entropoid("e7");
    const Element g = std_generator("e7");
    Mt19937Rng rng(51);

    const Element y = pow_fast(E, g, make_index(3, {2, 1}, {1, 0})); // a = 5
    const auto hit = delp_random(E, g, y, 10000, rng);
    REQUIRE(hit.has_value());
    CHECK(pow_fast(E, g, *hit) == y);

    const auto self = delp_random(E, g, g, 10000, rng);
    REQUIRE(self.has_value());
    CHECK(pow_fast(E, g, *self) == g);

    // powers of the absorbing element never leave it
    CHECK_FALSE(delp_random(E, E.zero_star, E.one_star, 500, rng).has_value());
}

TEST_CASE("exhaustive solver coverage depends on the base") {
    const EntropoidParams E = std_entropoid("e7");
    const Element g = std_generator("e7");
    const std::set<Element> reachable = span(E, g);
    REQUIRE(reachable.size() == 36);

    // base 5 reaches every element of <g>
    for (const Element& y : reachable) {
        const auto hit = delp_brute(E, g, y, 5);
        REQUIRE(hit.has_value());
        CHECK(pow_fast(E, g, *hit) == y);
        CHECK(hit->base == 5);
    }

    // base 3 misses exactly four elements
    std::set<Element> missed;
    for (const Element& y : reachable)
        if (!delp_brute(E, g, y, 3).has_value()) missed.insert(y);
    CHECK(missed == std::set<Element>{Element{0, 3}, Element{3, 6},
                                      Element{4, 0}, Element{6, 2}});

    CHECK_THROWS_AS(delp_brute(E, g, g, 4), InvalidIndex); // even base
    CHECK_THROWS_AS(delp_brute(std_entropoid("p128"), g, g, 3), TooLarge);
}

TEST_CASE("entropy formulas") {
    const std::vector<double> uniform4(4, 0.25);
    CHECK(entropy_shannon(uniform4) == doctest::Approx(2.0));
    CHECK(entropy_renyi(uniform4, 2.0) == doctest::Approx(2.0));
    CHECK(entropy_min(uniform4) == doctest::Approx(2.0));

    CHECK(entropy_shannon({1.0}) == doctest::Approx(0.0));

    const std::vector<double> thirds(3, 1.0 / 3.0);
    CHECK(entropy_shannon(thirds) == doctest::Approx(std::log2(3.0)));
    CHECK(entropy_renyi(thirds, 2.0) == doctest::Approx(std::log2(3.0)));

    const std::vector<double> skew{0.5, 0.25, 0.25};
    CHECK(entropy_min(skew) == doctest::Approx(1.0));
    CHECK(entropy_shannon(skew) == doctest::Approx(1.5));

    CHECK_THROWS_AS(entropy_shannon({0.5, 0.4}), BadDistribution);
    CHECK_THROWS_AS(entropy_shannon({1.5, -0.5}), BadDistribution);
    CHECK_THROWS_AS(entropy_renyi(thirds, 1.0), BadDistribution);
}

TEST_CASE("pattern partition at base 3") {
    const EntropoidParams E = std_entropoid("e49223");
    const Element g = std_generator("e49223");

    PartitionReport r2 = partition_xi(E, g, 3, 2, true);
    CHECK(r2.class_count == 2);
    REQUIRE(r2.classes.size() == 2);
    CHECK(r2.classes[0].value == Element{9735, 2125});
    CHECK(r2.classes[0].size == 2);
    CHECK(r2.classes[0].members == std::vector<std::string>{"[0,1]", "[1,1]"});
    CHECK(r2.classes[1].value == Element{22143, 3374});
    CHECK(r2.classes[1].size == 2);
    CHECK(r2.classes[1].members == std::vector<std::string>{"[0,0]", "[1,0]"});
    CHECK(r2.h1 == doctest::Approx(1.0));
    CHECK(r2.h2 == doctest::Approx(1.0));
    CHECK(r2.hmin == doctest::Approx(1.0));

    const PartitionReport r3 = partition_xi(E, g, 3, 3);
    CHECK(r3.class_count == 2);
    CHECK(r3.classes[0].value == Element{12320, 26593});
    CHECK(r3.classes[0].size == 4);
    CHECK(r3.classes[1].value == Element{28416, 42082});
    CHECK(r3.classes[1].size == 4);

    const PartitionReport r4 = partition_xi(E, g, 3, 4);
    CHECK(r4.class_count == 2);
    CHECK(r4.classes[0].value == Element{42159, 1249});
    CHECK(r4.classes[0].size == 8);
    CHECK(r4.classes[1].value == Element{46373, 13249});
    CHECK(r4.classes[1].size == 8);
}

TEST_CASE("pattern partition at base 4") {
    const EntropoidParams E = std_entropoid("e49223");
    const Element g = std_generator("e49223");

    struct Row {
        unsigned level;
        Element small1, small2, big;
        uint64_t n_small, n_big;
        double h1, h2, hmin;
    };
    const Row rows[] = {
        {2, {2847, 43103}, {12306, 3250}, {43283, 29857}, 3, 3,
         1.585, 1.585, 1.585},
        {3, {14769, 4826}, {37676, 4224}, {27843, 29019}, 6, 15,
         1.43552, 1.29546, 0.847997},
        {4, {9873, 27342}, {44897, 4336}, {31057, 15755}, 12, 57,
         1.17301, 0.89139, 0.50696},
        {5, {6487, 4975}, {10067, 22108}, {22832, 44737}, 24, 195,
         0.914493, 0.591906, 0.317482},
        {6, {19981, 22570}, {35514, 19869}, {31074, 13020}, 48, 633,
         0.693735, 0.39093, 0.203713},
    };

    for (const Row& want : rows) {
        const PartitionReport r = partition_xi(E, g, 4, want.level);
        CHECK(r.class_count == 3);
        REQUIRE(r.classes.size() == 3);
        CHECK(r.classes[0].value == want.small1);
        CHECK(r.classes[0].size == want.n_small);
        CHECK(r.classes[1].value == want.small2);
        CHECK(r.classes[1].size == want.n_small);
        CHECK(r.classes[2].value == want.big);
        CHECK(r.classes[2].size == want.n_big);
        CHECK(std::abs(r.h1 - want.h1) < 0.001);
        CHECK(std::abs(r.h2 - want.h2) < 0.001);
        CHECK(std::abs(r.hmin - want.hmin) < 0.001);
        CHECK(r.hmin <= r.h2 + 1e-12); // ordering up to rounding
        CHECK(r.h2 <= r.h1 + 1e-12);
    }

    CHECK_THROWS_AS(partition_xi(E, g, 4, 15), TooLarge);
    CHECK_THROWS_AS(partition_xi(E, g, 1, 2), InvalidIndex);
    CHECK_THROWS_AS(partition_xi(E, g, 4, 0), InvalidIndex);
}

TEST_CASE("max class size prediction for even bases") {
    CHECK(conjecture3_predict(4, 2) == 3);
    CHECK(conjecture3_predict(4, 3) == 15);
    CHECK(conjecture3_predict(4, 4) == 57);
    CHECK(conjecture3_predict(6, 2) == 5);
    CHECK_THROWS_AS(conjecture3_predict(3, 2), InvalidIndex);

    const EntropoidParams E = std_entropoid("e49223");
    const Element g = std_generator("e49223");
    for (unsigned level = 2; level <= 6; ++level) {
        CHECK(conjecture3_check(E, g, 4, level));

        // when the prediction holds, the dominant-class probability has the
        // closed form 1 - ((b-2)/(b-1))^(i-1)
        const PartitionReport r = partition_xi(E, g, 4, level);
        const double pmax = std::pow(2.0, -r.hmin);
        const double closed = 1.0 - std::pow(2.0 / 3.0, double(level - 1));
        CHECK(std::abs(pmax - closed) < 1e-9);
    }
}

TEST_CASE("entropies attach to shape partitions too") {
    const EntropoidParams E = std_entropoid("e7");
    const Element g = std_generator("e7");
    PartitionReport rep = equivalence_classes(E, g, 5); // sizes 1, 6, 6, 1
    fill_entropies(rep);
    CHECK(rep.h1 >= rep.h2);
    CHECK(rep.h2 >= rep.hmin);
    CHECK(rep.hmin == doctest::Approx(-std::log2(6.0 / 14.0)));
}

TEST_CASE("size grids for the p=11 instance") {
    const GridReport r = grid_report(std_entropoid("e11"));
    CHECK(r.p == 11);
    CHECK(r.zero_star == Element{2, 4});
    CHECK(r.max_span2 == 20);
    CHECK(r.max_span == 100);

    const uint64_t span2_want[11][11] = {
        {20, 4, 10, 20, 2, 10, 20, 2, 5, 10, 20},
        {10, 10, 20, 10, 2, 20, 10, 20, 20, 4, 2},
        {2, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2},
        {20, 20, 5, 20, 2, 10, 20, 10, 10, 2, 4},
        {10, 2, 20, 10, 2, 20, 10, 4, 20, 20, 10},
        {20, 20, 2, 20, 2, 10, 4, 10, 10, 5, 20},
        {4, 20, 10, 20, 2, 10, 20, 5, 2, 10, 20},
        {20, 20, 10, 4, 2, 1, 20, 10, 10, 10, 20},
        {10, 10, 20, 2, 2, 4, 10, 20, 20, 20, 10},
        {2, 10, 20, 10, 2, 20, 10, 20, 4, 20, 10},
        {10, 10, 4, 10, 2, 20, 2, 20, 20, 20, 10},
    };
    const uint64_t span_want[11][11] = {
        {20, 20, 25, 100, 2, 25, 100, 5, 5, 25, 100},
        {50, 50, 20, 50, 2, 100, 10, 100, 100, 20, 10},
        {2, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2},
        {100, 100, 5, 100, 2, 25, 20, 25, 25, 5, 20},
        {10, 10, 100, 50, 2, 100, 50, 20, 20, 100, 50},
        {100, 100, 5, 100, 2, 25, 20, 25, 25, 5, 20},
        {20, 20, 25, 100, 2, 25, 100, 5, 5, 25, 100},
        {100, 100, 25, 4, 2, 1, 100, 25, 25, 25, 100},
        {50, 50, 100, 2, 2, 4, 50, 100, 100, 100, 50},
        {10, 10, 100, 50, 2, 100, 50, 20, 20, 100, 50},
        {50, 50, 20, 50, 2, 100, 10, 100, 100, 20, 10},
    };
    for (int i = 0; i < 11; ++i) {
        for (int j = 0; j < 11; ++j) {
            CHECK(r.span2_sizes[i][j] == span2_want[i][j]);
            CHECK(r.span_sizes[i][j] == span_want[i][j]);
        }
    }

    // every entry divides its group order
    for (int i = 0; i < 11; ++i) {
        for (int j = 0; j < 11; ++j) {
            CHECK(20 % r.span2_sizes[i][j] == 0);
            CHECK(100 % r.span_sizes[i][j] == 0);
        }
    }

    CHECK_THROWS_AS(grid_report(std_entropoid("e49223")), TooLarge);
}

TEST_CASE("the zero column collapses to two-step closures") {
    const EntropoidParams E = std_entropoid("e23");
    const GridReport r = grid_report(E);
    REQUIRE(E.zero_star == Element{13, 1});
    const size_t col = 1; // the zero column x2 = 1
    for (size_t i = 0; i < 23; ++i) {
        const uint64_t want = (i == 13) ? 1 : 2;
        CHECK(r.span_sizes[i][col] == want);
        CHECK(r.span2_sizes[i][col] == want);
    }
}

TEST_CASE("closure size census at p=7") {
    const GridReport r = grid_report(std_entropoid("e7"));
    std::set<uint64_t> census;
    for (const auto& row : r.span_sizes)
        for (uint64_t v : row) census.insert(v);
    CHECK(census == std::set<uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36});
    CHECK(r.max_span2 == 12);
    CHECK(r.max_span == 36);
}

TEST_CASE("partition rows serialize to csv") {
    const EntropoidParams E = std_entropoid("e49223");
    const Element g = std_generator("e49223");
    std::ostringstream os;
    write_partition_csv_header(os);
    write_partition_csv_row(os, partition_xi(E, g, 3, 2));
    CHECK(os.str() ==
          "base,i,r_i,n_ij,H1,H2,Hmin\n"
          "3,2,2,\"2;2\",1,1,1\n");
}

TEST_CASE("collision entropy experiment is reproducible and base-sensitive") {
    const EntropoidParams E = std_entropoid("e49223");
    const Element g = std_generator("e49223");
    Mt19937Rng r1(52), r2(52);
    const double a = collision_entropy_experiment(E, g, 6, r1, 4);
    const double b = collision_entropy_experiment(E, g, 6, r2, 4);
    CHECK(a == b);
    CHECK(a > 0);

    Mt19937Rng r3(53);
    const double odd = collision_entropy_experiment(E, g, 7, r3, 4);
    // odd bases see the full pattern space, even bases a collapsed one
    CHECK(odd > a + 4.0);
}

TEST_CASE("toy forgery attack mechanics") {
    const SigParams P = sig_params_for(std_entropoid("e23"), Scheme::Cderp);
    Mt19937Rng rng(54);
    const MitmResult res = mitm_toy_attack(P, rng);
    CHECK(res.t1_rows == 22);
    CHECK(res.t2_rows == 22);
    CHECK(res.trials == 44);

    // the victim keypair is the first thing drawn, so a same-seeded replay
    // recovers the public key the attack targeted
    Mt19937Rng replay(54);
    const SigKeyPair victim = sig_keygen(P, replay);
    if (res.success) {
        CHECK(verify(P, victim.pub_y, res.forged_msg, res.forged));
    }

    Mt19937Rng r1(55), r2(55);
    const MitmResult m1 = mitm_toy_attack(P, r1), m2 = mitm_toy_attack(P, r2);
    CHECK(m1.success == m2.success);
    CHECK(m1.found_root == m2.found_root);

    const MitmStats stats = mitm_success_rate(P, rng, 10);
    CHECK(stats.runs == 10);
    CHECK(stats.successes >= 0);
    CHECK(stats.success_rate == doctest::Approx(stats.successes / 10.0));

    CHECK_THROWS_AS(mitm_toy_attack(std_sig_params(Scheme::Cderp, 128), rng),
                    TooLarge);
}
