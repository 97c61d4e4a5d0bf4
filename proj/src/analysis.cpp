#include "entropoid/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "entropoid/generators.hpp"

namespace entropoid {

std::optional<PowerIndex> delp_random(const EntropoidParams& E, const Element& g,
                                      const Element& y, uint64_t budget,
                                      RandomSource& rng) {
    const unsigned bmax = b_max(E);
    const mpz_class bound = (E.m.p - 1) * (E.m.p - 1) + 1; // a in [1, (p-1)^2]
    for (uint64_t i = 0; i < budget; ++i) {
        const unsigned base =
            bmax <= 3 ? 3 : static_cast<unsigned>(3 + rng.below(bmax - 2));
        const PowerIndex idx = random_index(base, bound, rng);
        if (pow_fast(E, g, idx) == y) return idx;
    }
    return std::nullopt;
}

std::optional<PowerIndex> delp_brute(const EntropoidParams& E, const Element& g,
                                     const Element& y, unsigned base) {
    if (base < 3 || base % 2 == 0)
        throw InvalidIndex("brute solver expects an odd base >= 3");
    const mpz_class order = (E.m.p - 1) * (E.m.p - 1);
    if (order > (1u << 20)) throw TooLarge("delp_brute needs (p-1)^2 <= 2^20");

    for (mpz_class a = 2; a <= order; ++a) {
        std::vector<uint32_t> digits;
        for (mpz_class v = a; v > 0; v /= base)
            digits.push_back(static_cast<uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), base)));
        std::vector<uint32_t> pattern(digits.size(), 0);
        // Odometer over all (base-1)^len patterns.
        for (;;) {
            const PowerIndex idx = make_index(base, digits, pattern);
            if (pow_fast(E, g, idx) == y) return idx;
            size_t pos = 0;
            while (pos < pattern.size() && ++pattern[pos] == base - 1)
                pattern[pos++] = 0;
            if (pos == pattern.size()) break;
        }
    }
    return std::nullopt;
}

double entropy_shannon(const std::vector<double>& probs) {
    double sum = 0, h = 0;
    for (double p : probs) {
        if (p < 0) throw BadDistribution("negative probability");
        sum += p;
        if (p > 0) h -= p * std::log2(p);
    }
    if (std::abs(sum - 1.0) > 1e-12) throw BadDistribution("sum is not 1");
    return h;
}

double entropy_renyi(const std::vector<double>& probs, double alpha) {
    if (alpha <= 0 || alpha == 1.0)
        throw BadDistribution("Renyi order must be positive and != 1");
    double sum = 0, acc = 0;
    for (double p : probs) {
        if (p < 0) throw BadDistribution("negative probability");
        sum += p;
        acc += std::pow(p, alpha);
    }
    if (std::abs(sum - 1.0) > 1e-12) throw BadDistribution("sum is not 1");
    return std::log2(acc) / (1.0 - alpha);
}

double entropy_min(const std::vector<double>& probs) {
    double sum = 0, pmax = 0;
    for (double p : probs) {
        if (p < 0) throw BadDistribution("negative probability");
        sum += p;
        pmax = std::max(pmax, p);
    }
    if (std::abs(sum - 1.0) > 1e-12) throw BadDistribution("sum is not 1");
    return -std::log2(pmax);
}

void fill_entropies(PartitionReport& report) {
    uint64_t total = 0;
    for (const auto& c : report.classes) total += c.size;
    std::vector<double> probs;
    probs.reserve(report.classes.size());
    for (const auto& c : report.classes)
        probs.push_back(static_cast<double>(c.size) / static_cast<double>(total));
    report.h1 = entropy_shannon(probs);
    report.h2 = entropy_renyi(probs, 2.0);
    report.hmin = entropy_min(probs);
}

PartitionReport partition_xi(const EntropoidParams& E, const Element& g,
                             unsigned base, unsigned level, bool keep_members) {
    if (base < 2) throw InvalidIndex("base must be >= 2");
    if (level < 1) throw InvalidIndex("level must be >= 1");
    double census = std::pow(double(base - 1), double(level));
    if (census > double(1u << 22)) throw TooLarge("pattern space exceeds 2^22");

    // Exponent base^(level-1): digits [0,...,0,1] of length `level`.
    std::vector<uint32_t> digits(level, 0);
    digits.back() = 1;

    std::vector<uint32_t> pattern(level, 0);
    std::map<Element, PartitionClass> by_value;
    for (;;) {
        const PowerIndex idx = make_index(base, digits, pattern);
        const Element v = pow_fast(E, g, idx);
        auto& cls = by_value[v];
        cls.value = v;
        ++cls.size;
        if (keep_members) {
            std::string m = "[";
            for (size_t i = 0; i < pattern.size(); ++i) {
                if (i) m += ',';
                m += std::to_string(pattern[i]);
            }
            cls.members.push_back(m + "]");
        }
        size_t pos = 0;
        while (pos < pattern.size() && ++pattern[pos] == base - 1)
            pattern[pos++] = 0;
        if (pos == pattern.size()) break;
    }

    PartitionReport report;
    report.base = base;
    report.level = level;
    report.class_count = by_value.size();
    for (auto& [v, cls] : by_value) report.classes.push_back(std::move(cls));
    std::sort(report.classes.begin(), report.classes.end(),
              [](const PartitionClass& a, const PartitionClass& b) {
                  return a.size < b.size ||
                         (a.size == b.size && a.value < b.value);
              });
    fill_entropies(report);
    return report;
}

mpz_class conjecture3_predict(unsigned base, unsigned level) {
    if (base % 2 != 0) throw InvalidIndex("prediction applies to even bases");
    mpz_class b1, b2;
    mpz_ui_pow_ui(b1.get_mpz_t(), base - 1, level - 1);
    mpz_ui_pow_ui(b2.get_mpz_t(), base - 2, level - 1);
    return (base - 1) * (b1 - b2);
}

bool conjecture3_check(const EntropoidParams& E, const Element& g,
                       unsigned base, unsigned level) {
    const PartitionReport r = partition_xi(E, g, base, level);
    uint64_t max_size = 0;
    for (const auto& c : r.classes) max_size = std::max(max_size, c.size);
    return mpz_class(max_size) == conjecture3_predict(base, level);
}

double collision_entropy_experiment(const EntropoidParams& E, const Element& g,
                                    unsigned base, RandomSource& rng,
                                    uint64_t trials) {
    const mpz_class bound = (E.m.p - 1) * (E.m.p - 1) + 1;
    double acc = 0;
    for (uint64_t t = 0; t < trials; ++t) {
        // Fixed random integer part; fresh random full-length patterns until
        // a value repeats.
        const PowerIndex base_idx = random_index(base, bound, rng);
        std::unordered_set<Element, ElementHash> seen;
        uint64_t draws = 0;
        for (;;) {
            PowerIndex idx = base_idx;
            for (auto& p : idx.pattern) p = static_cast<uint32_t>(rng.below(base - 1));
            ++draws;
            if (!seen.insert(pow_fast(E, g, idx)).second) break;
        }
        acc += 2.0 * std::log2(static_cast<double>(draws)) - 1.0;
    }
    return acc / static_cast<double>(trials);
}

GridReport grid_report(const EntropoidParams& E) {
    if (E.m.p > 64) throw TooLarge("grid reproduction needs p <= 64");
    const unsigned p = static_cast<unsigned>(E.m.p.get_ui());
    GridReport r;
    r.p = E.m.p;
    r.zero_star = E.zero_star;
    r.span2_sizes.assign(p, std::vector<uint64_t>(p, 0));
    r.span_sizes.assign(p, std::vector<uint64_t>(p, 0));
    for (unsigned i = 0; i < p; ++i) {
        for (unsigned j = 0; j < p; ++j) {
            const Element x{mpz_class(i), mpz_class(j)};
            r.span2_sizes[i][j] = span2(E, x).size();
            r.span_sizes[i][j] = span(E, x).size();
            r.max_span2 = std::max(r.max_span2, r.span2_sizes[i][j]);
            r.max_span = std::max(r.max_span, r.span_sizes[i][j]);
        }
    }
    return r;
}

void write_partition_csv_header(std::ostream& os) {
    os << "base,i,r_i,n_ij,H1,H2,Hmin\n";
}

void write_partition_csv_row(std::ostream& os, const PartitionReport& report) {
    os << report.base << ',' << report.level << ',' << report.class_count << ",\"";
    for (size_t i = 0; i < report.classes.size(); ++i) {
        if (i) os << ';';
        os << report.classes[i].size;
    }
    os << "\"," << report.h1 << ',' << report.h2 << ',' << report.hmin << '\n';
}

MitmResult mitm_toy_attack(const SigParams& P, RandomSource& rng) {
    const EntropoidParams& E = P.E;
    if (E.m.p > (1u << 14)) throw TooLarge("toy attack needs p <= 2^14");
    const size_t rows = static_cast<size_t>(E.m.p.get_ui()) - 1;

    MitmResult res;
    res.t1_rows = rows;
    res.t2_rows = rows;
    res.trials = 2 * rows;

    const SigKeyPair victim = sig_keygen(P, rng);
    const Element& y = victim.pub_y;

    // T1: random z with z^B, keyed by the power for collision lookup.
    std::unordered_map<Element, Element, ElementHash> t1;
    t1.reserve(rows);
    for (size_t i = 0; i < rows; ++i) {
        const Element z = rand_unit(E, rng);
        const Element zB = pow_fast(E, z, P.B);
        t1.emplace(zB, z);
        if (zB == y) res.found_root = true;
    }

    // T2: random commitments with their (y*I)^H targets; first collision
    // with T1 yields sigma = (I, z) on that row's message.
    for (size_t i = 0; i < rows && !res.success; ++i) {
        const Element I = rand_unit(E, rng);
        std::vector<uint8_t> msg(8);
        rng.fill(msg.data(), msg.size());
        const PowerIndex H = message_challenge(P, I, msg);
        const Element target = pow_fast(E, star(E, y, I), H);
        const auto hit = t1.find(target);
        if (hit != t1.end()) {
            res.success = true;
            res.forged_msg = msg;
            res.forged = Signature{I, hit->second};
        }
    }
    return res;
}

MitmStats mitm_success_rate(const SigParams& P, RandomSource& rng, int runs) {
    MitmStats stats;
    stats.runs = runs;
    for (int i = 0; i < runs; ++i) {
        const MitmResult r = mitm_toy_attack(P, rng);
        if (r.success) ++stats.successes;
        if (r.found_root) ++stats.lucky_roots;
    }
    stats.success_rate = runs ? double(stats.successes) / double(runs) : 0.0;
    return stats;
}

} // namespace entropoid
