#include "entropoid/powindex.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <unordered_map>

namespace entropoid {

PowerIndex make_index(unsigned base, std::vector<uint32_t> digits,
                      std::vector<uint32_t> pattern) {
    if (base < 2) throw InvalidIndex("base must be >= 2");
    if (digits.empty()) throw InvalidIndex("empty digit list");
    if (digits.back() == 0) throw InvalidIndex("leading digit must be nonzero");
    if (pattern.size() != digits.size())
        throw InvalidIndex("pattern length must equal digit count");
    for (uint32_t d : digits)
        if (d >= base) throw InvalidIndex("digit out of range");
    for (uint32_t p : pattern)
        if (p > base - 2) throw InvalidIndex("pattern digit out of range");
    PowerIndex idx;
    idx.base = base;
    idx.digits = std::move(digits);
    idx.pattern = std::move(pattern);
    return idx;
}

PowerIndex index_from_integer(const mpz_class& a, unsigned base,
                              std::vector<uint32_t> pattern) {
    if (a < 1) throw InvalidIndex("integer part must be >= 1");
    if (base < 2) throw InvalidIndex("base must be >= 2");
    std::vector<uint32_t> digits;
    mpz_class v = a;
    while (v > 0) {
        digits.push_back(static_cast<uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), base)));
        v /= base;
    }
    return make_index(base, std::move(digits), std::move(pattern));
}

PowerIndex base2_index(const mpz_class& a) {
    if (a < 1) throw InvalidIndex("integer part must be >= 1");
    size_t k = mpz_sizeinbase(a.get_mpz_t(), 2);
    return index_from_integer(a, 2, std::vector<uint32_t>(k, 0));
}

mpz_class index_value(const PowerIndex& idx) {
    mpz_class v = 0;
    for (size_t i = idx.digits.size(); i-- > 0;)
        v = v * idx.base + idx.digits[i];
    return v;
}

std::string format_index(const PowerIndex& idx) {
    std::string s = "b:" + std::to_string(idx.base) +
                    ";a:" + index_value(idx).get_str() + ";p:";
    for (size_t i = 0; i < idx.pattern.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx.pattern[i]);
    }
    return s;
}

namespace {

uint64_t parse_u64(const std::string& s) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InvalidIndex("bad integer in index text");
    return v;
}

} // namespace

PowerIndex parse_index(const std::string& text) {
    // b:<base>;a:<decimal>;p:<comma separated digits>
    if (text.rfind("b:", 0) != 0) throw InvalidIndex("index text must start with b:");
    const size_t semi1 = text.find(';');
    if (semi1 == std::string::npos || text.compare(semi1, 3, ";a:") != 0)
        throw InvalidIndex("missing a: field");
    const size_t semi2 = text.find(';', semi1 + 1);
    if (semi2 == std::string::npos || text.compare(semi2, 3, ";p:") != 0)
        throw InvalidIndex("missing p: field");

    const uint64_t base = parse_u64(text.substr(2, semi1 - 2));
    if (base < 2 || base > 1u << 20) throw InvalidIndex("base out of range");
    mpz_class a;
    if (a.set_str(text.substr(semi1 + 3, semi2 - semi1 - 3), 10) != 0 || a < 1)
        throw InvalidIndex("bad integer part");

    std::vector<uint32_t> pattern;
    const std::string rest = text.substr(semi2 + 3);
    if (!rest.empty()) {
        size_t pos = 0;
        for (;;) {
            const size_t comma = rest.find(',', pos);
            const size_t end = (comma == std::string::npos) ? rest.size() : comma;
            pattern.push_back(static_cast<uint32_t>(
                parse_u64(rest.substr(pos, end - pos))));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return index_from_integer(a, static_cast<unsigned>(base), std::move(pattern));
}

PowerIndex random_index(unsigned base, const mpz_class& a_bound, RandomSource& rng) {
    assert(base >= 2 && a_bound >= 2);
    const mpz_class a = 1 + rand_below(a_bound - 1, rng);
    // Digit count by division; mpz_sizeinbase only handles bases up to 62.
    size_t k = 0;
    for (mpz_class v = a; v > 0; v /= base) ++k;
    std::vector<uint32_t> pattern(k);
    for (auto& p : pattern)
        p = static_cast<uint32_t>(rng.below(base - 1));
    return index_from_integer(a, base, std::move(pattern));
}

mpz_class catalan(unsigned n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    return c / (n + 1);
}

mpz_class narayana(unsigned n, unsigned k) {
    assert(1 <= k && k <= n);
    mpz_class a, b;
    mpz_bin_uiui(a.get_mpz_t(), n, k);
    mpz_bin_uiui(b.get_mpz_t(), n, k - 1);
    return a * b / n;
}

unsigned b_max(const EntropoidParams& E) {
    const mpz_class bound = (E.m.p - 1) * (E.m.p - 1);
    for (unsigned b = 2;; ++b)
        if (catalan(b - 1) > bound) return b;
}

Element representative_entry(const EntropoidParams& E, const Element& x,
                             uint64_t a, uint64_t j) {
    assert(a >= 2 && j + 2 <= a);
    Element t = x;
    for (uint64_t m = 0; m < j; ++m) t = star(E, x, t);
    t = star(E, t, x);
    for (uint64_t m = 0; m + j + 2 < a; ++m) t = star(E, x, t);
    return t;
}

std::vector<Element> representatives(const EntropoidParams& E, const Element& x,
                                     uint64_t a) {
    if (a < 2) throw InvalidIndex("representatives need a >= 2");
    if (a > (1u << 20)) throw TooLarge("representative list too long");
    std::vector<Element> r{star(E, x, x)};
    for (uint64_t m = 2; m < a; ++m) {
        const Element r0 = r[0];
        for (auto& e : r) e = star(E, x, e);
        r.push_back(star(E, r0, x));
    }
    return r;
}

Element pow_fast(const EntropoidParams& E, const Element& x, const PowerIndex& idx) {
    return pow_ladder<Element>(x, idx, [&](const Element& a, const Element& b) {
        return star(E, a, b);
    });
}

Element pow_fast_counted(const EntropoidParams& E, const Element& x,
                         const PowerIndex& idx, uint64_t& star_ops) {
    star_ops = 0;
    return pow_ladder<Element>(x, idx, [&](const Element& a, const Element& b) {
        ++star_ops;
        return star(E, a, b);
    });
}

uint64_t op_count(const PowerIndex& idx) {
    const uint64_t k = idx.digits.size() - 1;
    uint64_t sum = 0;
    for (uint32_t d : idx.digits) sum += d;
    return k * (idx.base - 1) - 1 + sum;
}

namespace {
const Shape kLeaf = std::make_shared<const ShapeNode>();
}

Shape shape_leaf() { return kLeaf; }

Shape shape_node(const Shape& l, const Shape& r) {
    auto n = std::make_shared<ShapeNode>();
    n->left = l;
    n->right = r;
    return n;
}

bool shape_is_leaf(const Shape& s) { return !s->left; }

mpz_class leaf_count(const Shape& s) {
    std::unordered_map<const ShapeNode*, mpz_class> memo;
    // Iterative post-order; ladder DAGs can be deep.
    std::vector<const ShapeNode*> stack{s.get()};
    while (!stack.empty()) {
        const ShapeNode* n = stack.back();
        if (memo.count(n)) { stack.pop_back(); continue; }
        if (!n->left) {
            memo[n] = 1;
            stack.pop_back();
            continue;
        }
        const auto l = memo.find(n->left.get());
        const auto r = memo.find(n->right.get());
        if (l != memo.end() && r != memo.end()) {
            memo[n] = l->second + r->second;
            stack.pop_back();
        } else {
            if (r == memo.end()) stack.push_back(n->right.get());
            if (l == memo.end()) stack.push_back(n->left.get());
        }
    }
    return memo[s.get()];
}

std::string shape_to_string(const Shape& s) {
    if (shape_is_leaf(s)) return "x";
    return "(" + shape_to_string(s->left) + "*" + shape_to_string(s->right) + ")";
}

std::vector<Shape> enumerate_shapes(unsigned n) {
    if (n < 1 || n > 14) throw TooLarge("shape enumeration limited to 14 leaves");
    std::vector<std::vector<Shape>> levels(n + 1);
    levels[1] = {shape_leaf()};
    for (unsigned m = 2; m <= n; ++m)
        for (unsigned i = 1; i < m; ++i)
            for (const auto& l : levels[i])
                for (const auto& r : levels[m - i])
                    levels[m].push_back(shape_node(l, r));
    return levels[n];
}

Shape index_to_shape(const PowerIndex& idx) {
    return pow_ladder<Shape>(shape_leaf(), idx, shape_node);
}

Element pow_oracle(const EntropoidParams& E, const Element& x, const Shape& s) {
    std::unordered_map<const ShapeNode*, Element> memo;
    std::vector<const ShapeNode*> stack{s.get()};
    while (!stack.empty()) {
        const ShapeNode* n = stack.back();
        if (memo.count(n)) { stack.pop_back(); continue; }
        if (!n->left) {
            memo[n] = x;
            stack.pop_back();
            continue;
        }
        const auto l = memo.find(n->left.get());
        const auto r = memo.find(n->right.get());
        if (l != memo.end() && r != memo.end()) {
            memo[n] = star(E, l->second, r->second);
            stack.pop_back();
        } else {
            if (r == memo.end()) stack.push_back(n->right.get());
            if (l == memo.end()) stack.push_back(n->left.get());
        }
    }
    return memo[s.get()];
}

PartitionReport equivalence_classes(const EntropoidParams& E, const Element& g,
                                    unsigned a) {
    if (a < 2 || a > 14) throw TooLarge("class enumeration limited to a <= 14");
    const bool keep = a <= 10;
    const auto shapes = enumerate_shapes(a);

    std::map<Element, PartitionClass> by_value;
    for (const auto& s : shapes) {
        const Element v = pow_oracle(E, g, s);
        auto& cls = by_value[v];
        cls.value = v;
        ++cls.size;
        if (keep) cls.members.push_back(shape_to_string(s));
    }

    PartitionReport report;
    report.base = 0;
    report.level = a;
    report.class_count = by_value.size();

    // Representative order: the class containing R_a(g)[j] is listed at j.
    const auto reps = representatives(E, g, a);
    std::set<Element> emitted;
    for (const auto& r : reps) {
        auto it = by_value.find(r);
        if (it != by_value.end() && !emitted.count(r)) {
            report.classes.push_back(it->second);
            emitted.insert(r);
        }
    }
    for (const auto& [v, cls] : by_value)
        if (!emitted.count(v)) report.classes.push_back(cls);
    return report;
}

} // namespace entropoid
