#pragma once

// Succinct power indices and non-associative exponentiation.
//
// A power index (a, a_s, b) holds a >= 1 written little-endian in base b >= 2
// (digits A_0..A_k, A_k != 0) together with a bracketing pattern P_0..P_k of
// the same length, each P_i in [0, b-2]. The ladder below evaluates x^(A,b)
// as a product of exactly a copies of x using k(b-1) - 1 + sum(A_i != 0) A_i
// star operations.
//
// Representatives R_a(x) are the a-1 associative-class values for products of
// a copies of x; R_a(x)[j] = prepend_left^(a-2-j)( L_j(x) * x ) where L_m is
// m left multiplications by x. They satisfy the recurrences
// R_(a+1)[i] = x * R_a[i] (i < a-1) and R_(a+1)[a-1] = R_a[0] * x.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "entropoid/entropoid.hpp"

namespace entropoid {

struct PowerIndex {
    unsigned base = 2;
    std::vector<uint32_t> digits;  // little-endian, digits.back() != 0
    std::vector<uint32_t> pattern; // same length, each <= base-2

    bool operator==(const PowerIndex& o) const {
        return base == o.base && digits == o.digits && pattern == o.pattern;
    }
};

// Validates and builds an index; throws InvalidIndex on any violation
// (base < 2, empty digits, digit out of range, trailing zero digit,
// pattern length mismatch, pattern digit > base-2).
PowerIndex make_index(unsigned base, std::vector<uint32_t> digits,
                      std::vector<uint32_t> pattern);

// Digits of a in the given base plus the supplied pattern; pre a >= 1.
PowerIndex index_from_integer(const mpz_class& a, unsigned base,
                              std::vector<uint32_t> pattern);

// Base-2 index for integer a (pattern is forced to all zeros).
PowerIndex base2_index(const mpz_class& a);

// Integer part sum(A_i * base^i).
mpz_class index_value(const PowerIndex& idx);

// Text form `b:<base>;a:<decimal>;p:<comma-separated digits>`.
std::string format_index(const PowerIndex& idx);
PowerIndex parse_index(const std::string& text); // throws InvalidIndex

// Uniform a in [1, a_bound), uniform pattern digits; pre base >= 2, a_bound >= 2.
PowerIndex random_index(unsigned base, const mpz_class& a_bound, RandomSource& rng);

// Catalan C_n and Narayana N(n, k) numbers.
mpz_class catalan(unsigned n);
mpz_class narayana(unsigned n, unsigned k);

// Smallest b with C_(b-1) > (p-1)^2.
unsigned b_max(const EntropoidParams& E);

// Associative-class representatives [R_a(x)[0], ..., R_a(x)[a-2]] built via
// the recurrences; pre 2 <= a <= 2^20.
std::vector<Element> representatives(const EntropoidParams& E, const Element& x,
                                     uint64_t a);
// Single entry in exactly a-1 star operations; pre 2 <= a, 0 <= j <= a-2.
Element representative_entry(const EntropoidParams& E, const Element& x,
                             uint64_t a, uint64_t j);

// The exponentiation ladder, generic over the element type so the same
// control flow can build values or symbolic shapes. Mul: (T, T) -> T.
template <class T, class Mul>
T pow_ladder(const T& x, const PowerIndex& idx, Mul mul) {
    const auto& A = idx.digits;
    const auto& P = idx.pattern;
    const size_t k = A.size() - 1;

    // rep(w, a, j): R_a(w)[j] = prepend^(a-2-j)( L_j(w) * w ).
    auto rep = [&](const T& w, uint64_t a, uint64_t j) -> T {
        T t = w;
        for (uint64_t m = 0; m < j; ++m) t = mul(w, t);
        t = mul(t, w);
        for (uint64_t m = 0; m + j + 2 < a; ++m) t = mul(w, t);
        return t;
    };

    std::vector<T> w;
    w.reserve(k + 1);
    w.push_back(x);
    for (size_t i = 1; i <= k; ++i)
        w.push_back(rep(w[i - 1], idx.base, P[i]));

    size_t j = 0;
    while (A[j] == 0) ++j;

    T acc = (A[j] == 1) ? w[j] : rep(w[j], A[j], P[j] % (A[j] - 1));
    for (size_t i = j + 1; i <= k; ++i) {
        if (A[i] == 0) continue;
        T t = (A[i] == 1) ? w[i] : rep(w[i], A[i], P[i] % (A[i] - 1));
        if (P[i - 1] % 2 == 0) acc = mul(t, acc);
        else                   acc = mul(acc, t);
    }
    return acc;
}

// x^(A,b) over the entropoid; pre idx valid (construction enforces it).
Element pow_fast(const EntropoidParams& E, const Element& x, const PowerIndex& idx);
// Same, also reporting the number of star operations performed.
Element pow_fast_counted(const EntropoidParams& E, const Element& x,
                         const PowerIndex& idx, uint64_t& star_ops);
// Closed form k(b-1) - 1 + sum over nonzero digits.
uint64_t op_count(const PowerIndex& idx);

// Bracketing shapes as binary trees; shared subtrees are fine (DAGs).
struct ShapeNode {
    std::shared_ptr<const ShapeNode> left, right; // both null for the leaf x
};
using Shape = std::shared_ptr<const ShapeNode>;

Shape shape_leaf();
Shape shape_node(const Shape& l, const Shape& r);
bool shape_is_leaf(const Shape& s);
// Number of leaves (can be astronomically large for ladder DAGs).
mpz_class leaf_count(const Shape& s);
// "(x*(x*x))" style; only sensible for small trees.
std::string shape_to_string(const Shape& s);
// All C_(n-1) bracketings of n leaves; pre 1 <= n <= 14, else TooLarge.
std::vector<Shape> enumerate_shapes(unsigned n);
// Symbolic unfolding of the ladder for this index.
Shape index_to_shape(const PowerIndex& idx);

// Evaluates a shape bottom-up with * (memoized per node, so DAGs are cheap);
// pre leaf count <= 2^14 for plain trees, any ladder DAG is fine.
Element pow_oracle(const EntropoidParams& E, const Element& x, const Shape& s);

// One value class of a partitioned shape or pattern space.
struct PartitionClass {
    Element value;
    uint64_t size = 0;
    std::vector<std::string> members; // shape strings or pattern lists; may be empty
};

struct PartitionReport {
    unsigned base = 0;
    unsigned level = 0;          // i for pattern partitions, a for shape partitions
    size_t class_count = 0;
    std::vector<PartitionClass> classes;
    double h1 = -1, h2 = -1, hmin = -1; // bits; -1 until analysis fills them
};

// Evaluates all C_(a-1) bracketings of a copies of g and groups by value.
// Classes are listed in representative order (the class of R_a(g)[j] at
// position j); member shape strings are kept when a <= 10.
// Pre a <= 14, else TooLarge.
PartitionReport equivalence_classes(const EntropoidParams& E, const Element& g,
                                    unsigned a);

} // namespace entropoid
