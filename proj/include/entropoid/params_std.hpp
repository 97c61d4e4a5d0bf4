#pragma once

// Named parameter sets. The small sets (e7..e23, e49223) are the classic toy
// instances used throughout the tests; the crypto-size sets were produced
// once with tools/mkparams (seeded) and frozen here so that key files, which
// carry only (scheme, lambda), always resolve to the same public parameters.

#include <string>
#include <vector>

#include "entropoid/kex.hpp"
#include "entropoid/sig.hpp"

namespace entropoid {

// Known names: e7 e11 e13 e19 e23 e49223 p128 p192 p256 p384 p512.
// Throws InvalidConstant for unknown names.
EntropoidParams std_entropoid(const std::string& name);
std::vector<std::string> std_entropoid_names();

// A frozen full generator for the named set (validated by the test suite).
Element std_generator(const std::string& name);

// Frozen KEX suites; lambda in {128, 256}.
KexSuite std_kex_suite(unsigned lambda, unsigned base = 3);

// Frozen signature parameters; Cderp lambda in {128, 192, 256},
// CderpToDelp lambda in {256, 384, 512}.
SigParams std_sig_params(Scheme scheme, unsigned lambda);

} // namespace entropoid
