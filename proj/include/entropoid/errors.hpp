#pragma once

// Exception taxonomy for the entropoid library. Every throwing operation in
// the public API throws one of these; all derive from entropoid::Error.

#include <stdexcept>
#include <string>

namespace entropoid {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Field / parameter errors.
struct ZeroInverse : Error {
    explicit ZeroInverse(const std::string& w = "inverse of zero") : Error(w) {}
};
struct ExhaustedAttempts : Error {
    explicit ExhaustedAttempts(const std::string& w = "attempt budget exhausted") : Error(w) {}
};
struct InvalidConstant : Error {
    explicit InvalidConstant(const std::string& w = "invalid structure constant") : Error(w) {}
};
struct NotInvertible : Error {
    explicit NotInvertible(const std::string& w = "element not invertible") : Error(w) {}
};

// Size / enumeration guards.
struct TooLarge : Error {
    explicit TooLarge(const std::string& w = "argument exceeds enumeration guard") : Error(w) {}
};

// Index / encoding errors.
struct InvalidIndex : Error {
    explicit InvalidIndex(const std::string& w = "malformed power index") : Error(w) {}
};
struct BadLength : Error {
    explicit BadLength(const std::string& w = "byte string has wrong length") : Error(w) {}
};
struct NonCanonical : Error {
    explicit NonCanonical(const std::string& w = "component not reduced mod p") : Error(w) {}
};

// Protocol errors.
struct InvalidPeer : Error {
    explicit InvalidPeer(const std::string& w = "peer element rejected") : Error(w) {}
};
struct ZeroDigest : Error {
    explicit ZeroDigest(const std::string& w = "digest maps to zero integer part") : Error(w) {}
};
struct MalformedSignature : Error {
    explicit MalformedSignature(const std::string& w = "signature bytes malformed") : Error(w) {}
};

// Analysis errors.
struct BadDistribution : Error {
    explicit BadDistribution(const std::string& w = "probabilities do not form a distribution") : Error(w) {}
};
struct Inconclusive : Error {
    explicit Inconclusive(const std::string& w = "test produced neither expected value") : Error(w) {}
};

} // namespace entropoid
