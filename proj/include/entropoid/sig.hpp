#pragma once

// Signature schemes over the entropoid plus the underlying three-move
// identification protocol.
//
// Scheme 1 (Cderp): the public root B is the hash-to-index image of the
// fixed seed string "abc"; challenges are hash-to-index images of
// encode(I) || message. Scheme 2 (CderpToDelp, conservative): every index
// has integer part exactly q = (p-1)/2 and the digest bytes only select the
// bracketing pattern.
//
// Verification identity: s^B = ((x*r)^H)^B = (x^B)^H * (r^B)^H = (y*I)^H.

#include <cstdint>
#include <string>
#include <vector>

#include "entropoid/powindex.hpp"

namespace entropoid {

enum class Scheme : uint8_t { Cderp = 1, CderpToDelp = 2 };
enum class HashAlgo { Sha256, Sha384, Sha512 };

std::vector<uint8_t> digest(HashAlgo algo, const uint8_t* data, size_t len);
std::vector<uint8_t> digest(HashAlgo algo, const std::vector<uint8_t>& data);
size_t digest_bytes(HashAlgo algo);

struct SigParams {
    EntropoidParams E;
    Scheme scheme = Scheme::Cderp;
    unsigned lambda = 0;   // security size that selected the hash
    HashAlgo hash = HashAlgo::Sha256;
    unsigned base = 257;   // 257 default; 17 variant supported
    unsigned k_max = 16;   // Cderp pattern length cap = half digest bytes
    PowerIndex B;          // public root index
};

// Fresh parameters: safe prime of exactly lambda bits plus random constants.
// Hash by size: Cderp 128/192/256 -> SHA-256/384/512; CderpToDelp
// 256/384/512 -> SHA-256/384/512 (nonstandard lambdas round up).
// Pre base in {257, 17}; throws InvalidConstant otherwise.
SigParams sig_params_new(Scheme scheme, unsigned lambda, RandomSource& rng,
                         unsigned base = 257);

// Same derivation over an existing entropoid (toy and standard sets);
// lambda is taken from E's prime size.
SigParams sig_params_for(const EntropoidParams& E, Scheme scheme,
                         unsigned base = 257);

// Scheme 1 mapping: digest = hash(msg) split in equal halves h1 || h2;
// a = little-endian integer of h1; pattern = first (digit count of a in the
// base) entries of h2, capped at k_max. All-zero h1 is resolved by
// deterministically re-hashing with a 0x01 domain byte appended (ZeroDigest
// is thrown only if that fails too). Pre scheme = Cderp.
PowerIndex hash_to_index(const SigParams& P, const uint8_t* msg, size_t len);
PowerIndex hash_to_index(const SigParams& P, const std::vector<uint8_t>& msg);

// Scheme 2 mapping: integer part fixed to q, pattern = digest bytes
// truncated to q's digit count in the base. Pre scheme = CderpToDelp.
PowerIndex hash_to_index_q(const SigParams& P, const uint8_t* msg, size_t len);
PowerIndex hash_to_index_q(const SigParams& P, const std::vector<uint8_t>& msg);

// Challenge index for (I, msg): the scheme's mapping applied to
// len(encode(I)) as 4 little-endian bytes || encode(I) || msg.
PowerIndex message_challenge(const SigParams& P, const Element& I,
                             const std::vector<uint8_t>& msg);

struct SigKeyPair {
    Element priv_x;
    Element pub_y; // priv_x ^ B
};

SigKeyPair sig_keygen(const SigParams& P, RandomSource& rng);

struct Signature {
    Element I;
    Element s;
};

// r random unit; I = r^B; H = message_challenge(I, msg); s = (x*r)^H.
Signature sign(const SigParams& P, const SigKeyPair& kp,
               const std::vector<uint8_t>& msg, RandomSource& rng);

// Recomputes H and checks s^B == (y*I)^H.
bool verify(const SigParams& P, const Element& y,
            const std::vector<uint8_t>& msg, const Signature& sig);

struct IdTranscript {
    Element I;      // commitment r^B
    PowerIndex H;   // verifier challenge
    Element s;      // response (x*r)^H
    bool accepted = false;
};

// One honest commit / challenge / response / check round.
IdTranscript id_round(const SigParams& P, const SigKeyPair& kp,
                      RandomSource& prover_rng, RandomSource& verifier_rng);
// Challenge drawn the way id_round's verifier draws it (exposed for tests).
PowerIndex random_challenge(const SigParams& P, RandomSource& rng);
// The verifier-side check on an arbitrary transcript.
bool id_check(const SigParams& P, const Element& y, const IdTranscript& t);

// Wire forms. Signature = encode(I) || encode(s). Key file = scheme id byte,
// lambda as 2 little-endian bytes, then the element bytes.
std::vector<uint8_t> encode_signature(const SigParams& P, const Signature& sig);
Signature decode_signature(const SigParams& P, const std::vector<uint8_t>& bytes); // MalformedSignature
std::vector<uint8_t> encode_key(const SigParams& P, const Element& key);
Element decode_key(const SigParams& P, const std::vector<uint8_t>& bytes); // BadLength/InvalidConstant/NonCanonical

} // namespace entropoid
