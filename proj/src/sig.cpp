#include "entropoid/sig.hpp"

#include <openssl/evp.h>

#include <cassert>

namespace entropoid {

size_t digest_bytes(HashAlgo algo) {
    switch (algo) {
        case HashAlgo::Sha256: return 32;
        case HashAlgo::Sha384: return 48;
        case HashAlgo::Sha512: return 64;
    }
    return 0;
}

std::vector<uint8_t> digest(HashAlgo algo, const uint8_t* data, size_t len) {
    const EVP_MD* md = nullptr;
    switch (algo) {
        case HashAlgo::Sha256: md = EVP_sha256(); break;
        case HashAlgo::Sha384: md = EVP_sha384(); break;
        case HashAlgo::Sha512: md = EVP_sha512(); break;
    }
    std::vector<uint8_t> out(EVP_MD_size(md));
    unsigned int outlen = 0;
    if (EVP_Digest(data, len, out.data(), &outlen, md, nullptr) != 1)
        throw Error("digest computation failed");
    out.resize(outlen);
    return out;
}

std::vector<uint8_t> digest(HashAlgo algo, const std::vector<uint8_t>& data) {
    return digest(algo, data.data(), data.size());
}

namespace {

HashAlgo hash_for(Scheme scheme, unsigned lambda) {
    if (scheme == Scheme::Cderp) {
        if (lambda <= 128) return HashAlgo::Sha256;
        if (lambda <= 192) return HashAlgo::Sha384;
        return HashAlgo::Sha512;
    }
    if (lambda <= 256) return HashAlgo::Sha256;
    if (lambda <= 384) return HashAlgo::Sha384;
    return HashAlgo::Sha512;
}

// Little-endian digit list of v; v >= 1. (mpz_sizeinbase caps at base 62,
// so digits are built by division.)
std::vector<uint32_t> digits_of(const mpz_class& v, unsigned base) {
    std::vector<uint32_t> digits;
    mpz_class t = v;
    while (t > 0) {
        digits.push_back(static_cast<uint32_t>(mpz_fdiv_ui(t.get_mpz_t(), base)));
        t /= base;
    }
    return digits;
}

// Pattern digit from a digest byte: identity for base 257, low nibble for 17.
uint32_t pattern_digit(unsigned base, uint8_t byte) {
    return base == 257 ? byte : byte % 16;
}

// Scheme 1 digit mapping from a digest; returns false when the integer half
// maps to zero (caller resamples).
bool cderp_index_from_digest(const SigParams& P, const std::vector<uint8_t>& dg,
                             PowerIndex& out) {
    const size_t half = dg.size() / 2;
    mpz_class h;
    mpz_import(h.get_mpz_t(), half, -1, 1, 0, 0, dg.data());
    std::vector<uint32_t> digits = digits_of(h, P.base);
    if (digits.size() > P.k_max) {
        // Never fires for base 257 (256^k_max < 257^k_max); for base 17 the
        // integer part keeps only its low k_max digits.
        mpz_class cap;
        mpz_ui_pow_ui(cap.get_mpz_t(), P.base, P.k_max);
        h %= cap;
        digits = digits_of(h, P.base);
    }
    if (h == 0) return false;
    std::vector<uint32_t> pattern(digits.size());
    for (size_t i = 0; i < pattern.size(); ++i)
        pattern[i] = pattern_digit(P.base, dg[half + i]);
    out = make_index(P.base, std::move(digits), std::move(pattern));
    return true;
}

PowerIndex q_index_from_bytes(const SigParams& P, const std::vector<uint8_t>& bytes) {
    const mpz_class& q = P.E.m.q;
    std::vector<uint32_t> digits = digits_of(q, P.base);
    if (digits.size() > bytes.size())
        throw InvalidIndex("digest too short for q's digit count");
    std::vector<uint32_t> pattern(digits.size());
    for (size_t i = 0; i < pattern.size(); ++i)
        pattern[i] = pattern_digit(P.base, bytes[i]);
    return make_index(P.base, std::move(digits), std::move(pattern));
}

const std::vector<uint8_t> kSeed{'a', 'b', 'c'};

PowerIndex root_index(const SigParams& P) {
    if (P.scheme == Scheme::Cderp)
        return hash_to_index(P, kSeed.data(), kSeed.size());
    return q_index_from_bytes(P, digest(P.hash, kSeed));
}

} // namespace

PowerIndex hash_to_index(const SigParams& P, const uint8_t* msg, size_t len) {
    assert(P.scheme == Scheme::Cderp);
    std::vector<uint8_t> buf(msg, msg + len);
    PowerIndex idx;
    // Zero integer halves are resolved by re-hashing with a domain byte; two
    // consecutive zero images would mean the hash is broken.
    for (int round = 0; round < 2; ++round) {
        if (cderp_index_from_digest(P, digest(P.hash, buf), idx)) return idx;
        buf.push_back(0x01);
    }
    throw ZeroDigest();
}

PowerIndex hash_to_index(const SigParams& P, const std::vector<uint8_t>& msg) {
    return hash_to_index(P, msg.data(), msg.size());
}

PowerIndex hash_to_index_q(const SigParams& P, const uint8_t* msg, size_t len) {
    assert(P.scheme == Scheme::CderpToDelp);
    return q_index_from_bytes(P, digest(P.hash, msg, len));
}

PowerIndex hash_to_index_q(const SigParams& P, const std::vector<uint8_t>& msg) {
    return hash_to_index_q(P, msg.data(), msg.size());
}

SigParams sig_params_for(const EntropoidParams& E, Scheme scheme, unsigned base) {
    if (base != 257 && base != 17)
        throw InvalidConstant("signature base must be 257 or 17");
    if (!E.m.safe) throw InvalidConstant("signatures need a safe prime modulus");
    SigParams P;
    P.E = E;
    P.scheme = scheme;
    P.lambda = E.m.bits;
    P.hash = hash_for(scheme, P.lambda);
    P.base = base;
    P.k_max = digest_bytes(P.hash) / 2;
    P.B = root_index(P);
    return P;
}

SigParams sig_params_new(Scheme scheme, unsigned lambda, RandomSource& rng,
                         unsigned base) {
    const PrimeModulus m = gen_safe_prime(lambda, rng);
    const std::vector<mpz_class> zero{mpz_class(0)};
    EntropoidParams E = params_new(m, rand_field_element(m, rng, zero),
                                   rand_field_element(m, rng, zero),
                                   rand_field_element(m, rng, zero),
                                   rand_field_element(m, rng, zero));
    return sig_params_for(E, scheme, base);
}

PowerIndex message_challenge(const SigParams& P, const Element& I,
                             const std::vector<uint8_t>& msg) {
    const std::vector<uint8_t> enc = encode_element(P.E, I);
    std::vector<uint8_t> buf;
    buf.reserve(4 + enc.size() + msg.size());
    for (int i = 0; i < 4; ++i)
        buf.push_back(static_cast<uint8_t>((enc.size() >> (8 * i)) & 0xff));
    buf.insert(buf.end(), enc.begin(), enc.end());
    buf.insert(buf.end(), msg.begin(), msg.end());
    return P.scheme == Scheme::Cderp ? hash_to_index(P, buf)
                                     : hash_to_index_q(P, buf);
}

SigKeyPair sig_keygen(const SigParams& P, RandomSource& rng) {
    SigKeyPair kp;
    kp.priv_x = rand_unit(P.E, rng);
    kp.pub_y = pow_fast(P.E, kp.priv_x, P.B);
    return kp;
}

Signature sign(const SigParams& P, const SigKeyPair& kp,
               const std::vector<uint8_t>& msg, RandomSource& rng) {
    Signature sig;
    const Element r = rand_unit(P.E, rng);
    sig.I = pow_fast(P.E, r, P.B);
    const PowerIndex H = message_challenge(P, sig.I, msg);
    sig.s = pow_fast(P.E, star(P.E, kp.priv_x, r), H);
    return sig;
}

bool verify(const SigParams& P, const Element& y,
            const std::vector<uint8_t>& msg, const Signature& sig) {
    const PowerIndex H = message_challenge(P, sig.I, msg);
    return pow_fast(P.E, sig.s, P.B) ==
           pow_fast(P.E, star(P.E, y, sig.I), H);
}

PowerIndex random_challenge(const SigParams& P, RandomSource& rng) {
    std::vector<uint8_t> buf(digest_bytes(P.hash));
    rng.fill(buf.data(), buf.size());
    if (P.scheme == Scheme::CderpToDelp) return q_index_from_bytes(P, buf);
    PowerIndex idx;
    for (int round = 0; round < 64; ++round) {
        if (cderp_index_from_digest(P, buf, idx)) return idx;
        rng.fill(buf.data(), buf.size());
    }
    throw ZeroDigest("random challenge kept hitting zero integer part");
}

IdTranscript id_round(const SigParams& P, const SigKeyPair& kp,
                      RandomSource& prover_rng, RandomSource& verifier_rng) {
    IdTranscript t;
    const Element r = rand_unit(P.E, prover_rng);
    t.I = pow_fast(P.E, r, P.B);
    t.H = random_challenge(P, verifier_rng);
    t.s = pow_fast(P.E, star(P.E, kp.priv_x, r), t.H);
    t.accepted = id_check(P, kp.pub_y, t);
    return t;
}

bool id_check(const SigParams& P, const Element& y, const IdTranscript& t) {
    return pow_fast(P.E, t.s, P.B) ==
           pow_fast(P.E, star(P.E, y, t.I), t.H);
}

std::vector<uint8_t> encode_signature(const SigParams& P, const Signature& sig) {
    std::vector<uint8_t> out = encode_element(P.E, sig.I);
    const std::vector<uint8_t> s = encode_element(P.E, sig.s);
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

Signature decode_signature(const SigParams& P, const std::vector<uint8_t>& bytes) {
    const size_t w = element_bytes(P.E);
    if (bytes.size() != 2 * w)
        throw MalformedSignature("signature must be exactly " +
                                 std::to_string(2 * w) + " bytes");
    try {
        Signature sig;
        sig.I = decode_element(P.E, bytes.data(), w);
        sig.s = decode_element(P.E, bytes.data() + w, w);
        return sig;
    } catch (const Error& e) {
        throw MalformedSignature(e.what());
    }
}

std::vector<uint8_t> encode_key(const SigParams& P, const Element& key) {
    std::vector<uint8_t> out;
    out.push_back(static_cast<uint8_t>(P.scheme));
    out.push_back(static_cast<uint8_t>(P.lambda & 0xff));
    out.push_back(static_cast<uint8_t>((P.lambda >> 8) & 0xff));
    const std::vector<uint8_t> e = encode_element(P.E, key);
    out.insert(out.end(), e.begin(), e.end());
    return out;
}

Element decode_key(const SigParams& P, const std::vector<uint8_t>& bytes) {
    if (bytes.size() != 3 + element_bytes(P.E))
        throw BadLength("key file has wrong size");
    if (bytes[0] != static_cast<uint8_t>(P.scheme))
        throw InvalidConstant("key file scheme does not match parameters");
    const unsigned lambda = bytes[1] | (unsigned(bytes[2]) << 8);
    if (lambda != P.lambda)
        throw InvalidConstant("key file lambda does not match parameters");
    return decode_element(P.E, bytes.data() + 3, bytes.size() - 3);
}

} // namespace entropoid
