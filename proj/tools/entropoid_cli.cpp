// Command line surface: parameter sets, generator search, a loopback key
// exchange demo, file based keygen / sign / verify, toy discrete log
// solvers, pattern space analysis and the closure size tables.
//
// Exit codes: 0 success, 1 verification or agreement failure, 2 usage or
// input error. Console output is decimal pairs and hex; files carry raw
// bytes (key file: scheme byte, lambda as two little-endian bytes, element;
// signature file: encode(I) || encode(s)).

#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "entropoid/analysis.hpp"
#include "entropoid/errors.hpp"
#include "entropoid/kex.hpp"
#include "entropoid/params_std.hpp"

using namespace entropoid;

namespace {

std::string hex(const std::vector<uint8_t>& v) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(2 * v.size());
    for (uint8_t b : v) {
        s += digits[b >> 4];
        s += digits[b & 15];
    }
    return s;
}

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("short write to " + path);
}

std::unique_ptr<RandomSource> make_rng(bool seeded, uint64_t seed) {
    if (seeded) return std::make_unique<Mt19937Rng>(seed);
    return std::make_unique<SystemRng>();
}

// Applies plain key=value lines to an already parsed command: flags given on
// the command line win, unknown keys are usage errors, '#' starts a comment.
void apply_config(CLI::App* cmd, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    auto strip = [](const std::string& v) {
        const size_t a = v.find_first_not_of(" \t\r");
        if (a == std::string::npos) return std::string();
        const size_t b = v.find_last_not_of(" \t\r");
        return v.substr(a, b - a + 1);
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string at = path + ":" + std::to_string(lineno);
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (strip(line).empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(at + ": expected key=value");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        CLI::Option* opt = cmd->get_option_no_throw("--" + key);
        if (opt == nullptr || key == "config" || key.empty())
            throw std::runtime_error(at + ": unknown key '" + key + "'");
        if (opt->count() > 0) continue;
        opt->add_result(value);
        opt->run_callback();
    }
}

// "x1,x2" or "(x1,x2)", canonical residues required.
Element parse_element(const EntropoidParams& E, std::string text) {
    std::erase_if(text, [](char c) { return c == '(' || c == ')' || c == ' '; });
    const size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw InvalidConstant("element must be written x1,x2");
    const Element e{mpz_class(text.substr(0, comma)),
                    mpz_class(text.substr(comma + 1))};
    if (e.x1 < 0 || e.x1 >= E.m.p || e.x2 < 0 || e.x2 >= E.m.p)
        throw InvalidConstant("element coordinates must lie in [0, p)");
    return e;
}

std::string check_bits(const GeneratorCertificate& c) {
    std::string s;
    for (int i = 0; i < 5; ++i) {
        if (i) s += ',';
        s += c.checks[i] ? '1' : '0';
    }
    return s;
}

const char* hash_name(HashAlgo h) {
    switch (h) {
        case HashAlgo::Sha256: return "sha256";
        case HashAlgo::Sha384: return "sha384";
        default: return "sha512";
    }
}

void print_params(const EntropoidParams& E) {
    std::cout << "p=" << E.m.p << " bits=" << E.m.bits
              << " safe=" << (E.m.safe ? "yes" : "no") << " q=" << E.m.q << "\n"
              << "a3=" << E.a3 << " a8=" << E.a8 << " b2=" << E.b2
              << " b7=" << E.b7 << "\n"
              << "c1=" << E.c1 << " c2=" << E.c2 << " c3=" << E.c3
              << " c4=" << E.c4 << "\n"
              << "zero_star=" << to_string(E.zero_star)
              << " one_star=" << to_string(E.one_star) << "\n"
              << "element_bytes=" << element_bytes(E) << " b_max=" << b_max(E)
              << "\n";
}

// Fresh instance the same way the frozen table rows were derived.
std::pair<EntropoidParams, GeneratorCertificate> derive_instance(unsigned lambda,
                                                                 RandomSource& rng) {
    const PrimeModulus m = gen_safe_prime(lambda, rng);
    const mpz_class a3 = rand_field_element(m, rng, {0});
    const mpz_class a8 = rand_field_element(m, rng, {0});
    const mpz_class b2 = rand_field_element(m, rng, {0});
    const mpz_class b7 = rand_field_element(m, rng, {0});
    EntropoidParams E = params_new(m, a3, a8, b2, b7);
    GeneratorCertificate cert = gen(E, rng);
    return {std::move(E), std::move(cert)};
}

struct ParamsOpts {
    std::string set;
    unsigned lambda = 0;
    uint64_t seed = 0;
    bool seeded = false;
    std::string config;
};

int run_params(const ParamsOpts& o) {
    if (o.lambda) {
        auto rng = make_rng(o.seeded, o.seed);
        auto [E, cert] = derive_instance(o.lambda, *rng);
        std::cout << "fresh entropoid, lambda=" << o.lambda;
        if (o.seeded) std::cout << " seed=" << o.seed;
        std::cout << "\n";
        print_params(E);
        std::cout << "g=" << to_string(cert.g) << " checks=" << check_bits(cert)
                  << "\n";
        return 0;
    }
    if (!o.set.empty()) {
        const EntropoidParams E = std_entropoid(o.set);
        std::cout << "name=" << o.set << "\n";
        print_params(E);
        std::cout << "g=" << to_string(std_generator(o.set)) << "\n";
        return 0;
    }
    for (const auto& name : std_entropoid_names()) {
        const EntropoidParams E = std_entropoid(name);
        std::printf("%-8s bits=%u element_bytes=%zu\n", name.c_str(), E.m.bits,
                    element_bytes(E));
    }
    return 0;
}

struct GenOpts {
    std::string set = "e49223";
    uint64_t attempts = 4096;
    uint64_t seed = 0;
    bool seeded = false;
    bool sylow = false;
    std::string config;
};

int run_gen(const GenOpts& o) {
    const EntropoidParams E = std_entropoid(o.set);
    auto rng = make_rng(o.seeded, o.seed);
    const GeneratorCertificate cert =
        o.sylow ? gen_q(E, *rng, o.attempts) : gen(E, *rng, o.attempts);
    std::cout << "set=" << o.set << " g=" << to_string(cert.g)
              << " checks=" << check_bits(cert)
              << " claimed_order=" << cert.claimed_order << "\n";
    return 0;
}

struct KexOpts {
    unsigned lambda = 128;
    unsigned base = 3;
    uint64_t seed = 0;
    bool seeded = false;
    std::string config;
};

int run_kex_demo(const KexOpts& o) {
    const KexSuite s = std_kex_suite(o.lambda, o.base);
    auto rng = make_rng(o.seeded, o.seed);
    const KexKeypair alice = kex_keygen(s, *rng);
    const KexKeypair bob = kex_keygen(s, *rng);

    // One OS pipe per direction; each wire message is exactly element_bytes.
    int a2b[2], b2a[2];
    if (::pipe(a2b) != 0 || ::pipe(b2a) != 0)
        throw std::runtime_error("pipe failed");
    auto send = [](int fd, const std::vector<uint8_t>& bytes) {
        const ssize_t n = ::write(fd, bytes.data(), bytes.size());
        if (n < 0 || static_cast<size_t>(n) != bytes.size())
            throw std::runtime_error("pipe write failed");
    };
    auto recv = [](int fd, size_t want) {
        std::vector<uint8_t> buf(want);
        size_t got = 0;
        while (got < want) {
            const ssize_t r = ::read(fd, buf.data() + got, want - got);
            if (r <= 0) throw std::runtime_error("pipe read failed");
            got += static_cast<size_t>(r);
        }
        return buf;
    };

    const size_t w = element_bytes(s.E);
    send(a2b[1], encode_element(s.E, alice.pub));
    send(b2a[1], encode_element(s.E, bob.pub));
    const std::vector<uint8_t> bob_got = recv(a2b[0], w);
    const std::vector<uint8_t> alice_got = recv(b2a[0], w);
    for (int fd : {a2b[0], a2b[1], b2a[0], b2a[1]}) ::close(fd);

    const Element alice_key = kex_derive(s, alice, decode_element(s.E, alice_got));
    const Element bob_key = kex_derive(s, bob, decode_element(s.E, bob_got));
    const std::vector<uint8_t> ka = encode_element(s.E, alice_key);
    const std::vector<uint8_t> kb = encode_element(s.E, bob_key);

    std::cout << "set=p" << o.lambda << " base=" << s.base
              << " element_bytes=" << w << "\n"
              << "alice_pub=" << hex(encode_element(s.E, alice.pub)) << "\n"
              << "bob_pub=" << hex(encode_element(s.E, bob.pub)) << "\n"
              << "alice_shared=" << hex(ka) << "\n"
              << "bob_shared=" << hex(kb) << "\n"
              << "shared_match=" << (ka == kb ? "yes" : "no") << "\n"
              << "bytes_on_wire=" << bob_got.size() + alice_got.size() << "\n";
    return ka == kb ? 0 : 1;
}

// Key files carry (scheme, lambda) and resolve against the frozen table; the
// pattern base is a flag with the same default on every side.
SigParams cli_sig_params(unsigned scheme_id, unsigned lambda, unsigned base) {
    const Scheme scheme = scheme_id == 1 ? Scheme::Cderp : Scheme::CderpToDelp;
    SigParams P = std_sig_params(scheme, lambda); // validates the pairing
    if (base != 257) P = sig_params_for(P.E, scheme, base);
    return P;
}

std::pair<SigParams, Element> load_key(const std::string& path, unsigned base) {
    const std::vector<uint8_t> bytes = read_file(path);
    if (bytes.size() < 3) throw BadLength("key file too short: " + path);
    if (bytes[0] != 1 && bytes[0] != 2)
        throw InvalidConstant("unknown scheme byte in " + path);
    const unsigned lambda = bytes[1] | (static_cast<unsigned>(bytes[2]) << 8);
    SigParams P = cli_sig_params(bytes[0], lambda, base);
    Element key = decode_key(P, bytes);
    return {std::move(P), std::move(key)};
}

struct KeygenOpts {
    unsigned scheme = 1;
    unsigned lambda = 128;
    unsigned base = 257;
    std::string pub = "pub.key";
    std::string priv = "priv.key";
    uint64_t seed = 0;
    bool seeded = false;
    std::string config;
};

int run_keygen(const KeygenOpts& o) {
    const SigParams P = cli_sig_params(o.scheme, o.lambda, o.base);
    auto rng = make_rng(o.seeded, o.seed);
    const SigKeyPair kp = sig_keygen(P, *rng);
    const std::vector<uint8_t> pub = encode_key(P, kp.pub_y);
    write_file(o.pub, pub);
    write_file(o.priv, encode_key(P, kp.priv_x));
    std::cout << "scheme=" << o.scheme << " lambda=" << o.lambda
              << " base=" << o.base << " hash=" << hash_name(P.hash) << "\n"
              << "pub=" << hex(pub) << "\n"
              << "wrote " << o.pub << " and " << o.priv << " (" << pub.size()
              << " bytes each)\n";
    return 0;
}

struct SignOpts {
    std::string key = "priv.key";
    std::string in;
    std::string out;
    unsigned base = 257;
    uint64_t seed = 0;
    bool seeded = false;
    std::string config;
};

int run_sign(const SignOpts& o) {
    auto [P, x] = load_key(o.key, o.base);
    const std::vector<uint8_t> msg = read_file(o.in);
    auto rng = make_rng(o.seeded, o.seed);
    const SigKeyPair kp{x, pow_fast(P.E, x, P.B)};
    const std::vector<uint8_t> bytes = encode_signature(P, sign(P, kp, msg, *rng));
    const std::string out = o.out.empty() ? o.in + ".sig" : o.out;
    write_file(out, bytes);
    std::cout << "sig=" << hex(bytes) << "\n"
              << "wrote " << out << " (" << bytes.size() << " bytes)\n";
    return 0;
}

struct VerifyOpts {
    std::string key = "pub.key";
    std::string in;
    std::string sig;
    unsigned base = 257;
    std::string config;
};

int run_verify(const VerifyOpts& o) {
    auto [P, y] = load_key(o.key, o.base);
    const std::vector<uint8_t> msg = read_file(o.in);
    const Signature sig = decode_signature(P, read_file(o.sig));
    const bool ok = verify(P, y, msg, sig);
    std::cout << (ok ? "valid" : "invalid") << "\n";
    return ok ? 0 : 1;
}

struct DelpOpts {
    std::string set = "e7";
    std::string g;
    std::string target;
    bool random_target = false;
    std::string mode = "brute";
    unsigned base = 3;
    uint64_t budget = 100000;
    uint64_t seed = 0;
    bool seeded = false;
    std::string config;
};

int run_delp(const DelpOpts& o) {
    const EntropoidParams E = std_entropoid(o.set);
    const Element g = o.g.empty() ? std_generator(o.set) : parse_element(E, o.g);
    auto rng = make_rng(o.seeded, o.seed);

    Element y;
    std::string planted;
    if (o.random_target) {
        const mpz_class units = (E.m.p - 1) * (E.m.p - 1);
        const PowerIndex idx = random_index(o.base, units + 1, *rng);
        y = pow_fast(E, g, idx);
        planted = format_index(idx);
    } else if (!o.target.empty()) {
        y = parse_element(E, o.target);
    } else {
        throw InvalidConstant("need --target or --random-target");
    }

    std::cout << "set=" << o.set << " g=" << to_string(g) << " base=" << o.base
              << " mode=" << o.mode << " target=" << to_string(y) << "\n";
    if (!planted.empty()) std::cout << "planted=" << planted << "\n";

    std::optional<PowerIndex> found;
    if (o.mode == "brute")
        found = delp_brute(E, g, y, o.base);
    else
        found = delp_random(E, g, y, o.budget, *rng);

    if (!found) {
        std::cout << "found=none\n";
        return 1;
    }
    std::cout << "found=" << format_index(*found) << "\n"
              << "check=" << (pow_fast(E, g, *found) == y ? "ok" : "MISMATCH")
              << "\n";
    return 0;
}

struct AnalyzeOpts {
    std::string set = "e49223";
    unsigned base = 3;
    unsigned level = 0;
    unsigned lambda = 0;
    uint64_t trials = 0;
    std::string csv;
    uint64_t seed = 0;
    bool seeded = false;
    std::string config;
};

int run_estimator(const AnalyzeOpts& o) {
    auto rng = make_rng(o.seeded, o.seed);
    EntropoidParams E;
    Element g;
    if (o.lambda) {
        auto [fresh, cert] = derive_instance(o.lambda, *rng);
        E = std::move(fresh);
        g = cert.g;
    } else {
        E = std_entropoid(o.set);
        g = std_generator(o.set);
    }

    std::cout << "estimator=mean(2*log2(T)-1) base=" << o.base << " trials="
              << o.trials;
    if (o.lambda) std::cout << " lambda=" << o.lambda;
    else std::cout << " set=" << o.set;
    if (o.seeded) std::cout << " seed=" << o.seed;
    std::cout << "\n" << "p=" << E.m.p << " g=" << to_string(g) << "\n";

    const double est = collision_entropy_experiment(E, g, o.base, *rng, o.trials);
    std::printf("estimate_bits=%.4f\n", est);

    if (!o.csv.empty()) {
        std::ofstream out(o.csv, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + o.csv + " for writing");
        out << "# estimator=mean(2*log2(T)-1)";
        if (o.seeded) out << " seed=" << o.seed;
        out << "\nbase,lambda,trials,estimate_bits\n"
            << o.base << "," << o.lambda << "," << o.trials << "," << est << "\n";
        std::cout << "wrote " << o.csv << "\n";
    }
    return 0;
}

int run_analyze(const AnalyzeOpts& o) {
    if (o.trials > 0) return run_estimator(o);
    if (o.level < 2) throw InvalidIndex("partition analysis needs --level >= 2");
    const EntropoidParams E = std_entropoid(o.set);
    const Element g = std_generator(o.set);
    std::cout << "set=" << o.set << " g=" << to_string(g) << " base=" << o.base
              << "\n";

    // For even bases print the predicted max class size and the closed form
    // max probability 1 - ((b-2)/(b-1))^(i-1) next to the measured values.
    const bool even = o.base % 2 == 0;
    if (even)
        std::printf("%3s %8s %10s %9s %9s %9s %14s %6s %9s %9s\n", "i",
                    "classes", "max_class", "H1", "H2", "Hmin", "predicted_max",
                    "match", "pmax", "closed");
    else
        std::printf("%3s %8s %10s %9s %9s %9s\n", "i", "classes", "max_class",
                    "H1", "H2", "Hmin");

    std::vector<PartitionReport> rows;
    for (unsigned i = 2; i <= o.level; ++i) {
        PartitionReport r = partition_xi(E, g, o.base, i);
        uint64_t maxc = 0;
        for (const auto& c : r.classes) maxc = std::max(maxc, c.size);
        if (even) {
            const mpz_class pred = conjecture3_predict(o.base, i);
            const double pmax = std::pow(2.0, -r.hmin);
            const double closed =
                1.0 - std::pow((o.base - 2.0) / (o.base - 1.0), i - 1.0);
            std::printf("%3u %8zu %10llu %9.6f %9.6f %9.6f %14s %6s %9.6f %9.6f\n",
                        i, r.class_count, static_cast<unsigned long long>(maxc),
                        r.h1, r.h2, r.hmin, pred.get_str().c_str(),
                        pred == static_cast<unsigned long>(maxc) ? "yes" : "no",
                        pmax, closed);
        } else {
            std::printf("%3u %8zu %10llu %9.6f %9.6f %9.6f\n", i, r.class_count,
                        static_cast<unsigned long long>(maxc), r.h1, r.h2,
                        r.hmin);
        }
        rows.push_back(std::move(r));
    }

    if (!o.csv.empty()) {
        std::ofstream out(o.csv, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + o.csv + " for writing");
        write_partition_csv_header(out);
        for (const auto& r : rows) write_partition_csv_row(out, r);
        std::cout << "wrote " << rows.size() << " rows to " << o.csv << "\n";
    }
    return 0;
}

struct TablesOpts {
    std::string which = "e7";
    std::string config;
};

int run_tables(const TablesOpts& o) {
    const EntropoidParams E = std_entropoid(o.which);
    const GridReport grid = grid_report(E);
    std::cout << "set=" << o.which << " p=" << E.m.p
              << " zero_star=" << to_string(grid.zero_star) << "\n";
    auto print_grid = [&](const char* name,
                          const std::vector<std::vector<uint64_t>>& cells,
                          uint64_t maxv) {
        int width = 1;
        for (uint64_t v = maxv; v >= 10; v /= 10) ++width;
        std::cout << name << " sizes, rows x1 = 0.." << E.m.p - 1
                  << ", columns x2 = 0.." << E.m.p - 1 << " (zero row x1="
                  << grid.zero_star.x1 << ", zero column x2="
                  << grid.zero_star.x2 << "):\n";
        for (const auto& row : cells) {
            for (uint64_t v : row)
                std::printf(" %*llu", width, static_cast<unsigned long long>(v));
            std::printf("\n");
        }
    };
    print_grid("span2", grid.span2_sizes, grid.max_span2);
    std::cout << "max_span2=" << grid.max_span2 << "\n";
    print_grid("span", grid.span_sizes, grid.max_span);
    std::cout << "max_span=" << grid.max_span << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropoid key exchange, signatures and analysis toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    // Library errors surface as `fail_code` (1 where a failed check is the
    // result, 2 for bad input); anything else is a usage error.
    auto guarded = [&rc](int fail_code, auto fn) {
        return [&rc, fail_code, fn]() {
            try {
                rc = fn();
            } catch (const Error& e) {
                std::cerr << "error: " << e.what() << "\n";
                rc = fail_code;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                rc = 2;
            }
        };
    };

    ParamsOpts po;
    auto* params_cmd = app.add_subcommand(
        "params", "print a named parameter set, list all, or derive fresh ones");
    auto* po_set = params_cmd->add_option("--set", po.set, "named parameter set");
    params_cmd->add_option("--lambda", po.lambda,
                           "derive a fresh set over a safe prime of this size")
        ->check(CLI::Range(8u, 512u))
        ->excludes(po_set);
    params_cmd->add_option("--seed", po.seed, "deterministic randomness seed");
    params_cmd->add_option("--config", po.config, "read options from a key=value file");
    params_cmd->callback(guarded(2, [&po, params_cmd] {
        if (!po.config.empty()) apply_config(params_cmd, po.config);
        po.seeded = params_cmd->count("--seed") > 0;
        return run_params(po);
    }));

    GenOpts go;
    auto* gen_cmd = app.add_subcommand(
        "gen", "search for a full generator and print its certificate");
    gen_cmd->add_option("--set", go.set, "parameter set name");
    gen_cmd->add_option("--attempts", go.attempts, "candidate budget");
    gen_cmd->add_option("--seed", go.seed, "deterministic randomness seed");
    gen_cmd->add_option("--config", go.config, "read options from a key=value file");
    gen_cmd->callback(guarded(2, [&go, gen_cmd] {
        if (!go.config.empty()) apply_config(gen_cmd, go.config);
        go.seeded = gen_cmd->count("--seed") > 0;
        go.sylow = false;
        return run_gen(go);
    }));

    GenOpts gqo;
    auto* genq_cmd = app.add_subcommand(
        "genq", "search for a generator of the order q^2 subquasigroup");
    genq_cmd->add_option("--set", gqo.set, "parameter set name");
    genq_cmd->add_option("--attempts", gqo.attempts, "candidate budget");
    genq_cmd->add_option("--seed", gqo.seed, "deterministic randomness seed");
    genq_cmd->add_option("--config", gqo.config, "read options from a key=value file");
    genq_cmd->callback(guarded(2, [&gqo, genq_cmd] {
        if (!gqo.config.empty()) apply_config(genq_cmd, gqo.config);
        gqo.seeded = genq_cmd->count("--seed") > 0;
        gqo.sylow = true;
        return run_gen(gqo);
    }));

    KexOpts ko;
    auto* kex_cmd = app.add_subcommand(
        "kex-demo", "run both key exchange roles over a loopback pipe");
    kex_cmd->add_option("--lambda", ko.lambda, "suite size in bits")
        ->check(CLI::IsMember({128u, 256u}));
    kex_cmd->add_option("--base", ko.base, "power index base (odd, >= 3)");
    kex_cmd->add_option("--seed", ko.seed, "deterministic randomness seed");
    kex_cmd->add_option("--config", ko.config, "read options from a key=value file");
    kex_cmd->callback(guarded(1, [&ko, kex_cmd] {
        if (!ko.config.empty()) apply_config(kex_cmd, ko.config);
        ko.seeded = kex_cmd->count("--seed") > 0;
        return run_kex_demo(ko);
    }));

    KeygenOpts kg;
    auto* keygen_cmd =
        app.add_subcommand("keygen", "generate a signature keypair into files");
    keygen_cmd->add_option("--scheme", kg.scheme,
                           "1 = hash-derived indices, 2 = conservative")
        ->check(CLI::IsMember({1u, 2u}));
    keygen_cmd->add_option("--lambda", kg.lambda,
                           "security size (scheme 1: 128/192/256, scheme 2: "
                           "256/384/512)");
    keygen_cmd->add_option("--base", kg.base, "challenge index base")
        ->check(CLI::IsMember({257u, 17u}));
    keygen_cmd->add_option("--pub", kg.pub, "public key output path");
    keygen_cmd->add_option("--priv", kg.priv, "private key output path");
    keygen_cmd->add_option("--seed", kg.seed, "deterministic randomness seed");
    keygen_cmd->add_option("--config", kg.config, "read options from a key=value file");
    keygen_cmd->callback(guarded(2, [&kg, keygen_cmd] {
        if (!kg.config.empty()) apply_config(keygen_cmd, kg.config);
        kg.seeded = keygen_cmd->count("--seed") > 0;
        return run_keygen(kg);
    }));

    SignOpts so;
    auto* sign_cmd = app.add_subcommand("sign", "sign a message file");
    sign_cmd->add_option("--key", so.key, "private key file");
    sign_cmd->add_option("--in", so.in, "message file")->required();
    sign_cmd->add_option("--out", so.out, "signature output path (default: <in>.sig)");
    sign_cmd->add_option("--base", so.base, "challenge index base")
        ->check(CLI::IsMember({257u, 17u}));
    sign_cmd->add_option("--seed", so.seed, "deterministic randomness seed");
    sign_cmd->add_option("--config", so.config, "read options from a key=value file");
    sign_cmd->callback(guarded(2, [&so, sign_cmd] {
        if (!so.config.empty()) apply_config(sign_cmd, so.config);
        so.seeded = sign_cmd->count("--seed") > 0;
        return run_sign(so);
    }));

    VerifyOpts vo;
    auto* verify_cmd =
        app.add_subcommand("verify", "verify a signature file against a message");
    verify_cmd->add_option("--key", vo.key, "public key file");
    verify_cmd->add_option("--in", vo.in, "message file")->required();
    verify_cmd->add_option("--sig", vo.sig, "signature file")->required();
    verify_cmd->add_option("--base", vo.base, "challenge index base")
        ->check(CLI::IsMember({257u, 17u}));
    verify_cmd->add_option("--config", vo.config, "read options from a key=value file");
    // A signature that fails to decode failed to verify.
    verify_cmd->callback(guarded(1, [&vo, verify_cmd] {
        if (!vo.config.empty()) apply_config(verify_cmd, vo.config);
        return run_verify(vo);
    }));

    DelpOpts dp;
    auto* delp_cmd = app.add_subcommand(
        "delp", "solve y = g^index on a toy set by brute force or random search");
    delp_cmd->add_option("--set", dp.set, "parameter set name");
    delp_cmd->add_option("--g", dp.g, "base element x1,x2 (default: frozen generator)");
    auto* target_opt =
        delp_cmd->add_option("--target", dp.target, "target element x1,x2");
    delp_cmd->add_flag("--random-target", dp.random_target,
                       "plant a random power of g and solve for it")
        ->excludes(target_opt);
    delp_cmd->add_option("--mode", dp.mode, "search strategy")
        ->check(CLI::IsMember({"brute", "random"}));
    delp_cmd->add_option("--base", dp.base, "index base for brute mode (odd, >= 3)");
    delp_cmd->add_option("--budget", dp.budget, "attempt budget for random mode");
    delp_cmd->add_option("--seed", dp.seed, "deterministic randomness seed");
    delp_cmd->add_option("--config", dp.config, "read options from a key=value file");
    delp_cmd->callback(guarded(1, [&dp, delp_cmd] {
        if (!dp.config.empty()) apply_config(delp_cmd, dp.config);
        dp.seeded = delp_cmd->count("--seed") > 0;
        return run_delp(dp);
    }));

    AnalyzeOpts ao;
    auto* analyze_cmd = app.add_subcommand(
        "analyze",
        "pattern space partitions (--level) or the collision entropy "
        "estimator (--trials)");
    analyze_cmd->add_option("--set", ao.set, "parameter set name");
    analyze_cmd->add_option("--base", ao.base, "power index base");
    analyze_cmd->add_option("--level", ao.level, "partition levels 2..N");
    analyze_cmd->add_option("--lambda", ao.lambda,
                            "estimator: derive a fresh instance of this size")
        ->check(CLI::Range(8u, 64u));
    analyze_cmd->add_option("--trials", ao.trials, "estimator trial count");
    analyze_cmd->add_option("--csv", ao.csv, "write results as CSV to this path");
    analyze_cmd->add_option("--seed", ao.seed, "deterministic randomness seed");
    analyze_cmd->add_option("--config", ao.config, "read options from a key=value file");
    analyze_cmd->callback(guarded(2, [&ao, analyze_cmd] {
        if (!ao.config.empty()) apply_config(analyze_cmd, ao.config);
        ao.seeded = analyze_cmd->count("--seed") > 0;
        return run_analyze(ao);
    }));

    TablesOpts to;
    auto* tables_cmd = app.add_subcommand(
        "tables", "print the generated set size grids for a small set");
    tables_cmd->add_option("--which", to.which, "parameter set name (p <= 64)");
    tables_cmd->add_option("--config", to.config, "read options from a key=value file");
    tables_cmd->callback(guarded(2, [&to, tables_cmd] {
        if (!to.config.empty()) apply_config(tables_cmd, to.config);
        return run_tables(to);
    }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}
