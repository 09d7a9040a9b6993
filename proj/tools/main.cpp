// msnum: exact weights of GF(2) quadratic forms and graph-state invariants.

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "msnum/classify.hpp"
#include "msnum/closedforms.hpp"
#include "msnum/gf2.hpp"
#include "msnum/graph.hpp"
#include "msnum/graphstate.hpp"
#include "msnum/quadform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

struct InputSpec {
    std::string file;    // empty or "-" means standard input
    std::string inline_text;
    std::string format;  // "", "graph6", "edgelist", "poly"
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
    cmd->add_option("input", in.file, "input file ('-' or absent: standard input)");
    cmd->add_option("-t,--text", in.inline_text, "inline input instead of a file");
    cmd->add_option("--format", in.format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist", "poly"}));
}

std::string slurp(const InputSpec& in) {
    if (!in.inline_text.empty()) return in.inline_text;
    if (in.file.empty() || in.file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(in.file);
    if (!f) throw std::runtime_error("cannot open input file: " + in.file);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string infer_format(const std::string& text) {
    if (text.find(';') != std::string::npos) return "poly";
    // An edge list starts with a decimal vertex count and contains spacing;
    // a bare graph6 record never contains interior whitespace.
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
        trimmed.pop_back();
    }
    if (!trimmed.empty() && std::isdigit(static_cast<unsigned char>(trimmed[0])) &&
        trimmed.find_first_of(" \t\n") != std::string::npos) {
        return "edgelist";
    }
    return "graph6";
}

msnum::Graph load_graph(const InputSpec& in) {
    const std::string text = slurp(in);
    std::string fmt = in.format.empty() ? infer_format(text) : in.format;
    if (fmt == "poly") throw std::runtime_error("this subcommand expects a graph input");
    if (fmt == "edgelist") return msnum::parse_edge_list(text);
    return msnum::parse_graph6(text);
}

msnum::QuadraticPolynomial load_polynomial(const InputSpec& in) {
    const std::string text = slurp(in);
    std::string fmt = in.format.empty() ? infer_format(text) : in.format;
    if (fmt == "poly") return msnum::parse_polynomial(text);
    if (fmt == "edgelist") {
        return msnum::QuadraticPolynomial::from_graph(msnum::parse_edge_list(text));
    }
    return msnum::QuadraticPolynomial::from_graph(msnum::parse_graph6(text));
}

const char* kind_name(msnum::ReadonceKind kind) {
    return kind == msnum::ReadonceKind::type_one ? "I" : "II";
}

std::string render_certificate(std::size_t n, const msnum::Reduction& r) {
    std::string out;
    out += "n " + std::to_string(n) + "\n";
    out += "m " + std::to_string(r.form.m) + "\n";
    out += std::string("kind ") + kind_name(r.form.kind) + "\n";
    out += std::string("z ") + (r.form.z ? "1" : "0") + "\n";
    out += "c " + r.cert.c.to_string() + "\n";
    out += "T\n";
    out += r.cert.t.dump();
    return out;
}

struct ParsedCertificate {
    std::size_t n = 0;
    msnum::ReadonceForm form;
    msnum::ReductionCertificate cert;
};

ParsedCertificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    ParsedCertificate out;
    std::string key;
    std::size_t m = 0;
    bool have_m = false;
    while (in >> key) {
        if (key == "n") {
            in >> out.n;
        } else if (key == "m") {
            in >> m;
            have_m = true;
        } else if (key == "kind") {
            std::string v;
            in >> v;
            if (v == "I") {
                out.form.kind = msnum::ReadonceKind::type_one;
            } else if (v == "II") {
                out.form.kind = msnum::ReadonceKind::type_two;
            } else {
                throw std::runtime_error("certificate: kind must be I or II");
            }
        } else if (key == "z") {
            int v = 0;
            in >> v;
            out.form.z = v != 0;
        } else if (key == "c") {
            std::string rest;
            std::getline(in, rest);
            std::string bits;
            for (char ch : rest) {
                if (!std::isspace(static_cast<unsigned char>(ch))) bits += ch;
            }
            out.cert.c = msnum::gf2::BitVector::from_string(bits);
        } else if (key == "T") {
            std::string row;
            std::vector<std::string> rows;
            while (in >> row) rows.push_back(row);
            out.cert.t = msnum::gf2::BitMatrix::from_strings(rows);
        } else {
            throw std::runtime_error("certificate: unknown key '" + key + "'");
        }
        if (!in && !in.eof()) throw std::runtime_error("certificate: malformed value");
    }
    if (!have_m) throw std::runtime_error("certificate: missing m");
    out.form.m = m;
    if (out.cert.t.rows() == 0 && m > 0) throw std::runtime_error("certificate: missing T");
    if (out.cert.t.rows() != m) throw std::runtime_error("certificate: T row count != m");
    if (out.cert.c.size() != m) throw std::runtime_error("certificate: c length != m");
    if (out.cert.t.rows() > 0 && out.cert.t.cols() != out.n) {
        throw std::runtime_error("certificate: T column count != n");
    }
    return out;
}

msnum::Graph random_graph(std::size_t n, std::mt19937_64& rng) {
    msnum::Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng() & 1) g.add_edge(i, j);
        }
    }
    return g;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact weight of quadratic Boolean forms over GF(2) and graph-state invariants"};
    app.require_subcommand(1);

    // weight
    InputSpec weight_in;
    auto* cmd_weight = app.add_subcommand("weight", "MS-number of a graph / weight of a polynomial");
    add_input_options(cmd_weight, weight_in);

    // reduce
    InputSpec reduce_in;
    bool emit_certificate = false;
    auto* cmd_reduce = app.add_subcommand("reduce", "readonce form (m, kind, z) of a polynomial");
    add_input_options(cmd_reduce, reduce_in);
    cmd_reduce->add_flag("--emit-certificate", emit_certificate, "also print the substitution (T, c)");

    // rank
    InputSpec rank_in;
    auto* cmd_rank = app.add_subcommand("rank", "GF(2) rank of the adjacency matrix");
    add_input_options(cmd_rank, rank_in);

    // amplitudes
    InputSpec amp_in;
    auto* cmd_amp = app.add_subcommand("amplitudes", "graph-state amplitude signs ('+'/'-' string)");
    add_input_options(cmd_amp, amp_in);

    // spectrum
    InputSpec spec_in;
    auto* cmd_spec = app.add_subcommand("spectrum", "exact Walsh-Hadamard spectrum");
    add_input_options(cmd_spec, spec_in);

    // schmidt
    InputSpec schmidt_in;
    auto* cmd_schmidt = app.add_subcommand("schmidt", "Schmidt rank of a bipartite graph state");
    add_input_options(cmd_schmidt, schmidt_in);

    // bent
    InputSpec bent_in;
    auto* cmd_bent = app.add_subcommand("bent", "binary rank and bent status");
    add_input_options(cmd_bent, bent_in);

    // pivot / lc
    InputSpec pivot_in;
    std::size_t pivot_u = 0, pivot_v = 0;
    auto* cmd_pivot = app.add_subcommand("pivot", "edge-local complementation, output as graph6");
    cmd_pivot->add_option("u", pivot_u, "first endpoint")->required();
    cmd_pivot->add_option("v", pivot_v, "second endpoint")->required();
    add_input_options(cmd_pivot, pivot_in);

    InputSpec lc_in;
    std::size_t lc_v = 0;
    auto* cmd_lc = app.add_subcommand("lc", "local complementation at a vertex, output as graph6");
    cmd_lc->add_option("v", lc_v, "vertex")->required();
    add_input_options(cmd_lc, lc_in);

    // formula
    InputSpec formula_in;
    std::string family;
    std::vector<std::size_t> params;
    auto* cmd_formula = app.add_subcommand("formula", "closed-form MS-number for a graph family");
    cmd_formula->add_option("family", family, "complete|path|cycle|star|complete_bipartite|qmax|tree")
        ->required();
    cmd_formula->add_option("params", params, "family parameters (n, or p q)");
    add_input_options(cmd_formula, formula_in);

    // classify
    InputSpec classify_in;
    std::size_t rep_cap = 4;
    std::string output_mode = "text";
    auto* cmd_classify = app.add_subcommand("classify", "group a graph6 stream by (order, MS-number)");
    add_input_options(cmd_classify, classify_in);
    cmd_classify->add_option("--representatives", rep_cap, "representatives kept per class");
    cmd_classify->add_option("--output", output_mode, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));

    // verify
    InputSpec verify_in;
    std::size_t verify_max_n = 6;
    bool verify_exhaustive = false;
    std::size_t verify_samples = 100;
    std::uint64_t verify_seed = 1;
    auto* cmd_verify = app.add_subcommand("verify", "compare the reduction against the brute-force oracle");
    add_input_options(cmd_verify, verify_in);
    cmd_verify->add_flag("--exhaustive", verify_exhaustive, "all labeled graphs up to --max-n");
    cmd_verify->add_option("--max-n", verify_max_n, "largest order to test");
    cmd_verify->add_option("--samples", verify_samples, "random graphs per order (non-exhaustive)");
    cmd_verify->add_option("--seed", verify_seed, "random seed");
    bool verify_stream = false;
    cmd_verify->add_flag("--stream", verify_stream, "verify a graph6 stream from the input instead");

    // verify-cert
    InputSpec vcert_in;
    std::string cert_file;
    auto* cmd_vcert = app.add_subcommand("verify-cert", "check an emitted certificate against its input");
    add_input_options(cmd_vcert, vcert_in);
    cmd_vcert->add_option("--cert", cert_file, "certificate file from 'reduce --emit-certificate'")
        ->required();

    // orbit
    InputSpec orbit_in;
    auto* cmd_orbit = app.add_subcommand("orbit", "pivot orbit as graph6 lines");
    add_input_options(cmd_orbit, orbit_in);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_weight->parsed()) {
            std::cout << msnum::weight(load_polynomial(weight_in)).str() << "\n";
        } else if (cmd_reduce->parsed()) {
            const auto f = load_polynomial(reduce_in);
            const auto r = msnum::reduce_to_readonce(f);
            std::cout << "m " << r.form.m << "\n"
                      << "kind " << kind_name(r.form.kind) << "\n"
                      << "z " << (r.form.z ? 1 : 0) << "\n";
            if (emit_certificate) {
                std::cout << "n " << f.variable_count() << "\n"
                          << "c " << r.cert.c.to_string() << "\n"
                          << "T\n"
                          << r.cert.t.dump();
            }
        } else if (cmd_rank->parsed()) {
            std::cout << msnum::gf2::rank(load_graph(rank_in).adjacency_matrix()) << "\n";
        } else if (cmd_amp->parsed()) {
            std::cout << msnum::amplitudes(load_graph(amp_in)).sign_string() << "\n";
        } else if (cmd_spec->parsed()) {
            const auto spec = msnum::wht_spectrum(load_polynomial(spec_in));
            for (std::size_t i = 0; i < spec.numerators.size(); ++i) {
                std::cout << spec.coefficient_text(i) << "\n";
            }
        } else if (cmd_schmidt->parsed()) {
            std::cout << msnum::schmidt_rank_bipartite(load_graph(schmidt_in)) << "\n";
        } else if (cmd_bent->parsed()) {
            const auto result = msnum::max_rank_bent_check(load_graph(bent_in));
            std::cout << "rank " << result.rank << "\n"
                      << "bent " << (result.bent ? "true" : "false") << "\n";
        } else if (cmd_pivot->parsed()) {
            std::cout << msnum::to_graph6(msnum::pivot(load_graph(pivot_in), pivot_u, pivot_v)) << "\n";
        } else if (cmd_lc->parsed()) {
            std::cout << msnum::to_graph6(msnum::local_complement(load_graph(lc_in), lc_v)) << "\n";
        } else if (cmd_formula->parsed()) {
            namespace cf = msnum::closedforms;
            auto need = [&](std::size_t k) {
                if (params.size() != k) {
                    throw std::runtime_error("formula " + family + ": expected " +
                                             std::to_string(k) + " parameter(s)");
                }
            };
            msnum::BigInt w;
            if (family == "complete") {
                need(1);
                w = cf::w_complete(params[0]);
            } else if (family == "path") {
                need(1);
                w = cf::w_path(params[0]);
            } else if (family == "cycle") {
                need(1);
                w = cf::w_cycle(params[0]);
            } else if (family == "star") {
                need(1);
                w = cf::w_star(params[0]);
            } else if (family == "complete_bipartite") {
                need(2);
                w = cf::w_complete_bipartite(params[0], params[1]);
            } else if (family == "qmax") {
                need(1);
                w = cf::w_qmax(params[0]);
            } else if (family == "tree") {
                need(0);
                w = cf::w_tree(load_graph(formula_in));
            } else {
                throw std::runtime_error("formula: unknown family '" + family + "'");
            }
            std::cout << w.str() << "\n";
        } else if (cmd_classify->parsed()) {
            const std::string text = slurp(classify_in);
            std::istringstream stream(text);
            const auto report = msnum::classify_stream(stream, rep_cap);
            std::cout << (output_mode == "structured" ? msnum::render_structured(report)
                                                      : msnum::render_tsv(report));
        } else if (cmd_verify->parsed()) {
            std::size_t checked = 0, mismatches = 0;
            auto check = [&](const msnum::Graph& g) {
                const auto f = msnum::QuadraticPolynomial::from_graph(g);
                ++checked;
                if (msnum::weight(f) != msnum::brute_force_weight(f)) {
                    ++mismatches;
                    std::cout << "MISMATCH " << msnum::to_graph6(g) << "\n";
                }
            };
            if (verify_stream) {
                std::istringstream stream(slurp(verify_in));
                std::string line;
                while (std::getline(stream, line)) {
                    if (line.empty() || line == ">>graph6<<") continue;
                    check(msnum::parse_graph6(line));
                }
            } else if (verify_exhaustive) {
                for (std::size_t n = 1; n <= verify_max_n; ++n) {
                    const std::size_t pairs = n * (n - 1) / 2;
                    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                        msnum::Graph g(n);
                        std::size_t bit = 0;
                        for (std::size_t i = 0; i < n; ++i) {
                            for (std::size_t j = i + 1; j < n; ++j, ++bit) {
                                if ((mask >> bit) & 1) g.add_edge(i, j);
                            }
                        }
                        check(g);
                    }
                }
            } else {
                std::mt19937_64 rng(verify_seed);
                for (std::size_t n = 1; n <= verify_max_n; ++n) {
                    for (std::size_t s = 0; s < verify_samples; ++s) {
                        check(random_graph(n, rng));
                    }
                }
            }
            std::cout << "checked " << checked << " mismatches " << mismatches << "\n";
            if (mismatches > 0) return kExitMismatch;
        } else if (cmd_vcert->parsed()) {
            std::ifstream cf(cert_file);
            if (!cf) throw std::runtime_error("cannot open certificate file: " + cert_file);
            std::ostringstream ss;
            ss << cf.rdbuf();
            const auto parsed = parse_certificate(ss.str());
            const auto f = load_polynomial(vcert_in);
            if (f.variable_count() != parsed.n) {
                throw std::runtime_error("certificate: n does not match the input");
            }
            const bool ok = msnum::verify_certificate(f, parsed.form, parsed.cert);
            std::cout << (ok ? "valid" : "INVALID") << "\n";
            if (!ok) return kExitMismatch;
        } else if (cmd_orbit->parsed()) {
            for (const auto& member : msnum::pivot_orbit(load_graph(orbit_in))) {
                std::cout << msnum::to_graph6(member) << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
