// circc command line: chi, chi-c, pq-check, verify-gadgets, reduce, recheck.
//
// Exit codes: 0 success / SAT / verified, 1 UNSAT / unverified,
// 2 usage or parse error, 3 node budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circc/circc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

[[noreturn]] void die(const std::string& message) {
    std::cerr << "circc: " << message << "\n";
    std::exit(kExitUsage);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) die("cannot write '" + path + "'");
    out << content;
}

struct GraphHandle {
    circc_graph* g = nullptr;
    ~GraphHandle() { circc_graph_free(g); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { circc_string_free(s); }
};

void check(circc_status status, const std::string& context) {
    if (status == CIRCC_OK) return;
    die(context + ": " + circc_last_error());
}

GraphHandle load_graph(const std::string& path) {
    GraphHandle h;
    check(circc_graph_parse(read_file(path).c_str(), &h.g), path);
    return h;
}

struct PinList {
    std::vector<int32_t> vertices;
    std::vector<int32_t> colors;
};

PinList parse_pins(const std::vector<std::string>& specs) {
    PinList pins;
    for (const std::string& s : specs) {
        const auto eq = s.find('=');
        size_t used_v = 0, used_c = 0;
        int v = 0, c = 0;
        try {
            if (eq == std::string::npos) throw std::invalid_argument("no '='");
            v = std::stoi(s.substr(0, eq), &used_v);
            c = std::stoi(s.substr(eq + 1), &used_c);
        } catch (const std::exception&) {
            die("bad pin '" + s + "', expected VERTEX=COLOR");
        }
        if (used_v != eq || used_c != s.size() - eq - 1)
            die("bad pin '" + s + "', expected VERTEX=COLOR");
        pins.vertices.push_back(v);
        pins.colors.push_back(c);
    }
    return pins;
}

std::vector<int32_t> parse_coloring_file(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        die(path + ": " + e.what());
    }
    if (j.is_object() && j.contains("colors")) j = j["colors"];
    if (!j.is_array()) die(path + ": expected a JSON array of colors");
    std::vector<int32_t> colors;
    for (const auto& c : j) {
        if (!c.is_number_integer()) die(path + ": colors must be integers");
        colors.push_back(c.get<int32_t>());
    }
    return colors;
}

nlohmann::json coloring_json(int p, int q, const std::vector<int32_t>& colors) {
    return {{"p", p}, {"q", q}, {"colors", colors}};
}

int cmd_chi(const std::string& file, bool json) {
    const GraphHandle g = load_graph(file);
    int32_t chi = 0;
    check(circc_chromatic_number(g.g, &chi), file);
    if (json)
        std::cout << nlohmann::json{{"chi", chi}}.dump(2) << "\n";
    else
        std::cout << chi << "\n";
    return kExitOk;
}

int cmd_chi_c(const std::string& file, bool json) {
    const GraphHandle g = load_graph(file);
    std::vector<int32_t> witness(std::max(circc_graph_vertex_count(g.g), 0));
    int64_t p = 0, q = 0;
    check(circc_circular_chromatic_number(g.g, &p, &q, witness.data()), file);
    const std::string value = std::to_string(p) + "/" + std::to_string(q);
    if (json) {
        nlohmann::json out{{"chi_c", value},
                           {"p", p},
                           {"q", q},
                           {"witness", coloring_json(static_cast<int>(p), static_cast<int>(q), witness)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << value << "\n";
    }
    return kExitOk;
}

int cmd_pq_check(const std::string& file, int p, int q, const std::vector<std::string>& pin_specs,
                 bool strict, uint64_t budget, bool json) {
    const GraphHandle g = load_graph(file);
    const PinList pins = parse_pins(pin_specs);
    std::vector<int32_t> colors(std::max(circc_graph_vertex_count(g.g), 0));
    circc_verdict verdict = CIRCC_UNSAT;
    check(circc_find_pq_coloring(g.g, p, q, pins.vertices.data(), pins.colors.data(),
                                 pins.vertices.size(), strict ? 1 : 0, budget, &verdict,
                                 colors.data()),
          file);
    if (verdict == CIRCC_SAT) {
        if (json) {
            std::cout << nlohmann::json{{"status", "SAT"}, {"witness", coloring_json(p, q, colors)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "SAT\n" << "witness:";
            for (int32_t c : colors) std::cout << ' ' << c;
            std::cout << "\n";
        }
        return kExitOk;
    }
    if (verdict == CIRCC_UNSAT) {
        std::cout << (json ? "{\n  \"status\": \"UNSAT\"\n}\n" : "UNSAT\n");
        return kExitUnsat;
    }
    std::cout << (json ? "{\n  \"status\": \"BUDGET_EXHAUSTED\"\n}\n"
                       : "UNKNOWN: node budget exhausted\n");
    return kExitBudget;
}

int cmd_verify_gadgets(const std::string& lemma, int n, int k) {
    const circc_lemma which = lemma == "kminus" ? CIRCC_LEMMA_K_MINUS
                              : lemma == "h"    ? CIRCC_LEMMA_H
                                                : CIRCC_LEMMA_K;
    int verified = 0;
    StringHandle report;
    check(circc_verify_lemma(which, n, k, &verified, &report.s), "verify " + lemma);
    std::cout << report.s;
    return verified ? kExitOk : kExitUnsat;
}

int cmd_reduce(int theorem, const std::string& file, const std::string& out_path, int n, int k,
               const std::string& witness_path, std::string cert_path) {
    const GraphHandle g = load_graph(file);

    GraphHandle instance;
    if (theorem == 1) {
        check(circc_reduce_theorem1(g.g, &instance.g, nullptr), file);
        if (witness_path.empty()) {
            // The hardness promise covers chi(G') <= 3 and chi(G') >= 5;
            // instances with chi(G') = 4 exactly carry no guarantee.
            int32_t chi = 0;
            check(circc_chromatic_number(g.g, &chi), file);
            if (chi == 4)
                std::cerr << "circc: warning: chi(G') = 4; the reduction makes no claim about "
                             "chi_c of the instance for such inputs\n";
        }
    } else {
        check(circc_reduce_theorem2(g.g, n, k, &instance.g, nullptr), file);
    }

    StringHandle dimacs;
    check(circc_graph_emit_dimacs(instance.g, &dimacs.s), "emit");
    write_file(out_path, dimacs.s);
    if (out_path != "-")
        std::cerr << "circc: wrote " << out_path << " (" << circc_graph_vertex_count(instance.g)
                  << " vertices, " << circc_graph_edge_count(instance.g) << " edges)\n";

    if (witness_path.empty()) return kExitOk;

    if (cert_path.empty()) {
        if (out_path == "-") die("--cert is required when -o is '-'");
        cert_path = out_path + ".cert.json";
    }
    const std::vector<int32_t> witness = parse_coloring_file(witness_path);
    int all_true = 0;
    StringHandle cert;
    if (theorem == 1) {
        if (witness.size() != static_cast<size_t>(circc_graph_vertex_count(g.g)))
            die(witness_path + ": expected one color per vertex of G'");
        check(circc_certify_theorem1(g.g, witness.data(), &all_true, &cert.s), witness_path);
    } else {
        check(circc_certify_theorem2(g.g, n, k, witness.data(), witness.size(), &all_true,
                                     &cert.s),
              witness_path);
    }
    write_file(cert_path, cert.s);
    if (cert_path != "-")
        std::cerr << "circc: wrote " << cert_path << " (checks "
                  << (all_true ? "pass" : "FAIL") << ")\n";
    return all_true ? kExitOk : kExitUnsat;
}

int cmd_recheck(const std::string& file) {
    int match = 0, all_true = 0;
    StringHandle report;
    check(circc_recheck_certificate(read_file(file).c_str(), &match, &all_true, &report.s), file);
    std::cout << report.s;
    return match && all_true ? kExitOk : kExitUnsat;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact circular graph coloring toolkit"};
    app.require_subcommand(1);

    std::string file, out_path, witness_path, cert_path, lemma;
    bool json = false, strict = false;
    int p = 0, q = 0, n = 3, k = 2, theorem = 0;
    uint64_t budget = 0;
    std::vector<std::string> pins;

    auto* chi = app.add_subcommand("chi", "chromatic number of a graph file");
    chi->add_option("file", file, "DIMACS .col or JSON edge-list file")->required();
    chi->add_flag("--json", json, "JSON output");

    auto* chic = app.add_subcommand("chi-c", "exact circular chromatic number");
    chic->add_option("file", file)->required();
    chic->add_flag("--json", json, "JSON output with the witness coloring");

    auto* pq = app.add_subcommand("pq-check", "decide (p,q)-colorability");
    pq->add_option("file", file)->required();
    pq->add_option("-p", p, "number of colors")->required();
    pq->add_option("-q", q, "color band width")->required();
    pq->add_option("--pin", pins, "fix VERTEX=COLOR (repeatable)");
    pq->add_flag("--strict", strict,
                 "require an acyclic orientation digraph (tests chi_c < p/q)");
    pq->add_option("--budget", budget, "node budget, 0 = unlimited");
    pq->add_flag("--json", json, "JSON output");

    auto* verify = app.add_subcommand("verify-gadgets", "exhaustively verify a gadget lemma");
    verify->add_option("--lemma", lemma, "kminus | h | k")
        ->required()
        ->check(CLI::IsMember({"kminus", "h", "k"}));
    verify->add_option("--n", n, "clique gadget parameter (lemma k)");
    verify->add_option("--k", k, "denominator parameter (lemma k)");

    auto* reduce = app.add_subcommand("reduce", "build a hardness reduction instance");
    reduce->add_option("--theorem", theorem, "1 | 2")->required()->check(CLI::IsMember({1, 2}));
    reduce->add_option("file", file, "source graph G'")->required();
    reduce->add_option("-o,--output", out_path, "instance DIMACS path ('-' for stdout)")
        ->required();
    reduce->add_option("--n", n, "theorem 2 clique size");
    reduce->add_option("--k", k, "theorem 2 denominator");
    reduce->add_option("--witness", witness_path,
                       "JSON coloring of G' to extend into a certificate");
    reduce->add_option("--cert", cert_path, "certificate output path");

    auto* recheck = app.add_subcommand("recheck", "re-derive a certificate's checks from JSON");
    recheck->add_option("file", file, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    if (chi->parsed()) return cmd_chi(file, json);
    if (chic->parsed()) return cmd_chi_c(file, json);
    if (pq->parsed()) return cmd_pq_check(file, p, q, pins, strict, budget, json);
    if (verify->parsed()) return cmd_verify_gadgets(lemma, n, k);
    if (reduce->parsed()) return cmd_reduce(theorem, file, out_path, n, k, witness_path, cert_path);
    if (recheck->parsed()) return cmd_recheck(file);
    return kExitUsage;
}
