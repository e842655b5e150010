#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cym/catalog.hpp"
#include "cym/convolution.hpp"
#include "cym/document.hpp"
#include "cym/field.hpp"
#include "cym/groups.hpp"
#include "cym/katz.hpp"
#include "cym/orbit.hpp"
#include "cym/shadow.hpp"
#include "cym/spectrum.hpp"
#include "cym/standard_groups.hpp"

namespace {

// exit codes: 0 success/verified, 1 negative verdict, 2 invalid input,
// 3 resource cap hit
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInvalid = 2;
constexpr int kCapped = 3;

struct Globals {
    unsigned long order_bound = 240;
    unsigned long budget = 100000;
    unsigned long cap = 5000;
    unsigned workers = 1;
    unsigned long precision = 128;
    std::string policy = "smallest";
    bool machine = false;
};

std::string read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

cym::TupleDocument load_document(const std::string& path) {
    return cym::parse_document(read_all(path));
}

// the inverse of format_at over torsion values
cym::RootOfUnity as_root_of_unity(const cym::Cyclotomic& x, unsigned long bound) {
    const unsigned long m = x.conductor();
    for (unsigned long d : {m, 2 * m, 4 * m}) {
        if (d == 0 || d > bound) continue;
        if (cym::normalize_conductor(d) != m) continue;
        for (unsigned long e = 0; e < d; ++e) {
            if (d > 1 && std::gcd(e, d) != 1) continue;
            if (cym::Cyclotomic::zeta_power(d, static_cast<long>(e)) == x)
                return cym::RootOfUnity(d, static_cast<long>(e));
        }
    }
    throw std::invalid_argument("value is not a root of unity within the order bound");
}

cym::EigenvaluePolicy parse_policy(const std::string& s) {
    if (s == "smallest") return cym::EigenvaluePolicy::smallest();
    if (s == "largest") return cym::EigenvaluePolicy::largest();
    std::vector<std::size_t> idx;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ','))
        idx.push_back(static_cast<std::size_t>(std::stoul(cell)));
    if (idx.empty()) throw std::invalid_argument("empty --policy");
    return cym::EigenvaluePolicy::indexed(std::move(idx));
}

std::string kind_name(cym::ReflectionGroupId::Kind k) {
    using Kind = cym::ReflectionGroupId::Kind;
    switch (k) {
        case Kind::Gmpn: return "imprimitive";
        case Kind::Dihedral: return "dihedral";
        case Kind::Weyl: return "weyl";
        case Kind::Exceptional: return "exceptional";
        default: return "unrecognized";
    }
}

std::string jordan_line(const cym::JordanData& jd) {
    std::string out;
    for (const auto& b : jd.blocks) {
        if (!out.empty()) out += ' ';
        out += cym::to_string(b.eigenvalue) + "x" + std::to_string(b.size);
    }
    return out;
}

int cmd_example(const Globals& g, const std::string& name, bool conjugate) {
    const auto entry = cym::catalog_entry(name, conjugate);
    if (!g.machine) {
        std::cout << "# closure order " << entry.expect.closure_order << "\n";
        std::cout << "# pseudoreflections in closure "
                  << entry.expect.pseudoreflections_in_closure << "\n";
        if (!entry.expect.group_label.empty())
            std::cout << "# recognized as " << entry.expect.group_label << "\n";
        std::cout << "# contraction parameter "
                  << cym::to_string(entry.expect.contraction_nu) << " -> rank "
                  << entry.expect.contracted_rank << "\n";
    }
    std::cout << cym::format_document(entry.document);
    return kOk;
}

int cmd_mc(const Globals& g, const std::string& input, const std::string& lambda,
           unsigned long at) {
    const auto doc = load_document(input);
    const unsigned long conductor = at ? at : doc.conductor;
    const cym::Cyclotomic value = cym::parse_cyclotomic(lambda, conductor);
    const cym::RootOfUnity chi = as_root_of_unity(value, g.order_bound);
    const auto mc = cym::middle_convolution(doc.tuple, chi);
    if (!g.machine)
        std::cout << "# twist " << cym::to_string(chi) << ": rank " << mc.input_rank
                  << " -> " << mc.output.rank << " (killed " << mc.dim_k << "+"
                  << mc.dim_l << " of " << (mc.input_points - 1) * mc.input_rank
                  << ")\n";
    std::cout << cym::format_document(cym::make_document(
        mc.output, doc.name.empty() ? "" : doc.name + "-mc"));
    return kOk;
}

int cmd_katz(const Globals& g, const std::string& input) {
    const auto doc = load_document(input);
    const auto run = cym::run_katz(doc.tuple, parse_policy(g.policy), g.order_bound);
    if (g.machine) {
        std::cout << cym::format_katz_run(run, doc.name);
        return kOk;
    }
    std::cout << "parameter " << cym::to_string(run.nu) << "\n";
    std::cout << "rotation " << run.rotation.offset << "\n";
    std::cout << "output rank " << run.forward.output.rank << " on "
              << run.forward.output.points() << " points\n";
    const auto analysis = cym::analyze_output(run, g.cap, g.order_bound);
    std::cout << "nontrivial points " << analysis.nontrivial_points
              << (analysis.rank_law ? " (rank law holds)" : " (rank law FAILS)")
              << "\n";
    if (analysis.infinity.found)
        std::cout << "infinity splits as " << cym::to_string(analysis.infinity.mu)
                  << " times a pseudoreflection\n";
    if (analysis.closure_completed) {
        std::cout << "output closure order " << analysis.closure_order << "\n";
        if (analysis.identification && !analysis.identification->label.empty())
            std::cout << "identified " << analysis.identification->label << "\n";
    }
    return analysis.rank_law ? kOk : kNegative;
}

int cmd_roundtrip(const Globals& g, const std::string& input) {
    const auto doc = load_document(input);
    const auto run = cym::run_katz(doc.tuple, parse_policy(g.policy), g.order_bound);
    const auto back = cym::invert_katz(run);
    const bool restored = cym::trace_key(back) == cym::trace_key(doc.tuple);
    if (!g.machine)
        std::cout << "# key " << (restored ? "restored" : "NOT restored") << " via "
                  << cym::to_string(run.nu) << "\n";
    std::cout << cym::format_document(cym::make_document(
        back, doc.name.empty() ? "" : doc.name + "-roundtrip"));
    return restored ? kOk : kNegative;
}

int cmd_recognize(const Globals& g, const std::string& input) {
    const auto doc = load_document(input);
    const auto cl = cym::closure(doc.tuple.mats, g.cap);
    if (!cl.completed) {
        std::cerr << "closure exceeded the cap of " << g.cap << " elements\n";
        return kCapped;
    }
    const auto id = cym::recognize(cl, doc.tuple.mats);
    unsigned long prefs = 0;
    for (const auto& [ord, cnt] : cym::pseudoreflection_census(cl)) prefs += cnt;
    const auto field = cym::trace_field(doc.tuple.mats);
    if (g.machine) {
        std::cout << "order " << cl.order() << "\n";
        std::cout << "kind " << kind_name(id.kind) << "\n";
        std::cout << "label " << id.label << "\n";
        std::cout << "pseudoreflections " << prefs << "\n";
        std::cout << "reflection-generated " << (id.pseudoreflections_generate ? 1 : 0)
                  << "\n";
        std::cout << "tracefield-conductor " << field.conductor << "\n";
        std::cout << "tracefield-degree " << field.degree << "\n";
        std::cout << "tracefield-real " << (field.totally_real ? 1 : 0) << "\n";
    } else {
        std::cout << "group of order " << cl.order();
        if (!id.label.empty()) std::cout << ", recognized as " << id.label;
        std::cout << " (" << kind_name(id.kind) << ")\n";
        std::cout << prefs << " pseudoreflections, "
                  << (id.pseudoreflections_generate ? "and they generate"
                                                    : "which do NOT generate")
                  << "\n";
        if (!id.note.empty()) std::cout << "note: " << id.note << "\n";
        std::cout << "trace field: conductor " << field.conductor << ", degree "
                  << field.degree << (field.totally_real ? ", totally real" : "")
                  << "\n";
    }
    return kOk;
}

int cmd_jordan(const Globals& g, const std::string& input) {
    const auto doc = load_document(input);
    for (std::size_t i = 0; i < doc.tuple.mats.size(); ++i) {
        const auto jd = cym::jordan_data(doc.tuple.mats[i], g.order_bound);
        const std::string label = i + 1 == doc.tuple.mats.size()
                                      ? std::string("inf")
                                      : std::to_string(i + 1);
        std::cout << "point " << label << ": " << jordan_line(jd) << "\n";
    }
    return kOk;
}

int cmd_orbit(const Globals& g, const std::string& input, bool check_interval) {
    const auto doc = load_document(input);
    const auto report = cym::orbit_enumerate(doc.tuple, g.budget);
    std::cout << "orbit " << report.orbit_size()
              << (report.exhausted ? " (exhausted)" : " (budget hit)") << "\n";
    bool mismatch = false;
    if (check_interval) {
        const auto shadow =
            cym::orbit_enumerate_interval(doc.tuple, g.budget, g.precision);
        std::cout << "interval re-enumeration " << shadow.size << "\n";
        mismatch = shadow.exhausted != report.exhausted ||
                   (report.exhausted && shadow.size != report.orbit_size());
        if (mismatch) std::cout << "counts disagree\n";
    }
    if (!report.exhausted) return kNegative;
    return mismatch ? kNegative : kOk;
}

int cmd_lemma(const Globals& g, unsigned long n) {
    cym::ShadowConstraints constraints;
    constraints.node_cap = g.cap == 5000 ? 0 : g.cap;  // default cap is for closures
    constraints.workers = g.workers;
    const auto verdict = cym::verify_lemma(n, constraints);
    if (verdict.search && verdict.search->partial) {
        std::cerr << "search hit the node cap after " << verdict.search->nodes
                  << " nodes\n";
        return kCapped;
    }
    if (g.machine) {
        std::cout << "n " << verdict.n << "\n";
        std::cout << "route " << verdict.route << "\n";
        std::cout << "empty " << (verdict.no_configurations ? 1 : 0) << "\n";
        if (verdict.search) {
            std::cout << "nodes " << verdict.search->nodes << "\n";
            std::cout << "witnesses " << verdict.witnesses.size() << "\n";
        }
        for (const auto& w : verdict.witnesses) {
            std::cout << "witness";
            for (const auto& e : w.entries)
                if (!e.is_identity()) std::cout << " (" << e.a << "," << e.b << ")";
            std::cout << "\n";
        }
    } else {
        if (verdict.trace)
            for (const auto& s : verdict.trace->steps) std::cout << s.text << "\n";
        if (verdict.search)
            std::cout << "searched " << verdict.search->nodes << " nodes, found "
                      << verdict.search->configs.size() << " configurations\n";
        std::cout << (verdict.no_configurations ? "verified empty"
                                                : "configurations exist")
                  << " (route: " << verdict.route << ")\n";
    }
    return verdict.no_configurations ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for monodromy tuples over cyclotomic fields"};
    app.require_subcommand(1);
    app.fallthrough();  // let global flags appear after the subcommand
    Globals g;
    app.add_option("--order-bound", g.order_bound, "eigenvalue order scan limit");
    app.add_option("--budget", g.budget, "orbit enumeration budget");
    app.add_option("--cap", g.cap, "closure / search node cap");
    app.add_option("--workers", g.workers, "worker threads for searches");
    app.add_option("--precision", g.precision, "interval precision in bits");
    app.add_option("--policy", g.policy,
                   "eigenvalue choice: smallest, largest, or comma-separated indices");
    app.add_flag("--machine", g.machine, "machine-readable output");

    std::string input = "-";
    std::string example_name, lambda_expr;
    unsigned long lambda_at = 0, lemma_n = 0;
    bool conjugate = false, check_interval = false;

    auto* example = app.add_subcommand("example", "emit a bundled tuple document");
    example->add_option("name", example_name, "one of: d4 dihedral4 gmp3 h3")
        ->required();
    example->add_flag("--conjugate", conjugate, "use the conjugate field embedding");

    auto* mc = app.add_subcommand("mc", "middle convolution with a torsion twist");
    mc->add_option("input", input, "tuple document (default stdin)");
    mc->add_option("--twist", lambda_expr, "twist as an expression in z")->required();
    mc->add_option("--at", lambda_at, "conductor for the twist expression");

    auto* katz = app.add_subcommand("katz", "normalize, rotate, and contract");
    katz->add_option("input", input, "tuple document (default stdin)");

    auto* roundtrip =
        app.add_subcommand("roundtrip", "contract then invert, checking the key");
    roundtrip->add_option("input", input, "tuple document (default stdin)");

    auto* recognize = app.add_subcommand("recognize", "close up and identify the group");
    recognize->add_option("input", input, "tuple document (default stdin)");

    auto* jordan = app.add_subcommand("jordan", "per-point Jordan data");
    jordan->add_option("input", input, "tuple document (default stdin)");

    auto* orbit = app.add_subcommand("orbit", "enumerate the braid orbit of trace keys");
    orbit->add_option("input", input, "tuple document (default stdin)");
    orbit->add_flag("--check-interval", check_interval,
                    "re-enumerate with interval arithmetic and compare");

    auto* lemma = app.add_subcommand(
        "lemma", "verify that no admissible transposition configuration exists");
    lemma->add_option("n", lemma_n, "degree of the symmetric group")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (example->parsed()) return cmd_example(g, example_name, conjugate);
        if (mc->parsed()) return cmd_mc(g, input, lambda_expr, lambda_at);
        if (katz->parsed()) return cmd_katz(g, input);
        if (roundtrip->parsed()) return cmd_roundtrip(g, input);
        if (recognize->parsed()) return cmd_recognize(g, input);
        if (jordan->parsed()) return cmd_jordan(g, input);
        if (orbit->parsed()) return cmd_orbit(g, input, check_interval);
        if (lemma->parsed()) return cmd_lemma(g, lemma_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
