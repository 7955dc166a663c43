#include "kato/chern.hpp"
#include "kato/deform.hpp"
#include "kato/enumerate.hpp"
#include "kato/errors.hpp"
#include "kato/forms.hpp"
#include "kato/germ.hpp"
#include "kato/graph.hpp"
#include "kato/linalg.hpp"
#include "kato/sequence.hpp"
#include "kato/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <complex>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace kato;

namespace {

constexpr long long kSafeInt = (1LL << 53);

json json_int(const Int& v) {
    if (v > -kSafeInt && v < kSafeInt) return v.convert_to<long long>();
    return v.str();
}

json json_rat(const Rat& v) { return fraction_string(v); }

DlousskySequence parse_sequence_arg(const std::string& text) {
    std::string trimmed = text;
    const auto first = trimmed.find_first_not_of(" \t");
    if (first != std::string::npos && trimmed[first] == '[') return parse_symbolic(trimmed);
    // comma-separated expanded form
    std::vector<int> values;
    std::stringstream in(trimmed);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            values.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("expected an integer entry, got '" + tok + "'", 0);
        }
    }
    return parse_expanded(values);
}

std::complex<double> parse_complex(const std::string& text) {
    // forms: "1", "-0.5", "2i", "1+2i", "0.3-0.1i"
    std::string s = text;
    std::erase(s, ' ');
    if (s.empty()) throw ParseError("empty complex literal", 0);
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    }
    auto parse_part = [&](std::string part, bool& imag) -> double {
        imag = false;
        if (!part.empty() && part.back() == 'i') {
            imag = true;
            part.pop_back();
            if (part.empty() || part == "+") part = "1";
            if (part == "-") part = "-1";
        }
        std::size_t used = 0;
        const double v = std::stod(part, &used);
        if (used != part.size()) throw ParseError("bad complex literal '" + text + "'", used);
        return v;
    };
    double re = 0, im = 0;
    bool imag = false;
    if (split == std::string::npos) {
        const double v = parse_part(s, imag);
        (imag ? im : re) = v;
    } else {
        re = parse_part(s.substr(0, split), imag);
        if (imag) throw ParseError("real part must come first in '" + text + "'", 0);
        im = parse_part(s.substr(split), imag);
        if (!imag) throw ParseError("second summand must be imaginary in '" + text + "'", 0);
    }
    return {re, im};
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
    std::vector<std::complex<double>> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(parse_complex(tok));
    return out;
}

json graph_json(const DualGraph& g, const DlousskySequence& seq) {
    const RoleReport roles = decompose(g);
    json jg;
    jg["node_count"] = g.node_count;
    jg["edges"] = json::array();
    for (const auto& [a, b] : g.edges) jg["edges"].push_back(json::array({a, b}));
    jg["self_loop"] = g.has_self_loop;
    jg["cycle_nodes"] = roles.cycle_nodes;
    jg["trees"] = json::array();
    for (const auto& t : roles.trees)
        jg["trees"].push_back({{"root", t.root}, {"nodes", t.nodes}});
    jg["tips"] = roles.tips;
    jg["roots"] = roles.roots;
    jg["black_on_cycle"] = roles.black_on_cycle;
    jg["black_on_tree"] = roles.black_on_tree;
    jg["degrees"] = g.degree;
    const auto aliases = display_aliases(g, seq);
    bool any_alias = false;
    for (const auto& a : aliases) any_alias = any_alias || !a.empty();
    if (any_alias) jg["aliases"] = aliases;
    return jg;
}

json build_report(const DlousskySequence& seq, int epsilon) {
    const SurfaceClass cls = classify(seq);
    const DualGraph g = build_dual_graph(seq);

    json rep;
    rep["sequence"] = {{"symbolic", seq.symbolic()}, {"expanded", seq.entries()}};
    rep["class"] = to_string(cls);
    rep["b2"] = seq.b2();
    rep["dloussky_number"] = json_int(dloussky_number(seq));
    rep["N"] = seq.singular_count();
    rep["l_total"] = seq.regular_total();

    if (seq.singular_count() >= 1) {
        const DlousskyMatrix m = dloussky_matrix(seq.singular_lengths());
        json jm;
        jm["p"] = json_int(m.final.p);
        jm["q"] = json_int(m.final.q);
        jm["r"] = json_int(m.final.r);
        jm["s"] = json_int(m.final.s);
        jm["partials"] = json::array();
        for (const auto& pj : m.partials)
            jm["partials"].push_back({{"p", json_int(pj.p)},
                                      {"q", json_int(pj.q)},
                                      {"r", json_int(pj.r)},
                                      {"s", json_int(pj.s)}});
        rep["matrix"] = jm;
        if (seq.is_simple()) rep["k_invariant"] = json_int(m.k_invariant);
    }

    if (cls.kind == SurfaceClass::Enoki) {
        rep["multiplicities"] = "n/a (homologically trivial cycle)";
    } else if (g.has_self_loop) {
        rep["multiplicities"] = "n/a (nodal curve; double-cover convention)";
        if (seq.is_simple()) {
            rep["tip"] = json_rat(tip_multiplicity(seq));
            rep["index"] = json_int(den(tip_multiplicity(seq)));
        }
    } else {
        const MultiplicityVector mult = solve_adjunction(g);
        json values = json::array();
        for (const Rat& d : mult.values) values.push_back(json_rat(d));
        rep["multiplicities"] = values;
        rep["tip"] = json_rat(mult.tip);
        rep["index"] = json_int(mult.index);
    }

    if (seq.is_simple()) {
        const GermInvariants inv = germ_invariants(seq);
        rep["germ"] = {{"d", json_int(inv.d)},
                       {"K", json_int(inv.K)},
                       {"u", json_rat(inv.u)},
                       {"v", json_rat(inv.v)},
                       {"parity_sign", inv.parity_sign}};
    }

    try {
        const DeformationReport d = deformation_report(seq, epsilon);
        rep["deformation"] = {{"epsilon", d.epsilon},
                              {"eta", d.eta},
                              {"chi_tangent", json_int(d.chi_tangent)},
                              {"chi_log", json_int(d.chi_log)},
                              {"h1_log", json_int(d.h1_log)},
                              {"h1_theta_minus_D", json_int(d.h1_theta_minus_d)},
                              {"h1_normal", json_int(d.h1_normal)},
                              {"nodal_double_cover", d.nodal_double_cover}};
    } catch (const EpsilonInconsistent& e) {
        rep["deformation"] = {{"error", e.what()}};
    }

    json moduli = json::array();
    for (bool m : moduli_explanation(seq)) moduli.push_back(m ? "one modulus" : "no moduli");
    rep["moduli"] = moduli;

    rep["graph"] = graph_json(g, seq);
    return rep;
}

void print_text_report(const json& rep, const DlousskySequence& seq, std::ostream& out) {
    out << "sequence   " << rep["sequence"]["symbolic"].get<std::string>() << "  =  (";
    const auto& exp = rep["sequence"]["expanded"];
    for (std::size_t i = 0; i < exp.size(); ++i) out << (i ? "," : "") << exp[i].get<int>();
    out << ")\n";
    out << "class      " << rep["class"].get<std::string>() << "\n";
    out << "b2         " << rep["b2"] << "    dl " << rep["dloussky_number"] << "    N "
        << rep["N"] << "    l " << rep["l_total"] << "\n";
    if (rep.contains("matrix")) {
        out << "matrix     (p,q;r,s) = (" << rep["matrix"]["p"] << "," << rep["matrix"]["q"] << ";"
            << rep["matrix"]["r"] << "," << rep["matrix"]["s"] << ")";
        if (rep.contains("k_invariant")) out << "    k(S) = " << rep["k_invariant"];
        out << "\n";
    }
    if (rep["multiplicities"].is_array()) {
        const DualGraph g = build_dual_graph(seq);
        const auto aliases = display_aliases(g, seq);
        out << "c1 =";
        for (std::size_t i = 0; i < rep["multiplicities"].size(); ++i) {
            out << (i ? " + " : " ") << rep["multiplicities"][i].get<std::string>() << "·D" << i;
            if (i < aliases.size() && !aliases[i].empty()) out << "(" << aliases[i] << ")";
        }
        out << "\n";
        out << "tip        " << rep["tip"].get<std::string>() << "    index " << rep["index"]
            << "\n";
    } else {
        out << "c1         " << rep["multiplicities"].get<std::string>() << "\n";
    }
    if (rep.contains("germ"))
        out << "germ       d=" << rep["germ"]["d"] << " K=" << rep["germ"]["K"] << " u="
            << rep["germ"]["u"].get<std::string>() << " v=" << rep["germ"]["v"].get<std::string>()
            << "\n";
    if (rep["deformation"].contains("h1_log"))
        out << "deform     h1_log=" << rep["deformation"]["h1_log"]
            << "  h1(Theta(-D))=" << rep["deformation"]["h1_theta_minus_D"]
            << "  eta=" << rep["deformation"]["eta"] << "  (eps="
            << rep["deformation"]["epsilon"] << ")\n";
}

int cmd_report(const std::string& seq_text, const std::string& format, int epsilon) {
    const DlousskySequence seq = parse_sequence_arg(seq_text);
    if (format == "dot") {
        std::cout << to_dot(build_dual_graph(seq));
        return 0;
    }
    const json rep = build_report(seq, epsilon);
    if (format == "json")
        std::cout << rep.dump(2) << "\n";
    else
        print_text_report(rep, seq, std::cout);
    return 0;
}

int cmd_enumerate(int b_max, const std::string& filter_name, const std::string& format) {
    SequenceFilter filter = SequenceFilter::All;
    if (filter_name == "simple") filter = SequenceFilter::Simple;
    else if (filter_name == "index1") filter = SequenceFilter::Index1;
    else if (filter_name != "all") throw Error("unknown filter '" + filter_name + "'");

    const auto seqs = enumerate_sequences(3, b_max, filter);
    if (format == "csv") {
        std::cout << "sequence,class,b2,dl,N,l,tip,index,k_invariant\n";
        for (const auto& seq : seqs) {
            const SurfaceClass cls = classify(seq);
            std::cout << seq.symbolic() << ',' << to_string(cls) << ',' << seq.b2() << ','
                      << dloussky_number(seq) << ',' << seq.singular_count() << ','
                      << seq.regular_total();
            if (seq.is_simple()) {
                const Rat t = tip_multiplicity(seq);
                std::cout << ',' << fraction_string(t) << ',' << den(t) << ','
                          << dloussky_matrix(seq.singular_lengths()).k_invariant;
            } else {
                std::cout << ",,,";
            }
            std::cout << '\n';
        }
    } else {
        json rows = json::array();
        for (const auto& seq : seqs) {
            json row;
            row["sequence"] = seq.symbolic();
            row["class"] = to_string(classify(seq));
            row["b2"] = seq.b2();
            row["dl"] = json_int(dloussky_number(seq));
            row["N"] = seq.singular_count();
            row["l"] = seq.regular_total();
            if (seq.is_simple()) {
                const Rat t = tip_multiplicity(seq);
                row["tip"] = json_rat(t);
                row["index"] = json_int(den(t));
            }
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump(2) << "\n";
    }
    return 0;
}

int cmd_validate(int b_max, const std::string& mutate, int threads) {
    const auto mutation = mutation_from_name(mutate);
    if (!mutation) throw Error("unknown mutation '" + mutate + "'");
    const auto start = std::chrono::steady_clock::now();
    const SweepResult res = run_validation(b_max, *mutation, threads);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << "checked " << res.sequences_checked << " sequences, " << res.checks_run
              << " identity checks in " << ms << " ms\n";
    if (res.pass()) {
        std::cout << "PASS\n";
        return 0;
    }
    std::cout << "FAIL: " << res.failures.size() << " failing checks\n";
    for (std::size_t i = 0; i < res.failures.size() && i < 20; ++i) {
        const auto& f = res.failures[i];
        std::cout << "  " << f.sequence << " : " << f.identity;
        if (!f.detail.empty()) std::cout << "  [" << f.detail << "]";
        std::cout << "\n";
    }
    return 1;
}

int cmd_germ(const std::string& seq_text, const std::string& a_list, bool generic,
             const std::string& eval_at, int orbit_steps) {
    const DlousskySequence seq = parse_sequence_arg(seq_text);
    const auto params = parse_complex_list(a_list);
    const GermSpec germ = build_germ(seq, params, generic);
    std::cout << to_string(germ) << "\n";

    if (!eval_at.empty()) {
        const auto z = parse_complex_list(eval_at);
        if (z.size() != 2) throw Error("--eval expects two comma-separated complex numbers");
        const GermValue v = eval_germ(germ, z[0], z[1]);
        std::cout << "G(" << z[0] << ", " << z[1] << ") = (" << v.w1 << ", " << v.w2 << ")";
        if (!v.finite) std::cout << "  [overflow: non-finite]";
        std::cout << "\n";
    }
    if (orbit_steps > 0) {
        std::complex<double> z1{0.1, 0.0}, z2{0.1, 0.0};
        if (!eval_at.empty()) {
            const auto z = parse_complex_list(eval_at);
            z1 = z[0];
            z2 = z[1];
        }
        for (int step = 1; step <= orbit_steps; ++step) {
            const GermValue v = eval_germ(germ, z1, z2);
            z1 = v.w1;
            z2 = v.w2;
            const double norm = std::sqrt(std::norm(z1) + std::norm(z2));
            std::cout << "step " << step << ": |z| = " << norm;
            if (!v.finite) std::cout << "  [non-finite]";
            std::cout << "\n";
            if (!v.finite) break;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of Kato surfaces from Dloussky sequences"};
    app.require_subcommand(1);

    std::string seq_text, format = "text", filter = "all", mutate = "none", a_list, eval_at;
    int epsilon = 0, b_max = 8, threads = 0, orbit = 0;
    bool generic = false;

    auto* report = app.add_subcommand("report", "invariant report for one sequence");
    report->add_option("sequence", seq_text, "symbolic \"[s2 r2]\" or expanded \"4,2,2,2\"")
        ->required();
    report->add_option("--format", format)->check(CLI::IsMember({"json", "text", "dot"}));
    report->add_option("--epsilon", epsilon)->check(CLI::Range(0, 1));

    auto* enumerate = app.add_subcommand("enumerate", "tabulate canonical sequences");
    enumerate->add_option("--b-max", b_max)->required()->check(CLI::Range(3, 1 << 20));
    enumerate->add_option("--filter", filter)->check(CLI::IsMember({"all", "simple", "index1"}));
    std::string enum_format = "csv";
    enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"json", "csv"}));

    auto* validate = app.add_subcommand("validate", "run every identity suite over a sweep");
    validate->add_option("--b-max", b_max)->required()->check(CLI::Range(2, 1 << 20));
    validate->add_option("--mutate", mutate, "corrupt a named closed-form constant (harness self-check)");
    validate->add_option("--threads", threads);

    auto* germ = app.add_subcommand("germ", "print / evaluate the birational germ");
    germ->add_option("sequence", seq_text)->required();
    germ->add_option("--a", a_list, "comma-separated complex parameters a_0..a_{l-1},a_{l+K}")
        ->required();
    germ->add_flag("--generic", generic, "generic-first-blowup normal form");
    germ->add_option("--eval", eval_at, "evaluate at z1,z2");
    germ->add_option("--orbit", orbit, "iterate n steps and print norms");

    try {
        app.parse(argc, argv);
        if (report->parsed()) return cmd_report(seq_text, format, epsilon);
        if (enumerate->parsed()) return cmd_enumerate(b_max, filter, enum_format);
        if (validate->parsed()) return cmd_validate(b_max, mutate, threads);
        if (germ->parsed()) return cmd_germ(seq_text, a_list, generic, eval_at, orbit);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
