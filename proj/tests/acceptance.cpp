// Acceptance harness: eight end-to-end criteria, one pass/fail line each.
// Usage: kato_acceptance <path-to-cli-binary>

#include "kato/chern.hpp"
#include "kato/deform.hpp"
#include "kato/enumerate.hpp"
#include "kato/germ.hpp"
#include "kato/graph.hpp"
#include "kato/sequence.hpp"
#include "kato/validate.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace kato;
using nlohmann::json;
using cplx = std::complex<double>;

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    const std::string cmd = "\"" + g_cli + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int g_failures = 0;

void report(int criterion, const char* title, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << title;
    if (!pass && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++g_failures;
}

// 1. The CLI report for [s2 r2] reproduces every hand-checked invariant exactly.
void criterion_worked_example() {
    std::string detail;
    bool pass = false;
    try {
        auto r = run_cli("report \"[s2 r2]\" --format json");
        auto j = json::parse(r.output);
        pass = r.exit_code == 0 &&
               j["multiplicities"] == json::array({"2", "1", "2", "3"}) &&
               j["tip"] == "1" && j["index"] == 1 &&
               j["matrix"]["p"] == 0 && j["matrix"]["q"] == 1 &&
               j["matrix"]["r"] == 1 && j["matrix"]["s"] == 2 &&
               j["germ"]["d"] == 2 && j["germ"]["K"] == 0 &&
               j["germ"]["u"] == "2" && j["germ"]["v"] == "2" &&
               j["deformation"]["h1_log"] == 2;
        if (pass) {
            auto r1 = run_cli("report \"[s2 r2]\" --format json --epsilon 1");
            pass = r1.exit_code == 0 && json::parse(r1.output)["deformation"]["h1_log"] == 3;
        }
        if (!pass) detail = "report output mismatch";
    } catch (const std::exception& e) {
        detail = e.what();
    }
    report(1, "worked-example report for [s2 r2] is exact", pass, detail);
}

// 2. Closed form equals the exact adjunction solve on every simple loop-free
//    sequence with b2 <= 12, in a single thread, in under 10 seconds.
void criterion_oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    int checked = 0;
    for (const auto& s : enumerate_sequences(2, 12, SequenceFilter::Simple)) {
        auto g = build_dual_graph(s);
        if (g.has_self_loop) continue;
        auto oracle = solve_adjunction(g);
        auto closed = closed_form_multiplicities(s);
        if (closed.values != oracle.values || closed.index != oracle.index) {
            pass = false;
            detail = "mismatch at " + s.symbolic();
            break;
        }
        ++checked;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (pass && secs >= 10.0) {
        pass = false;
        detail = "sweep took too long";
    }
    std::ostringstream n;
    n << checked << " sequences, " << secs << " s";
    report(2, ("oracle equivalence sweep b2<=12 (" + n.str() + ")").c_str(), pass, detail);
}

// 3. The full per-sequence identity suite passes on every simple sequence of
//    the same sweep.
void criterion_identity_suite() {
    std::string detail;
    bool pass = true;
    for (const auto& s : enumerate_sequences(2, 12, SequenceFilter::Simple)) {
        auto rep = validate_sequence(s);
        if (!rep.all_pass) {
            pass = false;
            for (const auto& c : rep.checks)
                if (!c.pass) detail = s.symbolic() + " : " + c.identity;
            break;
        }
    }
    report(3, "identity suite over the simple sweep b2<=12", pass, detail);
}

// 4. 2b <= dl <= 3b with equality exactly for the Enoki / Inoue-Hirzebruch
//    classes, over every sequence with b2 <= 12.
void criterion_dloussky_bounds() {
    std::string detail;
    bool pass = true;
    for (const auto& s : enumerate_sequences(1, 12, SequenceFilter::All)) {
        const Int dl = dloussky_number(s);
        const auto cls = classify(s);
        const bool ok = dl >= 2 * s.b2() && dl <= 3 * s.b2() &&
                        (dl == 2 * s.b2()) == (cls.kind == SurfaceClass::Enoki) &&
                        (dl == 3 * s.b2()) == (cls.kind == SurfaceClass::InoueHirzebruch);
        if (!ok) {
            pass = false;
            detail = "bounds fail at " + s.symbolic();
            break;
        }
    }
    report(4, "2b <= dl <= 3b with equality characterizations, b2<=12", pass, detail);
}

// 5. Deformation dimension formulas for both vector-field flags, including the
//    Enoki, Inoue-Hirzebruch and nodal families.
void criterion_deformation() {
    std::string detail;
    bool pass = true;
    auto fail = [&](const std::string& d) {
        pass = false;
        if (detail.empty()) detail = d;
    };
    for (const auto& s : enumerate_sequences(2, 12, SequenceFilter::Index1)) {
        if (build_dual_graph(s).has_self_loop) continue;
        const Rat t = tip_multiplicity(s);
        for (int eps : {0, 1}) {
            auto r = deformation_report(s, eps);
            const int eta = eps && t == 1 ? 1 : 0;
            if (r.h1_log != s.regular_total() + eps ||
                r.h1_theta_minus_d != s.b2() + s.regular_total() - eta || r.eta != eta)
                fail("simple index-1 case " + s.symbolic());
        }
    }
    for (int b = 2; b <= 12; ++b) {
        auto enoki = DlousskySequence::from_blocks({{BlockKind::Regular, b}});
        for (int eps : {0, 1})
            if (deformation_report(enoki, eps).h1_log != b + eps)
                fail("Enoki case b=" + std::to_string(b));
    }
    if (deformation_report(parse_symbolic("[s1 s1]"), 0).h1_log != 0)
        fail("Inoue-Hirzebruch rigidity");
    for (int b = 3; b <= 12; ++b) {
        auto nodal = DlousskySequence::from_blocks(
            {{BlockKind::Singular, b - 1}, {BlockKind::Regular, 1}});
        auto doubled = DlousskySequence::from_blocks({{BlockKind::Singular, b - 1},
                                                      {BlockKind::Regular, 1},
                                                      {BlockKind::Singular, b - 1},
                                                      {BlockKind::Regular, 1}});
        for (int eps : {0, 1}) {
            auto r = deformation_report(nodal, eps);
            if (!r.nodal_double_cover || r.h1_log != 1 + eps)
                fail("nodal case b=" + std::to_string(b));
        }
        if (deformation_report(doubled, 0).chi_log != 2 * deformation_report(nodal, 0).chi_log ||
            deformation_report(doubled, 0).chi_tangent !=
                2 * deformation_report(nodal, 0).chi_tangent)
            fail("nodal double cover chi at b=" + std::to_string(b));
    }
    report(5, "deformation dimension formulas for both epsilon values", pass, detail);
}

// 6. Germ evaluation: the worked example, the invariant second coordinate on
//    1000 random points, and a contracting 20-step orbit.
void criterion_germ_sanity() {
    std::string detail;
    bool pass = true;
    auto seq = parse_symbolic("[s2 r2]");

    auto g = build_germ(seq, {cplx(1.0), cplx(0.0), cplx(0.0)}, false);
    auto v = eval_germ(g, cplx(1.0), cplx(1.0));
    if (v.w1 != cplx(2.0) || v.w2 != cplx(1.0)) {
        pass = false;
        detail = "eval at (1,1)";
    }

    auto h = build_germ(parse_symbolic("[s1 s1 r2]"),
                        {cplx(0.7, -0.1), cplx(0.2, 0.4), cplx(1.5)}, false);
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int i = 0; pass && i < 1000; ++i) {
        cplx z1(coord(rng), coord(rng)), z2(coord(rng), coord(rng));
        cplx want = std::pow(z1, static_cast<double>(h.r.convert_to<long>())) *
                    std::pow(z2, static_cast<double>(h.s.convert_to<long>()));
        auto w = eval_germ(h, z1, z2);
        if (std::abs(w.w2 - want) > 1e-12 * std::max(1.0, std::abs(want))) {
            pass = false;
            detail = "second coordinate deviates from the monomial";
        }
    }

    auto contracting = build_germ(seq, {cplx(0.5), cplx(0.0), cplx(0.0)}, false);
    cplx z1(0.1), z2(0.1);
    for (int i = 0; i < 20; ++i) {
        auto w = eval_germ(contracting, z1, z2);
        z1 = w.w1;
        z2 = w.w2;
    }
    if (std::sqrt(std::norm(z1) + std::norm(z2)) >= 1e-8) {
        pass = false;
        detail = "orbit fails to contract";
    }
    report(6, "germ evaluation, invariant second coordinate, contracting orbit", pass, detail);
}

// 7. The hermitian trichotomy partitions sampled parameters by |a0| with no
//    overlaps.
void criterion_trichotomy() {
    std::string detail;
    bool pass = true;
    auto seq = parse_symbolic("[s2 r2]");
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    std::uniform_real_distribution<double> inner(0.05, 0.95), outer(1.05, 5.0);
    int on = 0, in = 0, out = 0;
    for (int i = 0; pass && i < 300; ++i) {
        const double th = angle(rng);
        const cplx unit(std::cos(th), std::sin(th));
        if (classify_hermitian(seq, unit) != HermitianClass::AnticanonicalCandidate ||
            classify_hermitian(seq, inner(rng) * unit) != HermitianClass::VectorFieldCandidate ||
            classify_hermitian(seq, outer(rng) * unit) != HermitianClass::BiHermitianCandidate) {
            pass = false;
            detail = "misclassified sample";
        }
        ++on, ++in, ++out;
    }
    if (pass && (on != 300 || in != 300 || out != 300)) pass = false;
    report(7, "hermitian trichotomy partitions sampled parameters", pass, detail);
}

// 8. Corrupting any single closed-form constant makes the validation command
//    fail, naming the broken identity.
void criterion_mutation() {
    std::string detail;
    bool pass = true;
    auto expect_fail = [&](const std::string& name, const std::string& identity) {
        auto r = run_cli("validate --b-max 6 --mutate " + name);
        if (r.exit_code == 0 || r.output.find("FAIL") == std::string::npos ||
            r.output.find(identity) == std::string::npos) {
            pass = false;
            if (detail.empty()) detail = "mutation " + name + " not detected";
        }
    };
    expect_fail("c0", "c0 = t + 1");
    expect_fail("root", "root = t + l");
    expect_fail("black", "closed_form equals adjunction oracle");
    expect_fail("tip", "closed_form equals adjunction oracle");
    auto clean = run_cli("validate --b-max 6");
    if (clean.exit_code != 0 || clean.output.find("PASS") == std::string::npos) {
        pass = false;
        detail = "clean validation should pass";
    }
    report(8, "every closed-form mutation is detected by name", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: kato_acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];
    criterion_worked_example();
    criterion_oracle_equivalence();
    criterion_identity_suite();
    criterion_dloussky_bounds();
    criterion_deformation();
    criterion_germ_sanity();
    criterion_trichotomy();
    criterion_mutation();
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
    return g_failures == 0 ? 0 : 1;
}
