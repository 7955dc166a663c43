#include "kato/validate.hpp"

#include "kato/deform.hpp"
#include "kato/enumerate.hpp"
#include "kato/errors.hpp"
#include "kato/forms.hpp"
#include "kato/germ.hpp"
#include "kato/graph.hpp"
#include "kato/linalg.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

namespace kato {

namespace {

void check_forms(const DlousskySequence& seq, ValidationReport& rep) {
    const auto ks = seq.singular_lengths();
    if (ks.empty()) return;
    const std::span<const int> all(ks);
    const std::span<const int> tail = all.subspan(1);

    rep.add("P(k)+1 = f(k) + f(k minus last)",
            p_eval(all) + 1 == f_eval(all) + f_eval(all.first(ks.size() - 1)));

    const DlousskyMatrix m = dloussky_matrix(all);
    // p = f(k_2..k_{N-1}) degenerates to f_{-1} = 0 at N = 1
    const Int p_expected = tail.empty() ? Int(0) : f_eval(tail.first(tail.size() - 1));
    const bool coeffs = m.final.s == f_eval(all) && m.final.r == f_eval(all.first(ks.size() - 1)) &&
                        m.final.q == f_eval(tail) && m.final.p == p_expected;
    rep.add("matrix coefficients are f-values", coeffs);

    bool alternation = true;
    for (std::size_t j = 0; j < m.partials.size(); ++j) {
        const auto& q = m.partials[j];
        const Int expected = (j % 2 == 0) ? -1 : 1;  // (-1)^{j+1}
        if (q.p * q.s - q.q * q.r != expected) alternation = false;
    }
    rep.add("determinant alternation (-1)^j", alternation);

    rep.add("r+s = P(k_1..k_N)+1 and p+q = P(k_2..k_N)+1",
            m.final.r + m.final.s == p_eval(all) + 1 && m.final.p + m.final.q == p_eval(tail) + 1);
}

void check_graph(const DlousskySequence& seq, const DualGraph& g, ValidationReport& rep) {
    const SurfaceClass cls = classify(seq);
    rep.add("edge count = b2", static_cast<int>(g.edges.size()) == seq.b2());

    const RoleReport roles = decompose(g);
    const int n_black = roles.black_on_cycle + roles.black_on_tree;
    rep.add("black node count = N", n_black == seq.singular_count());
    rep.add("white node count = b2 - N", roles.white_count == seq.b2() - seq.singular_count());
    rep.add("tips = roots", roles.tips.size() == roles.roots.size());

    if (cls.kind == SurfaceClass::Intermediate && !g.has_self_loop) {
        std::map<int, int> want{{2, 0}};
        const int n_trees = static_cast<int>(roles.trees.size());
        want[1] += n_trees;
        want[3] += n_trees;
        want[2] = g.node_count - 2 * n_trees;
        if (want[2] == 0) want.erase(2);
        std::map<int, int> have;
        for (int d : g.degree) ++have[d];
        rep.add("degree multiset {1,3 per tree, else 2}", have == want);
    }
    if (seq.is_simple()) {
        const int n = seq.singular_count();
        const bool even = n % 2 == 0;
        rep.add("black cycle/tree parity split",
                even ? (roles.black_on_cycle == n / 2 && roles.black_on_tree == n / 2)
                     : (roles.black_on_cycle == (n + 1) / 2 && roles.black_on_tree == (n - 1) / 2));

        const DlousskyMatrix m = dloussky_matrix(seq.singular_lengths());
        rep.add("tree determinant = -(r+s)", -tree_determinant(g) == m.k_invariant);
    }
}

void check_germ(const DlousskySequence& seq, const DualGraph& g, ValidationReport& rep) {
    if (!seq.is_simple()) return;
    const GermInvariants inv = germ_invariants(seq);
    const DlousskyMatrix m = dloussky_matrix(seq.singular_lengths());
    const Int p = m.final.p, q = m.final.q, r = m.final.r, s = m.final.s;
    const int l = seq.regular_total();
    const Rat t = tip_multiplicity(seq);

    rep.add("(l-d)/(r+s-1) = t-1", Rat(Int(l) - inv.d, r + s - 1) == t - 1);
    rep.add("u = r t - p + 1", inv.u == r * t - p + 1);
    rep.add("v = s t - q + 1", inv.v == s * t - q + 1);
    rep.add("u + v = t + l + 1", inv.u + inv.v == t + l + 1);
    rep.add("u, v integral iff index 1",
            (is_integer(inv.u) && is_integer(inv.v)) == (den(t) == 1));
    rep.add("sign in u, v matches ps - qr = (-1)^N",
            p * s - q * r == inv.parity_sign);

    if (!g.has_self_loop) {
        const MultiplicityVector mult = solve_adjunction(g);
        const RoleReport roles = decompose(g);
        const int root = roles.roots.front();
        int tree_nb = -1;
        for (int nb : g.adjacency[root])
            if (!g.on_cycle[nb]) tree_nb = nb;
        const int pred = cycle_predecessor(g, root);
        bool ok = tree_nb >= 0 && pred >= 0;
        if (ok) {
            const Rat a = mult.values[pred], b = mult.values[tree_nb];
            ok = (a == inv.u && b == inv.v) || (a == inv.v && b == inv.u);
        }
        rep.add("{u,v} = {d(R_1), d(node meeting the root)}", ok);
    }
}

void check_deform(const DlousskySequence& seq, ValidationReport& rep) {
    const SurfaceClass cls = classify(seq);
    const int l = seq.regular_total();
    const int b = seq.b2();

    const auto tags = moduli_explanation(seq);
    rep.add("one-modulus entries = l_total",
            static_cast<int>(std::count(tags.begin(), tags.end(), true)) == l);

    for (int eps = 0; eps <= 1; ++eps) {
        DeformationReport r;
        try {
            r = deformation_report(seq, eps);
        } catch (const EpsilonInconsistent&) {
            continue;  // index > 1 rules out a vector field; nothing to check
        }
        const std::string sfx = " (eps=" + std::to_string(eps) + ")";
        if (is_nodal_family(seq)) {
            rep.add("nodal family: h1_log = 1 + eps" + sfx, r.h1_log == 1 + eps);
            // direct computation on the double cover doubles chi
            std::vector<Block> doubled;
            for (int k = 0; k < 2; ++k)
                for (const Block& blk : seq.blocks()) doubled.push_back(blk);
            const auto cover = DlousskySequence::from_blocks(std::move(doubled), 2 * b);
            const DeformationReport rc = deformation_report(cover, 0);
            rep.add("nodal family: cover chi = 2 chi" + sfx, rc.chi_log == 2 * r.chi_log);
        } else {
            rep.add("h1_log = l + eps" + sfx, r.h1_log == l + eps);
        }
        rep.add("h1(Theta(-D)) = b + l - eta" + sfx,
                r.h1_theta_minus_d == Int(r.b) + r.l_total - r.eta);
        rep.add("eta <= eps" + sfx, r.eta <= eps);
        rep.add("h1_normal = 2b - l" + sfx, r.h1_normal == 2 * Int(b) - r.l_total);
        if (cls.kind == SurfaceClass::Enoki)
            rep.add("Enoki: h1_log = b + eps" + sfx, r.h1_log == b + eps);
        if (cls.kind == SurfaceClass::InoueHirzebruch)
            rep.add("Inoue-Hirzebruch: logarithmically rigid" + sfx, r.h1_log == eps && l == 0);
        if (eps == 1 && seq.is_simple()) {
            const Rat t = tip_multiplicity(seq);
            rep.add("eta = 1 iff eps and t = 1" + sfx, (r.eta == 1) == (t == 1));
        }
    }
}

}  // namespace

ValidationReport validate_sequence(const DlousskySequence& seq, ClosedFormMutation mutation) {
    ValidationReport rep = cross_validate(seq, mutation);

    const Int dl = dloussky_number(seq);
    const int b = seq.b2();
    const SurfaceClass cls = classify(seq);
    rep.add("2b <= dl <= 3b", 2 * Int(b) <= dl && dl <= 3 * Int(b));
    rep.add("dl = 2b iff Enoki", (dl == 2 * Int(b)) == (cls.kind == SurfaceClass::Enoki));
    rep.add("dl = 3b iff Inoue-Hirzebruch",
            (dl == 3 * Int(b)) == (cls.kind == SurfaceClass::InoueHirzebruch));

    check_forms(seq, rep);
    const DualGraph g = build_dual_graph(seq);
    check_graph(seq, g, rep);
    check_germ(seq, g, rep);
    check_deform(seq, rep);
    return rep;
}

SweepResult run_validation(int b_max, ClosedFormMutation mutation, int threads) {
    const auto seqs = enumerate_sequences(1, b_max, SequenceFilter::All);
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(seqs.size()) > 0 ? static_cast<int>(seqs.size()) : 1);

    std::vector<std::future<std::vector<ValidationReport>>> futures;
    const std::size_t chunk = (seqs.size() + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(seqs.size(), lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [&, lo, hi] {
            std::vector<ValidationReport> reports;
            reports.reserve(hi - lo);
            for (std::size_t i = lo; i < hi; ++i)
                reports.push_back(validate_sequence(seqs[i], mutation));
            return reports;
        }));
    }

    SweepResult out;
    for (auto& f : futures)
        for (ValidationReport& rep : f.get()) {
            ++out.sequences_checked;
            out.checks_run += static_cast<int>(rep.checks.size());
            for (const CheckResult& c : rep.checks)
                if (!c.pass) out.failures.push_back({rep.sequence, c.identity, c.detail});
        }
    return out;
}

}  // namespace kato
