#include "kato/deform.hpp"

#include "kato/chern.hpp"
#include "kato/errors.hpp"
#include "kato/graph.hpp"

#include <optional>

namespace kato {

namespace {

// Index when it is computable from the sequence alone; nullopt for Enoki (no
// curve basis) and for self-loop Inoue-Hirzebruch graphs.
std::optional<Int> computable_index(const DlousskySequence& seq) {
    const SurfaceClass cls = classify(seq);
    if (cls.kind == SurfaceClass::Enoki) return std::nullopt;
    const DualGraph g = build_dual_graph(seq);
    // the tip-formula denominator and the adjunction solve both presuppose a
    // loop-free graph; the nodal families fall outside either route
    if (g.has_self_loop) return std::nullopt;
    if (seq.is_simple()) {
        const Rat t = tip_multiplicity(seq);
        return den(t);
    }
    return solve_adjunction(g).index;
}

// Minimal tip multiplicity; nullopt when there are no tips.
std::optional<Rat> min_tip_multiplicity(const DlousskySequence& seq) {
    const SurfaceClass cls = classify(seq);
    if (cls.kind != SurfaceClass::Intermediate) return std::nullopt;
    if (seq.is_simple()) return tip_multiplicity(seq);
    const DualGraph g = build_dual_graph(seq);
    return solve_adjunction(g).tip;
}

}  // namespace

bool is_nodal_family(const DlousskySequence& seq) {
    const auto& blocks = seq.blocks();
    const bool pattern = blocks.size() == 2 && blocks[0].kind == BlockKind::Singular &&
                         blocks[0].length == seq.b2() - 1 &&
                         blocks[1].kind == BlockKind::Regular && blocks[1].length == 1;
    // the syntactic pattern and the graph self-loop must agree for simple sequences
    if (seq.is_simple()) {
        const bool loop = build_dual_graph(seq).has_self_loop;
        if (pattern != loop) throw Error("nodal-family detection mismatch");
    }
    return pattern;
}

DeformationReport deformation_report(const DlousskySequence& seq, int epsilon) {
    if (epsilon != 0 && epsilon != 1) throw Error("epsilon must be 0 or 1");
    if (epsilon == 1) {
        if (auto idx = computable_index(seq); idx && *idx != 1)
            throw EpsilonInconsistent("a holomorphic vector field requires index 1, index = " +
                                      idx->str());
    }

    DeformationReport r;
    r.b = seq.b2();
    r.epsilon = epsilon;
    r.chi_tangent = 2 * Int(r.b);

    if (is_nodal_family(seq)) {
        // route through the unramified double cover [s_{b-1} r_1 s_{b-1} r_1]
        std::vector<Block> doubled;
        for (int rep = 0; rep < 2; ++rep)
            for (const Block& blk : seq.blocks()) doubled.push_back(blk);
        const auto cover =
            DlousskySequence::from_blocks(std::move(doubled), 2 * seq.b2());
        const int l_cover = cover.regular_total();
        r.l_total = l_cover / 2;
        r.chi_log = Int(l_cover) / 2;
        r.nodal_double_cover = true;
    } else {
        r.l_total = seq.regular_total();
        r.chi_log = Int(r.l_total);
    }

    r.h1_log = r.chi_log + epsilon;
    r.h1_normal = 2 * Int(r.b) - r.l_total;

    r.eta = 0;
    if (epsilon == 1) {
        if (auto t = min_tip_multiplicity(seq); t && *t == 1) r.eta = 1;
    }
    r.h1_theta_minus_d = Int(r.b) + r.l_total - r.eta;
    return r;
}

std::vector<bool> moduli_explanation(const DlousskySequence& seq) {
    std::vector<bool> tags;
    tags.reserve(seq.b2());
    for (const Block& b : seq.blocks()) {
        const bool modulus = b.kind == BlockKind::Regular;
        for (int i = 0; i < b.length; ++i) tags.push_back(modulus);
    }
    return tags;
}

}  // namespace kato
