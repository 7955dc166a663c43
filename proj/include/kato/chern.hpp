#pragma once

#include "kato/graph.hpp"
#include "kato/rational.hpp"
#include "kato/sequence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kato {

/// Exact rational coefficients of the anti-canonical class in the curve basis.
struct MultiplicityVector {
    std::vector<Rat> values;   // per node, canonical order
    Rat tip;                   // minimum over tips (min over all nodes if no tips)
    Int index;                 // lcm of the denominators
    std::vector<Rat> slopes;   // g_1..g_{N+1}; populated by the closed form only
};

/// Oracle: solves the adjunction system M d = (D_i^2 + 2)_i exactly.
/// Throws SingularSystem for Enoki graphs, SelfLoopUnsupported for loops.
MultiplicityVector solve_adjunction(const DualGraph& graph);

/// (p+q-1+l) / (r+s-1); simple intermediate sequences only.
Rat tip_multiplicity(const DlousskySequence& seq);

/// Deliberate single-constant corruptions of the closed form, used to verify
/// that the validation harness detects what it claims to detect.
enum class ClosedFormMutation { None, C0PlusOne, RootPlusOne, BlackOffset, TipNumerator };

std::optional<ClosedFormMutation> mutation_from_name(const std::string& name);
std::vector<std::string> mutation_names();

/// Closed-form propagation: tip formula, slope anchors at black nodes, linear
/// interpolation along white chains. Simple loop-free sequences only.
MultiplicityVector closed_form_multiplicities(const DlousskySequence& seq,
                                              ClosedFormMutation mutation = ClosedFormMutation::None);

/// Smallest positive integer clearing every denominator.
Int index_of(const MultiplicityVector& mult);

struct CheckResult {
    std::string identity;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    std::string sequence;
    std::vector<CheckResult> checks;
    bool all_pass = true;

    void add(std::string identity, bool pass, std::string detail = "");
};

/// Runs the oracle against the closed form plus the per-sequence multiplicity
/// identities. Enoki / self-loop / multi-tree inputs are reported as skipped.
ValidationReport cross_validate(const DlousskySequence& seq,
                                ClosedFormMutation mutation = ClosedFormMutation::None);

}  // namespace kato
