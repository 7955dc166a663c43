#pragma once

#include "kato/rational.hpp"
#include "kato/sequence.hpp"

#include <string>
#include <vector>

namespace kato {

struct DeformationReport {
    int b = 0;
    int l_total = 0;
    int epsilon = 0;              // caller-supplied vector-field flag
    int eta = 0;                  // epsilon && a tip of multiplicity 1
    Int chi_tangent;              // chi(Theta_S) = 2b
    Int chi_log;                  // chi(Theta_S(-log D)) = l
    Int h1_log;                   // l + epsilon
    Int h1_theta_minus_d;         // b + l - eta
    Int h1_normal;                // 2b - l
    bool nodal_double_cover = false;
};

/// Dimension counts of the logarithmic deformation theory. epsilon = 1 is
/// validated against index 1 whenever the index is computable from the
/// sequence (simple formula, or the exact solver for loop-free graphs).
DeformationReport deformation_report(const DlousskySequence& seq, int epsilon);

/// Per-entry moduli tags: true for members of a regular block (one modulus
/// each), false for members of a singular block.
std::vector<bool> moduli_explanation(const DlousskySequence& seq);

/// The [s_{b-1} r_1] family, whose cycle is a single nodal curve.
bool is_nodal_family(const DlousskySequence& seq);

}  // namespace kato
