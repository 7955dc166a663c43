#pragma once

#include "kato/chern.hpp"
#include "kato/sequence.hpp"

#include <string>
#include <vector>

namespace kato {

struct SweepFailure {
    std::string sequence;
    std::string identity;
    std::string detail;
};

struct SweepResult {
    int sequences_checked = 0;
    int checks_run = 0;
    std::vector<SweepFailure> failures;
    bool pass() const { return failures.empty(); }
};

/// Per-sequence identity suite: multiplicity cross-validation plus the
/// forms / graph / germ / deformation identities.
ValidationReport validate_sequence(const DlousskySequence& seq,
                                   ClosedFormMutation mutation = ClosedFormMutation::None);

/// Runs validate_sequence over every canonical sequence with b2 <= b_max,
/// sharded across `threads` workers (deterministic merge order).
SweepResult run_validation(int b_max, ClosedFormMutation mutation = ClosedFormMutation::None,
                           int threads = 0);

}  // namespace kato
