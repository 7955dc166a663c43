#pragma once

#include "kato/sequence.hpp"

#include <vector>

namespace kato {

enum class SequenceFilter { All, Simple, Index1 };

/// All canonical sequences with b2 in [b2_min, b2_max], in deterministic
/// order (by b2, then by canonical block tuple). `All` covers Enoki,
/// Inoue-Hirzebruch and intermediate (including multi-tree) sequences;
/// `Simple` keeps single-tree intermediate ones; `Index1` additionally
/// requires index 1.
std::vector<DlousskySequence> enumerate_sequences(int b2_min, int b2_max, SequenceFilter filter);

/// Independent combinatorial count of simple sequences with b2 = b
/// (compositions (k_1..k_N, l) with all parts >= 1 and N >= 1): 2^{b-1} - 1.
Int simple_sequence_count(int b);

}  // namespace kato
