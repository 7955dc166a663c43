#pragma once

#include "kato/rational.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kato {

enum class BlockKind { Singular, Regular };

/// One block of a Dloussky sequence: Singular(k) expands to (k+2, 2, ..., 2)
/// of length k, Regular(l) to (2, ..., 2) of length l.
struct Block {
    BlockKind kind;
    int length;
    friend bool operator==(const Block&, const Block&) = default;
};

/// A cyclic sequence of opposite self-intersection numbers, held in canonical
/// rotation. Immutable after construction.
class DlousskySequence {
public:
    /// Canonicalizes (merging cyclically adjacent regular blocks, rotating to
    /// the canonical representative), expands and validates.
    static DlousskySequence from_blocks(std::vector<Block> blocks, int max_b2 = default_max_b2());

    const std::vector<Block>& blocks() const { return blocks_; }
    const std::vector<int>& entries() const { return entries_; }
    int b2() const { return static_cast<int>(entries_.size()); }

    /// Number of singular blocks (N, the black-node count).
    int singular_count() const;
    /// Total length of the regular blocks (l).
    int regular_total() const;
    int regular_block_count() const;
    /// Intermediate with exactly one tree.
    bool is_simple() const;
    /// Singular block lengths k_1, ..., k_N in canonical order.
    std::vector<int> singular_lengths() const;

    std::string symbolic() const;

    /// Configured length bound; env var KATO_MAX_B2 overrides the default 64.
    static int default_max_b2();

    friend bool operator==(const DlousskySequence&, const DlousskySequence&) = default;

private:
    std::vector<Block> blocks_;
    std::vector<int> entries_;
};

/// Parses the bracket notation "[s2 r2]" (also "s_2", commas as separators).
DlousskySequence parse_symbolic(std::string_view text, int max_b2 = DlousskySequence::default_max_b2());

/// Recovers the block decomposition from an expanded cyclic list of entries >= 2.
DlousskySequence parse_expanded(std::span<const int> values, int max_b2 = DlousskySequence::default_max_b2());

/// Sum of the entries (2b for Enoki, 3b for Inoue-Hirzebruch, in between else).
Int dloussky_number(const DlousskySequence& seq);

struct SurfaceClass {
    enum Kind { Enoki, InoueHirzebruch, Intermediate } kind;
    bool simple = false;  // meaningful for Intermediate only
    int trees = 0;        // number of regular blocks when intermediate
    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

SurfaceClass classify(const DlousskySequence& seq);

std::string to_string(const SurfaceClass& cls);

}  // namespace kato
