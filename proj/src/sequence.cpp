#include "kato/sequence.hpp"

#include "kato/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace kato {

namespace {

// Rotation key: block tags first (Singular < Regular), lengths break ties.
// Comparing tags before lengths forces the regular block last for simple
// sequences, matching the normal form [s_{k_1}...s_{k_N} r_l].
struct RotationKey {
    std::vector<int> tags;
    std::vector<int> lengths;
    friend auto operator<=>(const RotationKey&, const RotationKey&) = default;
};

RotationKey key_of(const std::vector<Block>& blocks, std::size_t start) {
    RotationKey k;
    const std::size_t n = blocks.size();
    k.tags.reserve(n);
    k.lengths.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Block& b = blocks[(start + i) % n];
        k.tags.push_back(b.kind == BlockKind::Singular ? 0 : 1);
        k.lengths.push_back(b.length);
    }
    return k;
}

std::vector<Block> merge_regular_runs(std::vector<Block> blocks) {
    std::vector<Block> merged;
    for (const Block& b : blocks) {
        if (!merged.empty() && b.kind == BlockKind::Regular &&
            merged.back().kind == BlockKind::Regular)
            merged.back().length += b.length;
        else
            merged.push_back(b);
    }
    if (merged.size() > 1 && merged.front().kind == BlockKind::Regular &&
        merged.back().kind == BlockKind::Regular) {
        merged.front().length += merged.back().length;
        merged.pop_back();
    }
    return merged;
}

}  // namespace

int DlousskySequence::default_max_b2() {
    if (const char* env = std::getenv("KATO_MAX_B2")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 64;
}

DlousskySequence DlousskySequence::from_blocks(std::vector<Block> blocks, int max_b2) {
    if (blocks.empty()) throw Error("empty block list");
    long total = 0;
    for (const Block& b : blocks) {
        if (b.length <= 0) throw Error("block length must be positive");
        total += b.length;
    }
    if (total > max_b2)
        throw Error("b2 = " + std::to_string(total) + " exceeds the configured bound " +
                    std::to_string(max_b2) + " (raise KATO_MAX_B2)");

    blocks = merge_regular_runs(std::move(blocks));

    std::size_t best = 0;
    bool found = false;
    RotationKey best_key;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].kind != BlockKind::Singular) continue;
        RotationKey k = key_of(blocks, i);
        if (!found || k < best_key) {
            best = i;
            best_key = std::move(k);
            found = true;
        }
    }
    if (found && best != 0)
        std::rotate(blocks.begin(), blocks.begin() + static_cast<long>(best), blocks.end());

    DlousskySequence seq;
    seq.blocks_ = std::move(blocks);
    seq.entries_.reserve(static_cast<std::size_t>(total));
    for (const Block& b : seq.blocks_) {
        if (b.kind == BlockKind::Singular) {
            seq.entries_.push_back(b.length + 2);
            for (int i = 1; i < b.length; ++i) seq.entries_.push_back(2);
        } else {
            for (int i = 0; i < b.length; ++i) seq.entries_.push_back(2);
        }
    }
    return seq;
}

int DlousskySequence::singular_count() const {
    return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(), [](const Block& b) {
        return b.kind == BlockKind::Singular;
    }));
}

int DlousskySequence::regular_total() const {
    int l = 0;
    for (const Block& b : blocks_)
        if (b.kind == BlockKind::Regular) l += b.length;
    return l;
}

int DlousskySequence::regular_block_count() const {
    return static_cast<int>(blocks_.size()) - singular_count();
}

bool DlousskySequence::is_simple() const {
    return singular_count() >= 1 && regular_block_count() == 1;
}

std::vector<int> DlousskySequence::singular_lengths() const {
    std::vector<int> ks;
    for (const Block& b : blocks_)
        if (b.kind == BlockKind::Singular) ks.push_back(b.length);
    return ks;
}

std::string DlousskySequence::symbolic() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out << ' ';
        out << (blocks_[i].kind == BlockKind::Singular ? 's' : 'r') << blocks_[i].length;
    }
    out << ']';
    return out.str();
}

DlousskySequence parse_symbolic(std::string_view text, int max_b2) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
    ++i;
    std::vector<Block> blocks;
    for (;;) {
        skip();
        if (i >= text.size()) throw ParseError("unterminated sequence, expected ']'", i);
        if (text[i] == ']') {
            ++i;
            break;
        }
        const char tag = text[i];
        if (tag != 's' && tag != 'r') throw ParseError("expected 's' or 'r'", i);
        ++i;
        if (i < text.size() && text[i] == '_') ++i;
        const std::size_t digits_at = i;
        long value = 0;
        bool any = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000) throw ParseError("block length out of range", digits_at);
            ++i;
            any = true;
        }
        if (!any) throw ParseError("expected a block length", i);
        if (value < 1) throw ParseError("block length must be positive", digits_at);
        blocks.push_back({tag == 's' ? BlockKind::Singular : BlockKind::Regular,
                          static_cast<int>(value)});
    }
    skip();
    if (i != text.size()) throw ParseError("trailing characters after ']'", i);
    if (blocks.empty()) throw ParseError("empty block list", 0);
    return DlousskySequence::from_blocks(std::move(blocks), max_b2);
}

DlousskySequence parse_expanded(std::span<const int> values, int max_b2) {
    if (values.empty()) throw Error("empty sequence");
    for (int v : values)
        if (v < 2) throw Error("every entry must be >= 2, got " + std::to_string(v));

    const std::size_t n = values.size();
    std::size_t start = 0;
    while (start < n && values[start] == 2) ++start;
    if (start == n) start = 0;  // all twos: Enoki, rotation is a no-op

    std::vector<Block> blocks;
    std::size_t i = 0;
    while (i < n) {
        const int v = values[(start + i) % n];
        if (v > 2) {
            const int k = v - 2;
            for (int j = 1; j < k; ++j) {
                ++i;
                if (i >= n || values[(start + i) % n] != 2)
                    throw Error("inconsistent sequence: singular block of head " +
                                std::to_string(v) + " overruns its chain of 2s");
            }
            blocks.push_back({BlockKind::Singular, k});
            ++i;
        } else {
            int run = 0;
            while (i < n && values[(start + i) % n] == 2) {
                ++run;
                ++i;
            }
            blocks.push_back({BlockKind::Regular, run});
        }
    }
    return DlousskySequence::from_blocks(std::move(blocks), max_b2);
}

Int dloussky_number(const DlousskySequence& seq) {
    Int sum = 0;
    for (int v : seq.entries()) sum += v;
    return sum;
}

SurfaceClass classify(const DlousskySequence& seq) {
    const int n_singular = seq.singular_count();
    const int n_regular = seq.regular_block_count();
    if (n_singular == 0) return {SurfaceClass::Enoki};
    if (n_regular == 0) return {SurfaceClass::InoueHirzebruch};
    return {SurfaceClass::Intermediate, n_regular == 1, n_regular};
}

std::string to_string(const SurfaceClass& cls) {
    switch (cls.kind) {
        case SurfaceClass::Enoki:
            return "Enoki";
        case SurfaceClass::InoueHirzebruch:
            return "Inoue-Hirzebruch";
        case SurfaceClass::Intermediate:
            return cls.simple ? "intermediate (simple)"
                             : "intermediate (" + std::to_string(cls.trees) + " trees)";
    }
    return "?";
}

}  // namespace kato
