#include "kato/enumerate.hpp"

#include "kato/chern.hpp"
#include "kato/errors.hpp"

#include <algorithm>

namespace kato {

namespace {

void gen_blocks(int remaining, std::vector<Block>& acc, std::vector<std::vector<Block>>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int len = 1; len <= remaining; ++len) {
        const bool after_regular = !acc.empty() && acc.back().kind == BlockKind::Regular;
        acc.push_back({BlockKind::Singular, len});
        gen_blocks(remaining - len, acc, out);
        acc.pop_back();
        if (!after_regular && !acc.empty()) {  // first block singular; no adjacent regulars
            acc.push_back({BlockKind::Regular, len});
            gen_blocks(remaining - len, acc, out);
            acc.pop_back();
        }
    }
}

bool is_canonical(const std::vector<Block>& blocks) {
    // canonical iff from_blocks keeps the rotation as given
    auto seq = DlousskySequence::from_blocks(blocks, 1 << 20);
    return seq.blocks() == blocks;
}

}  // namespace

std::vector<DlousskySequence> enumerate_sequences(int b2_min, int b2_max, SequenceFilter filter) {
    if (b2_min < 1 || b2_max < b2_min) throw Error("bad enumeration range");
    if (b2_max > DlousskySequence::default_max_b2())
        throw Error("enumeration bound exceeds the configured b2 limit");

    std::vector<DlousskySequence> out;
    for (int b = b2_min; b <= b2_max; ++b) {
        std::vector<std::vector<Block>> raw;
        std::vector<Block> acc;
        gen_blocks(b, acc, raw);  // all tuples starting with a singular block
        raw.push_back({{BlockKind::Regular, b}});  // Enoki

        std::vector<DlousskySequence> canon;
        for (const auto& blocks : raw) {
            if (!is_canonical(blocks)) continue;
            auto seq = DlousskySequence::from_blocks(blocks, b2_max);
            switch (filter) {
                case SequenceFilter::All:
                    break;
                case SequenceFilter::Simple:
                    if (!seq.is_simple()) continue;
                    break;
                case SequenceFilter::Index1:
                    if (!seq.is_simple() || den(tip_multiplicity(seq)) != 1) continue;
                    break;
            }
            canon.push_back(std::move(seq));
        }
        std::sort(canon.begin(), canon.end(),
                  [](const DlousskySequence& a, const DlousskySequence& b2) {
                      return a.symbolic() < b2.symbolic();
                  });
        for (auto& s : canon) out.push_back(std::move(s));
    }
    return out;
}

Int simple_sequence_count(int b) {
    // brute-force composition counter, independent of the enumerator
    Int count = 0;
    // compositions of b with parts >= 1; last part is l, the rest the k_j (N >= 1)
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (parts.size() >= 2) ++count;
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    rec(rec, b);
    return count;
}

}  // namespace kato
