#include "kato/forms.hpp"

#include "kato/errors.hpp"

namespace kato {

Int f_eval(std::span<const int> args) {
    Int prev = 0;  // f_{-1}
    Int cur = 1;   // f_0
    for (int x : args) {
        Int next = x * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int p_eval(std::span<const int> args) {
    Int fprev = 0, fcur = 1;  // f over the consumed prefix
    Int p = 0;
    for (int x : args) {
        p += x * fcur;
        Int next = x * fcur + fprev;
        fprev = std::move(fcur);
        fcur = std::move(next);
    }
    return p;
}

DlousskyMatrix dloussky_matrix(std::span<const int> ks) {
    if (ks.empty()) throw Error("dloussky_matrix: empty list of block lengths");
    DlousskyMatrix m;
    MatrixQuad acc{1, 0, 0, 1};
    for (int k : ks) {
        // acc *= (0 1; 1 k)
        acc = {acc.q, acc.p + k * acc.q, acc.s, acc.r + k * acc.s};
        m.partials.push_back(acc);
    }
    m.final = acc;
    m.k_invariant = acc.r + acc.s;
    return m;
}

}  // namespace kato
