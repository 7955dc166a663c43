#include "kato/linalg.hpp"

#include "kato/errors.hpp"

#include <utility>

namespace kato {

RatVector solve_exact(RatMatrix a, RatVector b) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n) throw Error("solve_exact: shape mismatch");

    std::vector<Eigen::Index> col_of(n);
    for (Eigen::Index i = 0; i < n; ++i) col_of[i] = i;

    for (Eigen::Index k = 0; k < n; ++k) {
        // full pivot: any nonzero entry in the remaining block
        Eigen::Index pr = -1, pc = -1;
        for (Eigen::Index i = k; i < n && pr < 0; ++i)
            for (Eigen::Index j = k; j < n; ++j)
                if (a(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) throw SingularSystem("singular system");
        if (pr != k) {
            a.row(k).swap(a.row(pr));
            std::swap(b(k), b(pr));
        }
        if (pc != k) {
            a.col(k).swap(a.col(pc));
            std::swap(col_of[k], col_of[pc]);
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rat m = a(i, k) / a(k, k);
            for (Eigen::Index j = k; j < n; ++j) a(i, j) -= m * a(k, j);
            b(i) -= m * b(k);
        }
    }

    RatVector x(n);
    for (Eigen::Index k = n - 1; k >= 0; --k) {
        Rat acc = b(k);
        for (Eigen::Index j = k + 1; j < n; ++j) acc -= a(k, j) * x(j);
        x(k) = acc / a(k, k);
    }

    RatVector out(n);
    for (Eigen::Index k = 0; k < n; ++k) out(col_of[k]) = x(k);
    return out;
}

Int determinant_exact(IntMatrix a) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw Error("determinant_exact: not square");
    if (n == 0) return 1;

    Int prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index p = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace kato
