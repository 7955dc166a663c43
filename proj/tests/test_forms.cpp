#include "kato/forms.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace kato;

TEST_CASE("f recursion base cases and small values") {
    CHECK(f_eval({}) == 1);
    std::vector<int> a{3};
    CHECK(f_eval(a) == 3);
    a = {3, 4};
    CHECK(f_eval(a) == 13);
    a = {1, 1, 1};
    CHECK(f_eval(a) == 3);
}

TEST_CASE("P recursion base cases and small values") {
    CHECK(p_eval({}) == 0);
    std::vector<int> a{3};
    CHECK(p_eval(a) == 3);
    a = {2, 3};
    CHECK(p_eval(a) == 8);
    a = {1, 1, 1};
    CHECK(p_eval(a) == 4);
}

namespace {

// P(x1..xn) + 1 = f(x1..xn) + f(x1..x_{n-1})
bool sum_identity(std::span<const int> xs) {
    return p_eval(xs) + 1 == f_eval(xs) + f_eval(xs.subspan(0, xs.size() - 1));
}

}  // namespace

TEST_CASE("sum identity, exhaustive over short tuples") {
    std::vector<int> xs;
    auto rec = [&](auto&& self, int depth) -> void {
        if (!xs.empty()) REQUIRE(sum_identity(xs));
        if (depth == 0) return;
        for (int v = 1; v <= 9; ++v) {
            xs.push_back(v);
            self(self, depth - 1);
            xs.pop_back();
        }
    };
    rec(rec, 5);
}

TEST_CASE("sum identity, random longer tuples") {
    std::mt19937 rng(20240826);
    std::uniform_int_distribution<int> len(6, 8), val(1, 9);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> xs(static_cast<std::size_t>(len(rng)));
        for (int& x : xs) x = val(rng);
        CAPTURE(trial);
        CHECK(sum_identity(xs));
    }
}

TEST_CASE("matrix product small cases") {
    std::vector<int> ks{2};
    auto m = dloussky_matrix(ks);
    CHECK(m.final == MatrixQuad{0, 1, 1, 2});
    CHECK(m.k_invariant == 3);

    ks = {1, 1};
    m = dloussky_matrix(ks);
    CHECK(m.final == MatrixQuad{1, 1, 1, 2});
    CHECK(m.k_invariant == 3);
    // k-invariant and p+q against the companion form
    CHECK(m.final.r + m.final.s == p_eval(ks) + 1);
    std::vector<int> head{1};
    CHECK(m.final.p + m.final.q == p_eval(head) + 1);
}

TEST_CASE("matrix entries are form values and determinants alternate") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(1, 7), val(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> ks(static_cast<std::size_t>(len(rng)));
        for (int& k : ks) k = val(rng);
        auto m = dloussky_matrix(ks);
        CAPTURE(trial);
        REQUIRE(m.partials.size() == ks.size());
        for (std::size_t j = 1; j <= ks.size(); ++j) {
            const auto& q = m.partials[j - 1];
            std::span<const int> pre(ks.data(), j);
            std::span<const int> tail(ks.data() + 1, j - 1);
            CHECK(q.s == f_eval(pre));
            CHECK(q.r == f_eval(pre.subspan(0, j - 1)));
            CHECK(q.q == f_eval(tail));
            CHECK(q.p == (tail.empty() ? Int(0) : f_eval(tail.subspan(0, tail.size() - 1))));
            CHECK(q.p * q.s - q.q * q.r == (j % 2 ? -1 : 1));
        }
        // r+s = P(k_1..k_N) + 1
        CHECK(m.k_invariant == p_eval(ks) + 1);
    }
}
