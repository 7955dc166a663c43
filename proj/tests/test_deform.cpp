#include "kato/deform.hpp"
#include "kato/enumerate.hpp"
#include "kato/errors.hpp"
#include "kato/sequence.hpp"

#include <doctest.h>

#include <vector>

using namespace kato;

TEST_CASE("log-deformation dimensions for a simple intermediate surface") {
    auto seq = parse_symbolic("[s2 r2]");

    auto r0 = deformation_report(seq, 0);
    CHECK(r0.chi_tangent == 8);
    CHECK(r0.chi_log == 2);
    CHECK(r0.h1_log == 2);
    CHECK(r0.eta == 0);
    CHECK(r0.h1_theta_minus_d == 6);
    CHECK(r0.h1_normal == 6);

    // index 1 and minimum multiplicity 1, so a vector field forces eta = 1
    auto r1 = deformation_report(seq, 1);
    CHECK(r1.h1_log == 3);
    CHECK(r1.eta == 1);
    CHECK(r1.h1_theta_minus_d == 5);
}

TEST_CASE("Inoue-Hirzebruch surfaces are logarithmically rigid") {
    auto r = deformation_report(parse_symbolic("[s1 s1]"), 0);
    CHECK(r.l_total == 0);
    CHECK(r.h1_log == 0);
}

TEST_CASE("Enoki surfaces deform in b + epsilon directions") {
    for (int eps : {0, 1}) {
        auto r = deformation_report(parse_symbolic("[r3]"), eps);
        CHECK(r.h1_log == 3 + eps);
    }
}

TEST_CASE("epsilon = 1 requires index 1") {
    CHECK_THROWS_AS(deformation_report(parse_symbolic("[s1 s1 r2]"), 1), EpsilonInconsistent);
}

TEST_CASE("nodal family routes through the double cover") {
    auto nodal = parse_symbolic("[s2 r1]");
    CHECK(is_nodal_family(nodal));
    CHECK_FALSE(is_nodal_family(parse_symbolic("[s2 r2]")));

    for (int eps : {0, 1}) {
        auto r = deformation_report(nodal, eps);
        CHECK(r.nodal_double_cover);
        CHECK(r.h1_log == 1 + eps);
    }

    // the doubled sequence computes directly, with exactly twice the chi
    auto doubled = deformation_report(parse_symbolic("[s2 r1 s2 r1]"), 0);
    CHECK_FALSE(doubled.nodal_double_cover);
    CHECK(doubled.chi_log == 2 * deformation_report(nodal, 0).chi_log);
    CHECK(doubled.chi_tangent == 2 * deformation_report(nodal, 0).chi_tangent);
}

TEST_CASE("moduli tags count the regular entries") {
    CHECK(moduli_explanation(parse_symbolic("[s2 r2]")) ==
          std::vector<bool>{false, false, true, true});
    CHECK(moduli_explanation(parse_symbolic("[s1 s1]")) == std::vector<bool>{false, false});
    CHECK(moduli_explanation(parse_symbolic("[r3]")) == std::vector<bool>{true, true, true});
}

TEST_CASE("bookkeeping identities over a sweep") {
    for (const auto& s : enumerate_sequences(1, 8, SequenceFilter::All)) {
        CAPTURE(s.symbolic());
        auto r = deformation_report(s, 0);
        int moduli = 0;
        for (bool m : moduli_explanation(s)) moduli += m;
        CHECK(r.h1_log - r.epsilon == moduli);
        CHECK(r.chi_tangent == 2 * s.b2());
        CHECK(r.h1_normal == 2 * s.b2() - s.regular_total());
        CHECK(r.eta <= r.epsilon);
    }
}
