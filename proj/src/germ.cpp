#include "kato/germ.hpp"

#include "kato/chern.hpp"
#include "kato/errors.hpp"
#include "kato/forms.hpp"

#include <cmath>
#include <sstream>

namespace kato {

namespace {

std::complex<double> cpow(std::complex<double> z, const Int& e) {
    if (e == 0) return {1.0, 0.0};
    if (z == std::complex<double>{0.0, 0.0}) return {0.0, 0.0};
    return std::pow(z, e.convert_to<double>());
}

std::string complex_str(std::complex<double> c) {
    std::ostringstream out;
    out << '(' << c.real();
    if (c.imag() >= 0)
        out << '+' << c.imag();
    else
        out << c.imag();
    out << "i)";
    return out.str();
}

std::string monomial(const char* base, const Int& e1, const Int& e2) {
    std::ostringstream out;
    (void)base;
    out << "z1^" << e1 << " z2^" << e2;
    return out.str();
}

}  // namespace

GermInvariants germ_invariants(const DlousskySequence& seq) {
    if (!seq.is_simple())
        throw NotSimple("germ invariants require a simple intermediate sequence");
    const DlousskyMatrix m = dloussky_matrix(seq.singular_lengths());
    const Int p = m.final.p, q = m.final.q, r = m.final.r, s = m.final.s;
    const int l = seq.regular_total();
    const int n = seq.singular_count();
    const int sign = (n % 2 == 0) ? 1 : -1;

    GermInvariants inv;
    inv.d = (r + s) - (p + q);
    const Int k_floor = floor_div(Int(l) - inv.d, r + s - 1);
    inv.K = k_floor > 0 ? k_floor : Int(0);
    inv.u = Rat(p + s + r * l - 1 - sign, r + s - 1);
    inv.v = Rat(q + r + s * l - 1 + sign, r + s - 1);
    inv.parity_sign = sign;
    return inv;
}

GermSpec build_germ(const DlousskySequence& seq, std::vector<std::complex<double>> params,
                    bool generic) {
    const GermInvariants inv = germ_invariants(seq);
    const DlousskyMatrix m = dloussky_matrix(seq.singular_lengths());
    const int l = seq.regular_total();
    if (static_cast<int>(params.size()) != l + 1)
        throw Error("germ expects " + std::to_string(l + 1) + " parameters (a_0..a_" +
                    std::to_string(l - 1) + ", a_{l+K}), got " + std::to_string(params.size()));
    GermSpec g;
    g.p = m.final.p;
    g.q = m.final.q;
    g.r = m.final.r;
    g.s = m.final.s;
    g.l = l;
    g.K = inv.K;
    g.params = std::move(params);
    g.generic_first_blowup = generic;
    return g;
}

GermValue eval_germ(const GermSpec& g, std::complex<double> z1, std::complex<double> z2) {
    GermValue out;
    const int l = g.l;
    if (g.generic_first_blowup) {
        std::complex<double> w = z1 * cpow(z2, Int(l));
        for (int i = 0; i < l; ++i) w += g.params[i] * cpow(z2, Int(i + 1));
        w += g.params[l] * cpow(z2, g.K + l + 1);
        out.w1 = cpow(w, g.p) * cpow(z2, g.q);
        out.w2 = cpow(w, g.r) * cpow(z2, g.s);
    } else {
        const std::complex<double> w = cpow(z1, g.r) * cpow(z2, g.s);
        std::complex<double> first = cpow(z1, g.p + g.r * l) * cpow(z2, g.q + g.s * l);
        for (int i = 0; i < l; ++i) first += g.params[i] * cpow(w, Int(i + 1));
        first += g.params[l] * cpow(w, g.K + l + 1);
        out.w1 = first;
        out.w2 = w;
    }
    out.finite = std::isfinite(out.w1.real()) && std::isfinite(out.w1.imag()) &&
                 std::isfinite(out.w2.real()) && std::isfinite(out.w2.imag());
    return out;
}

std::string to_string(const GermSpec& g) {
    std::ostringstream out;
    const int l = g.l;
    if (g.generic_first_blowup) {
        std::ostringstream w;
        w << "z1 z2^" << l;
        for (int i = 0; i < l; ++i) w << " + " << complex_str(g.params[i]) << " z2^" << (i + 1);
        w << " + " << complex_str(g.params[l]) << " z2^" << (g.K + l + 1);
        out << "G(z1,z2) = ((" << w.str() << ")^" << g.p << " z2^" << g.q << ", (" << w.str()
            << ")^" << g.r << " z2^" << g.s << ")";
    } else {
        out << "G(z1,z2) = (" << monomial("z", g.p + g.r * l, g.q + g.s * l);
        for (int i = 0; i < l; ++i)
            out << " + " << complex_str(g.params[i]) << " (z1^" << g.r << " z2^" << g.s << ")^"
                << (i + 1);
        out << " + " << complex_str(g.params[l]) << " (z1^" << g.r << " z2^" << g.s << ")^"
            << (g.K + l + 1);
        out << ", z1^" << g.r << " z2^" << g.s << ")";
    }
    return out.str();
}

TwistData twist_alpha(const DlousskySequence& seq, std::complex<double> a0) {
    if (a0 == std::complex<double>{0.0, 0.0}) throw ZeroParameter("a_0 must be nonzero");
    const GermInvariants inv = germ_invariants(seq);
    if (!is_integer(inv.u))
        throw IndexNotOne("u = " + fraction_string(inv.u) + " is not an integer; index(S) > 1");
    const DlousskyMatrix m = dloussky_matrix(seq.singular_lengths());

    TwistData t;
    t.alpha = double(inv.parity_sign) * cpow(a0, num(inv.u));
    t.beta = 1.0 / (m.k_invariant.convert_to<double>() * t.alpha);
    const double log_mod = std::log(std::abs(t.alpha));
    t.gauduchon_degree_sign = log_mod > 0 ? -1 : (log_mod < 0 ? 1 : 0);
    return t;
}

HermitianClass classify_hermitian(const DlousskySequence& seq, std::complex<double> a0) {
    if (a0 == std::complex<double>{0.0, 0.0}) throw ZeroParameter("a_0 must be nonzero");
    const GermInvariants inv = germ_invariants(seq);
    if (!is_integer(inv.u))
        throw IndexNotOne("u = " + fraction_string(inv.u) + " is not an integer; index(S) > 1");
    const double mod = std::abs(a0);
    if (std::abs(mod - 1.0) <= 1e-12) return HermitianClass::AnticanonicalCandidate;
    return mod < 1.0 ? HermitianClass::VectorFieldCandidate : HermitianClass::BiHermitianCandidate;
}

HermitianClass classify_hermitian_exact(const DlousskySequence& seq, const Rat& re, const Rat& im) {
    if (re == 0 && im == 0) throw ZeroParameter("a_0 must be nonzero");
    const GermInvariants inv = germ_invariants(seq);
    if (!is_integer(inv.u))
        throw IndexNotOne("u = " + fraction_string(inv.u) + " is not an integer; index(S) > 1");
    const Rat mod2 = re * re + im * im;
    if (mod2 == 1) return HermitianClass::AnticanonicalCandidate;
    return mod2 < 1 ? HermitianClass::VectorFieldCandidate : HermitianClass::BiHermitianCandidate;
}

std::string to_string(HermitianClass cls) {
    switch (cls) {
        case HermitianClass::AnticanonicalCandidate:
            return "anti-canonical candidate (|a0| = 1)";
        case HermitianClass::VectorFieldCandidate:
            return "vector-field candidate (|a0| < 1)";
        case HermitianClass::BiHermitianCandidate:
            return "bi-Hermitian candidate (|a0| > 1)";
    }
    return "?";
}

}  // namespace kato
