#pragma once

#include "kato/rational.hpp"
#include "kato/sequence.hpp"

#include <complex>
#include <string>
#include <vector>

namespace kato {

struct GermInvariants {
    Int d;              // (r+s) - (p+q)
    Int K;              // max{0, floor((l-d)/(r+s-1))}
    Rat u, v;           // vanishing orders of a twisted anti-canonical section
    int parity_sign;    // (-1)^N
};

GermInvariants germ_invariants(const DlousskySequence& seq);

/// Contracting polynomial germ at the origin, in one of the two normal forms.
struct GermSpec {
    Int p, q, r, s;
    int l = 0;
    Int K;
    std::vector<std::complex<double>> params;  // a_0..a_{l-1}, then a_{l+K}
    bool generic_first_blowup = false;
};

/// params must have length l+1 (a_0..a_{l-1} and a_{l+K}).
GermSpec build_germ(const DlousskySequence& seq, std::vector<std::complex<double>> params,
                    bool generic);

struct GermValue {
    std::complex<double> w1, w2;
    bool finite = true;
};

GermValue eval_germ(const GermSpec& germ, std::complex<double> z1, std::complex<double> z2);

/// Canonical text rendering of the germ.
std::string to_string(const GermSpec& germ);

struct TwistData {
    std::complex<double> alpha;     // (-1)^N a_0^u
    std::complex<double> beta;      // 1 / (k(S) alpha)
    int gauduchon_degree_sign;      // -sign(log|alpha|)
};

/// Requires index 1 (integer exponent u) and a_0 != 0.
TwistData twist_alpha(const DlousskySequence& seq, std::complex<double> a0);

enum class HermitianClass { AnticanonicalCandidate, VectorFieldCandidate, BiHermitianCandidate };

/// Necessary-condition trichotomy on |a_0|: =1 / <1 / >1, with a relative
/// tolerance of 1e-12 around the unit circle for floating inputs.
HermitianClass classify_hermitian(const DlousskySequence& seq, std::complex<double> a0);

/// Exact path: a_0 given as an exact rational pair re + im*i.
HermitianClass classify_hermitian_exact(const DlousskySequence& seq, const Rat& re, const Rat& im);

std::string to_string(HermitianClass cls);

}  // namespace kato
