#pragma once

#include "sbl/spectral.hpp"

#include <string>
#include <vector>

namespace sbl {

enum class PhaseKind { cosine, sine };

/// Cylindrical test function: scale * cos<ell,x> or scale * sin<ell,x>,
/// the real/imaginary part of e^{i<ell,x>}. Bounded by |scale|, with gradient
/// in span(ell); closed under the generator in exact form.
struct CylindricalFunction {
    SpectralField ell;
    PhaseKind kind = PhaseKind::cosine;
    double scale = 1.0;

    /// Compact label like "cos(1;1:2)" used in CSV tables and reports.
    std::string label() const;
};

double evaluate(const CylindricalFunction& phi, const SpectralField& x);

SpectralField gradient(const CylindricalFunction& phi, const SpectralField& x);

/// Generator action L phi(x) = 1/2 Tr[Q D^2 phi] + <Ax + b(x), D phi> with
/// identity noise covariance: the trace term is exactly -|ell|^2 phi(x) / 2,
/// so no second-derivative sum or truncation enters.
double generator_apply(const CylindricalFunction& phi, const SpectralField& x);

struct TestFamily {
    std::vector<CylindricalFunction> members;
    std::string description;
};

/// Deterministic cylindrical family with frequencies supported on modes
/// 1..max_mode, embedded in n_modes. Mixes kinds, amplitudes and sign
/// patterns; identical member list for any n_modes >= max_mode.
TestFamily standard_family(int count, int max_mode, int n_modes);

} // namespace sbl
