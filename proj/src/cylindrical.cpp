#include "sbl/cylindrical.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sbl {

std::string CylindricalFunction::label() const
{
    std::string s = (kind == PhaseKind::cosine) ? "cos(" : "sin(";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g;", scale);
    s += buf;
    bool first = true;
    for (int k = 0; k < ell.n_modes(); ++k) {
        if (ell[k] == 0.0) continue;
        std::snprintf(buf, sizeof buf, "%s%d:%g", first ? "" : ",", k + 1, ell[k]);
        s += buf;
        first = false;
    }
    s += ")";
    return s;
}

double evaluate(const CylindricalFunction& phi, const SpectralField& x)
{
    const double theta = inner(phi.ell, x);
    return phi.kind == PhaseKind::cosine ? phi.scale * std::cos(theta)
                                         : phi.scale * std::sin(theta);
}

SpectralField gradient(const CylindricalFunction& phi, const SpectralField& x)
{
    const double theta = inner(phi.ell, x);
    const double dphase = phi.kind == PhaseKind::cosine ? -phi.scale * std::sin(theta)
                                                        : phi.scale * std::cos(theta);
    return dphase * phi.ell;
}

double generator_apply(const CylindricalFunction& phi, const SpectralField& x)
{
    const double theta = inner(phi.ell, x);
    const double ell_sq = inner(phi.ell, phi.ell);
    double value, dphase;
    if (phi.kind == PhaseKind::cosine) {
        value = phi.scale * std::cos(theta);
        dphase = -phi.scale * std::sin(theta);
    } else {
        value = phi.scale * std::sin(theta);
        dphase = phi.scale * std::cos(theta);
    }
    const SpectralField drift = apply_laplacian(x) + burgers_b(x);
    return -0.5 * ell_sq * value + dphase * inner(drift, phi.ell);
}

TestFamily standard_family(int count, int max_mode, int n_modes)
{
    if (max_mode > n_modes)
        throw std::invalid_argument("standard_family: max_mode exceeds n_modes");
    TestFamily fam;
    fam.description = "standard cylindrical family";
    // Sign/mode patterns on modes 1..3 (reused cyclically if max_mode < 3).
    const std::vector<std::vector<double>> patterns = {
        {1.0}, {0.0, 1.0}, {0.0, 0.0, 1.0}, {1.0, 1.0}, {1.0, -1.0},
        {1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, {2.0, -1.0}, {1.0, 0.0, -2.0},
    };
    const double amps[] = {0.5, 1.0, 2.0, 1.5, 0.75};
    int made = 0;
    for (int round = 0; made < count; ++round) {
        const auto& pat = patterns[static_cast<std::size_t>(round) % patterns.size()];
        const double amp = amps[(static_cast<std::size_t>(round) / patterns.size()) % 5];
        CylindricalFunction phi;
        phi.ell = SpectralField(n_modes);
        for (std::size_t i = 0; i < pat.size(); ++i) {
            const int mode = static_cast<int>(i) % max_mode; // fold onto allowed modes
            phi.ell[mode] += amp * pat[i];
        }
        phi.kind = (made % 2 == 0) ? PhaseKind::cosine : PhaseKind::sine;
        phi.scale = 1.0;
        if (inner(phi.ell, phi.ell) == 0.0) { phi.ell[0] = amp; }
        fam.members.push_back(phi);
        ++made;
    }
    return fam;
}

} // namespace sbl
