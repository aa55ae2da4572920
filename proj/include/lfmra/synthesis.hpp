#ifndef LFMRA_SYNTHESIS_HPP
#define LFMRA_SYNTHESIS_HPP

#include <optional>
#include <string>

#include "lfmra/analysis.hpp"

namespace lfmra {

/// Inverse finite transform: phi(x) = p^{-s} sum_c phi_hat(c) (zeta_c, x),
/// sampled on the K_{-1}/K_M grid.
StepFn scaling_from_spectrum(const FieldParams& f, const SpectrumTable& spec);

/// Coset offset + K_level (all elements with digits only at indices >= level,
/// translated by the offset whose digits sit below level).
struct IndicatorCell {
    LocalElem offset;
    int level = 0;
    bool operator==(const IndicatorCell&) const = default;
};

/// Support of phi as a disjoint union of cosets, with complete sibling
/// families merged into their parent ball. Returns nullopt unless every
/// value of phi is exactly 0 or 1.
std::optional<std::vector<IndicatorCell>> extract_indicator(const StepFn& phi);

std::string indicator_to_string(const FieldParams& f,
                                const std::vector<IndicatorCell>& cells);

/// 0/1 support picture for s = 2: rows/columns are base-p integers of the two
/// GF(p) coordinate strings. Time-domain grids read the most negative digit
/// as most significant.
std::string grid_render(const StepFn& phi);

/// Same picture on the frequency side; spectrum grids read the highest-index
/// digit as most significant.
std::string grid_render_spectrum(const FieldParams& f, const SpectrumTable& spec);

} // namespace lfmra

#endif
