#pragma once

#include "gica/lattice.hpp"

#include <string>
#include <vector>

namespace gica {

enum class DiagramFormat { Text, Svg };

/// Space-time diagram of a classical trace, time flowing upward. Cells
/// are drawn as a left and a right sub-square; the gauge field sits
/// between cells, the identity rendered empty. The text header documents
/// the value-to-glyph maps; text output is byte-deterministic.
std::string render_spacetime(const std::vector<GaugedConfiguration>& trace, DiagramFormat format);

}  // namespace gica
