#pragma once

#include <string>

#include "lgv/partition.hpp"
#include "lgv/triangular.hpp"

namespace lgv {

// Plot of the start/end configuration for (lambda, mu, s): lattice grid,
// the main diagonal, blue B dots, red A dots, labels.  With overlay_paths,
// the first identity-permutation non-intersecting tuple (oracle order) is
// drawn as polylines; nothing extra is drawn when none exists.  Output is
// byte-deterministic for fixed input (integer coordinates only).
std::string render_configuration_svg(const Partition& lambda, const Partition& mu,
                                     const TriangularSequence& s, bool overlay_paths = false);

} // namespace lgv
