#pragma once

#include "wld/diagram.hpp"
#include "wld/random.hpp"

namespace wld {

/// Uniformly shuffled Gauss code: 1..max_mu components, 0..max_crossings
/// crossings with ids 1..c and random signs, passages dealt into the
/// components at random cut points (components may be empty).
Diagram random_diagram(Rng& rng, int max_crossings, int max_mu, DiagramKind kind = DiagramKind::link);

}  // namespace wld
