#pragma once

// Named example diagrams.
//
//   unknot            crossing-free circle
//   unlink-K          K crossing-free circles
//   trefoil           closure of s1^3, O1+ U2+ O3+ U1+ O2+ U3+
//   figure8           closure of s1 s2^-1 s1 s2^-1
//   hopf+ / hopf-     two-crossing Hopf links
//   virtual-trefoil   O1+ O2+ U1+ U2+
//   h(MU,I,J,A)       closure of the surgery image of H_IJ(A)
//   hbar(MU,I,J,B)    closure of the surgery image of Hbar_IJ(B)

#include <string>
#include <string_view>
#include <vector>

#include "wld/diagram.hpp"

namespace wld {

/// Throws std::invalid_argument for an unknown name.
Diagram named(std::string_view name);

/// Names accepted by `named`, with one representative of each family.
std::vector<std::string> corpus_names();

/// Closure of a braid word on `strands` strands; generator +i means s_i
/// (left strand over, positive crossing), -i its inverse.
Diagram braid_closure(int strands, const std::vector<int>& word);

}  // namespace wld
