#pragma once

// Standard diagrams of Montesinos links as PD codes, and a determinant
// computed from the diagram alone (Goeritz matrix of a checkerboard
// coloring). The oracle shares no arithmetic with the closed-form
// determinant in montesinos.hpp.
//
// Chirality: the tangle 1 is a single crossing whose NW-SE strand is over.
// Integer tangles are horizontal twists of such crossings, t0 is the mirror
// of t in the NW-SE diagonal, and M(e; t_1..t_p) is the vertical closure
// (NW-NE, SW-SE) of e + t_1 0 + ... + t_p 0. PD output may be the mirror
// image of other tools' conventions; determinants are unaffected.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "mqa/montesinos.hpp"

namespace mqa {

struct PlanarDiagram {
  /// Per crossing: edge labels counterclockwise, starting at the incoming
  /// under-strand. Labels run 1..2n consecutively along each component.
  std::vector<std::array<int, 4>> crossings;
  int components = 0;  // includes free loops
  int free_loops = 0;  // crossingless circles, which a PD code cannot carry

  std::size_t crossing_count() const noexcept { return crossings.size(); }
};

/// 1*(e + t_1 0 + ... + t_p 0) built tassel by tassel from the tangle words.
/// Crossing count is |e| + Σ_i Σ_j |a_ij|.
PlanarDiagram standard_diagram(const TangleSum& sum);
inline PlanarDiagram standard_diagram(const MontesinosLink& link) { return standard_diagram(link.params()); }

/// Vertical closure 1*t of the rational tangle t, or 1*(t0) when times_zero.
PlanarDiagram rational_closure_diagram(const Fraction& t, bool times_zero = false);

/// "X(a,b,c,d), X(...), ..."
std::string to_pd_string(const PlanarDiagram& d);

constexpr std::size_t kDefaultOracleLimit = 30;

/// Link determinant from the diagram. Throws Error("oracle limit") when the
/// diagram has more than `max_crossings` crossings.
Integer det_oracle(const PlanarDiagram& d, std::size_t max_crossings = kDefaultOracleLimit);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

}  // namespace mqa
