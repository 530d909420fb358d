#ifndef MOOD1D_STENCIL_HPP_
#define MOOD1D_STENCIL_HPP_

#include <utility>
#include <vector>

namespace mood1d {

/// Reconstruction stencil of a cell: sorted neighbor indices, reference cell excluded.
/// members plus the reference cell always form a contiguous index range.
struct Stencil {
  int cell = 0;
  std::vector<int> members;

  friend bool operator==(const Stencil&, const Stencil&) = default;
};

/// One stencil per cell, entry i-1 belongs to cell i.
using StencilMap = std::vector<Stencil>;

/// Per-cell polynomial degree, entry i-1 belongs to cell i.
using CpdMap = std::vector<int>;

/// Neighbor count N(d) = 2*ceil(d/2) for the cascade degrees {0, 1, 2, 5}.
int stencil_size(int degree);

/// ceil(d/2) cells on each side; near a boundary the stencil keeps its size by
/// shifting inward (one-sided variants).
Stencil centered_stencil(int i, int degree, int n_cells);

/// Greedy stencil growth guided by a CPD map: at each step the adjacent candidate
/// with the larger degree is agglomerated; ties go left when the left side holds
/// no more cells than the right. Hitting a boundary fills the remainder from the
/// other side. Result has exactly target_size members.
Stencil adaptive_stencil(int i, int n_cells, int target_size, const CpdMap& cpd);

/// The stencil_size(d_eff) members of s closest to cell i, ties broken toward the
/// side holding more of s (left when equal).
Stencil interface_substencil(const Stencil& s, int i, int d_eff);

StencilMap centered_map(int n_cells, int degree);
StencilMap adaptive_map(int n_cells, int target_size, const CpdMap& cpd);

/// (l, r) member counts left/right of the reference cell - the textual stencil code.
std::pair<int, int> side_counts(const Stencil& s);

}  // namespace mood1d

#endif
