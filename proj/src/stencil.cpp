#include "mood1d/stencil.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace mood1d {

namespace {

void check_result(const Stencil& s, int n_cells) {
#ifndef NDEBUG
  assert(std::is_sorted(s.members.begin(), s.members.end()));
  for (std::size_t k = 0; k < s.members.size(); ++k) {
    int j = s.members[k];
    assert(j >= 1 && j <= n_cells && j != s.cell);
    // contiguity of members + reference cell
    if (k + 1 < s.members.size()) {
      int next = s.members[k + 1];
      assert(next == j + 1 || (next == j + 2 && j + 1 == s.cell));
    }
  }
#else
  (void)s;
  (void)n_cells;
#endif
}

}  // namespace

int stencil_size(int degree) {
  switch (degree) {
    case 0: return 0;
    case 1: return 2;
    case 2: return 2;
    case 5: return 6;
    default:
      throw std::invalid_argument("stencil_size: degree " + std::to_string(degree) +
                                  " is not in the cascade {0,1,2,5}");
  }
}

Stencil centered_stencil(int i, int degree, int n_cells) {
  const int n = stencil_size(degree);
  if (n > n_cells - 1)
    throw std::invalid_argument("centered_stencil: mesh too small for requested degree");
  int want = (degree + 1) / 2;
  int l = std::min(want, i - 1);
  int r = n - l;
  if (r > n_cells - i) {
    r = n_cells - i;
    l = n - r;
  }
  Stencil s;
  s.cell = i;
  s.members.reserve(n);
  for (int j = i - l; j <= i + r; ++j)
    if (j != i) s.members.push_back(j);
  check_result(s, n_cells);
  return s;
}

Stencil adaptive_stencil(int i, int n_cells, int target_size, const CpdMap& cpd) {
  if (target_size > n_cells - 1)
    throw std::invalid_argument("adaptive_stencil: mesh too small for requested size");
  Stencil s;
  s.cell = i;
  s.members.reserve(target_size);
  int il = i - 1, cl = 0;
  int ir = i + 1, cr = 0;
  int taken = 0;
  while (taken < target_size) {
    if (il == 0) {
      while (taken < target_size) s.members.push_back(ir++), ++taken;
      break;
    }
    if (ir == n_cells + 1) {
      while (taken < target_size) s.members.push_back(il--), ++taken;
      break;
    }
    const int dl = cpd[il - 1];
    const int dr = cpd[ir - 1];
    if (dl > dr || (dl == dr && cl <= cr)) {
      s.members.push_back(il--);
      ++cl;
    } else {
      s.members.push_back(ir++);
      ++cr;
    }
    ++taken;
  }
  std::sort(s.members.begin(), s.members.end());
  check_result(s, n_cells);
  return s;
}

Stencil interface_substencil(const Stencil& s, int i, int d_eff) {
  const int n = stencil_size(d_eff);
  if (n > static_cast<int>(s.members.size()))
    throw std::invalid_argument("interface_substencil: stencil smaller than N(d_eff)");
  if (n == static_cast<int>(s.members.size())) return s;
  auto [l, r] = side_counts(s);
  const bool prefer_left = l >= r;
  std::vector<int> order = s.members;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int da = std::abs(a - i), db = std::abs(b - i);
    if (da != db) return da < db;
    return prefer_left ? a < b : a > b;
  });
  Stencil sub;
  sub.cell = i;
  sub.members.assign(order.begin(), order.begin() + n);
  std::sort(sub.members.begin(), sub.members.end());
  return sub;
}

StencilMap centered_map(int n_cells, int degree) {
  StencilMap m;
  m.reserve(n_cells);
  for (int i = 1; i <= n_cells; ++i) m.push_back(centered_stencil(i, degree, n_cells));
  return m;
}

StencilMap adaptive_map(int n_cells, int target_size, const CpdMap& cpd) {
  StencilMap m;
  m.reserve(n_cells);
  for (int i = 1; i <= n_cells; ++i) m.push_back(adaptive_stencil(i, n_cells, target_size, cpd));
  return m;
}

std::pair<int, int> side_counts(const Stencil& s) {
  int l = 0, r = 0;
  for (int j : s.members) (j < s.cell ? l : r)++;
  return {l, r};
}

}  // namespace mood1d
