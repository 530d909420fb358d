#include "mood1d/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mood1d {

int Mesh::cell_containing(double x) const {
  int i = static_cast<int>(std::floor((x - x_left) / h)) + 1;
  return std::clamp(i, 1, n_cells);
}

Mesh build_mesh(double x_left, double x_right, int n_cells) {
  if (n_cells < 1) throw std::invalid_argument("build_mesh: n_cells must be >= 1");
  if (!(x_left < x_right)) throw std::invalid_argument("build_mesh: requires x_left < x_right");
  Mesh m;
  m.x_left = x_left;
  m.x_right = x_right;
  m.n_cells = n_cells;
  m.h = (x_right - x_left) / n_cells;
  return m;
}

namespace {
// Nodes/weights on [-1, 1].
constexpr double kGL5Nodes[5] = {
    -0.9061798459386639928, -0.5384693101056830910, 0.0,
    0.5384693101056830910, 0.9061798459386639928};
constexpr double kGL5Weights[5] = {
    0.2369268850561890875, 0.4786286704993664680, 0.5688888888888888889,
    0.4786286704993664680, 0.2369268850561890875};
}  // namespace

double gauss_legendre5(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int q = 0; q < 5; ++q) acc += kGL5Weights[q] * f(mid + half * kGL5Nodes[q]);
  return acc * half;
}

double cell_mean(const std::function<double(double)>& f, const Mesh& mesh, int i,
                 std::span<const double> breakpoints) {
  const double a = mesh.interface(i - 1);
  const double b = mesh.interface(i);
  std::vector<double> cuts;
  cuts.push_back(a);
  for (double bp : breakpoints)
    if (bp > a && bp < b) cuts.push_back(bp);
  cuts.push_back(b);
  double integral = 0.0;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s)
    integral += gauss_legendre5(f, cuts[s], cuts[s + 1]);
  return integral / mesh.h;
}

}  // namespace mood1d
