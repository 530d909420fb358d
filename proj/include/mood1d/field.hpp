#ifndef MOOD1D_FIELD_HPP_
#define MOOD1D_FIELD_HPP_

#include <array>
#include <cassert>
#include <span>
#include <vector>

namespace mood1d {

/// Small fixed-size state vector; scalar problems use component 0 only.
using State = std::array<double, 3>;

/// Per-cell mean values, n_components x n_cells, component-major storage.
class Field {
 public:
  Field() = default;
  Field(int n_components, int n_cells, double value = 0.0)
      : nc_(n_components), ni_(n_cells), v_(static_cast<std::size_t>(n_components) * n_cells, value) {}

  int components() const { return nc_; }
  int cells() const { return ni_; }

  double& at(int c, int i) {
    assert(c >= 0 && c < nc_ && i >= 1 && i <= ni_);
    return v_[static_cast<std::size_t>(c) * ni_ + (i - 1)];
  }
  double at(int c, int i) const {
    assert(c >= 0 && c < nc_ && i >= 1 && i <= ni_);
    return v_[static_cast<std::size_t>(c) * ni_ + (i - 1)];
  }

  /// Contiguous view of one component; entry i-1 holds cell i.
  std::span<const double> comp(int c) const {
    return {v_.data() + static_cast<std::size_t>(c) * ni_, static_cast<std::size_t>(ni_)};
  }
  std::span<double> comp(int c) {
    return {v_.data() + static_cast<std::size_t>(c) * ni_, static_cast<std::size_t>(ni_)};
  }

  State state(int i) const {
    State s{0.0, 0.0, 0.0};
    for (int c = 0; c < nc_; ++c) s[c] = at(c, i);
    return s;
  }
  void set_state(int i, const State& s) {
    for (int c = 0; c < nc_; ++c) at(c, i) = s[c];
  }

  std::span<const double> data() const { return v_; }
  std::span<double> data() { return v_; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  int nc_ = 0;
  int ni_ = 0;
  std::vector<double> v_;
};

}  // namespace mood1d

#endif
