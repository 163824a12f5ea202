#pragma once
// Reduced simplicial homology dimensions over a field, from boundary-matrix
// ranks. The augmentation is explicit: level 0 is the empty face, so
// H~_{-1} comes out of the same formula as everything else.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "regsurf/complex.hpp"
#include "regsurf/linalg.hpp"

namespace regsurf {

namespace detail {

inline int face_index(const std::vector<Bits128>& level, Bits128 f) {
  auto it = std::lower_bound(level.begin(), level.end(), f, Bits128::value_less);
  return static_cast<int>(it - level.begin());
}

/// Boundary from faces with s vertices (columns) to faces with s-1 vertices
/// (rows); entry (-1)^k for dropping the k-th smallest vertex.
inline IntMatrix boundary_between(const std::vector<Bits128>& rows,
                                  const std::vector<Bits128>& cols) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols; ++c) {
    const Bits128& f = cols[c];
    int k = 0;
    for (int v = f.lowest(); v >= 0; v = f.next(v + 1), ++k) {
      int r = face_index(rows, f.and_not(Bits128::single(v)));
      m.at(r, c) = (k % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

/// dims[k] = dim H~_{k-1}. `levels` lists faces by cardinality with
/// levels[0] = { empty face }; pass an empty vector for the void complex.
inline std::vector<long long> reduced_homology_from_levels(
    const std::vector<std::vector<Bits128>>& levels, const FieldSpec& f,
    RankStats* stats = nullptr) {
  if (levels.empty()) return {0};  // void complex
  int top = static_cast<int>(levels.size());
  std::vector<int> rk(top + 1, 0);  // rk[s] = rank of boundary from level s to s-1
  for (int s = 1; s < top; ++s)
    rk[s] = rank(boundary_between(levels[s - 1], levels[s]), f, stats);
  std::vector<long long> dims(top, 0);
  for (int s = 0; s < top; ++s)
    dims[s] = static_cast<long long>(levels[s].size()) - rk[s] - rk[s + 1];
  // Euler-Poincare: alternating sums of homology dims and face counts agree.
  long long hsum = 0, fsum = 0;
  for (int s = 0; s < top; ++s) {
    long long sign = (s % 2 == 0) ? -1 : 1;  // (-1)^{s-1}
    hsum += sign * dims[s];
    fsum += sign * static_cast<long long>(levels[s].size());
  }
  if (hsum != fsum) throw std::logic_error("reduced homology: Euler-Poincare check failed");
  return dims;
}

}  // namespace detail

/// Reduced Betti numbers of a complex; h(t) = dim H~_t, defined for all t
/// (zero outside the stored range). The void complex has all zeros; the
/// empty complex has h(-1) = 1.
struct ReducedBetti {
  std::vector<long long> dims;  // dims[k] = dim H~_{k-1}

  long long h(int t) const {
    int k = t + 1;
    if (k < 0 || k >= static_cast<int>(dims.size())) return 0;
    return dims[k];
  }

  int top_nonzero() const {  // largest t with h(t) != 0, or -2
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k)
      if (dims[k] != 0) return k - 1;
    return -2;
  }
};

/// Rows are (dim-1)-faces, columns are dim-faces; out-of-range dimensions
/// give empty matrices. boundary_matrix(d, 0) is the augmentation.
inline IntMatrix boundary_matrix(const SimplicialComplex& d, int dim) {
  auto level = [&](int s) -> std::vector<Bits128> {
    if (s < 0 || s >= static_cast<int>(d.faces_by_size.size())) return {};
    return d.faces_by_size[s];
  };
  std::vector<Bits128> rows = level(dim), cols = level(dim + 1);
  return detail::boundary_between(rows, cols);
}

inline ReducedBetti reduced_betti(const SimplicialComplex& d, const FieldSpec& f,
                                  RankStats* stats = nullptr) {
  return {detail::reduced_homology_from_levels(d.faces_by_size, f, stats)};
}

}  // namespace regsurf
