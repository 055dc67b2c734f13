#pragma once

#include <cstddef>
#include <vector>

#include "hnpoly/linalg.hpp"
#include "hnpoly/measure.hpp"

namespace hnpoly {

// A separated, exhaustive, left-continuous decreasing filtration of Q^r,
// stored as its flag: stage matrices whose row spaces are strictly nested
// subspaces V(1) c ... c V(n) = Q^r, with strictly decreasing jump values
// a_1 > ... > a_n. The filtration equals V(i) on the interval ]a_{i+1}, a_i].
class FilteredSpace {
public:
  // Canonicalizes: stages sorted by jump descending, equal jumps merged into
  // the larger stage, stages that do not enlarge the row space dropped.
  FilteredSpace(std::size_t dim, std::vector<Mat> flag, std::vector<Rat> jumps);

  std::size_t dim() const { return dim_; }
  const std::vector<Mat>& flag() const { return flag_; }
  const std::vector<Rat>& jumps() const { return jumps_; }
  // Stage dimensions d_1 < ... < d_n = dim.
  const std::vector<std::size_t>& stage_dims() const { return stage_dims_; }

private:
  std::size_t dim_;
  std::vector<Mat> flag_;
  std::vector<Rat> jumps_;
  std::vector<std::size_t> stage_dims_;
};

// Matrix rows are the images of the source basis vectors; the map sends a
// row vector x to x*matrix.
struct LinearMap {
  Mat matrix;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;

  LinearMap(Mat m, std::size_t src, std::size_t tgt);
  static LinearMap from_rows(const std::vector<std::vector<Rat>>& rows);

  bool injective() const;   // matrix rows are linearly independent
  bool surjective() const;  // row space is the whole target
  std::vector<Rat> apply(const std::vector<Rat>& x) const;
};

// sup{ a_i : v in V(i) stage for value a_i }; +inf exactly for v = 0.
ExtendedRat index_of(const FilteredSpace& space, const std::vector<Rat>& v);

// Pullback filtration (f^*G)_r = f^{-1}(G_r W) along an injective map.
FilteredSpace inverse_image(const FilteredSpace& target, const LinearMap& f);

// Image filtration along a surjective map (left-continuous closure of the
// stage-wise image; for finite flags the stage images already realize it).
FilteredSpace strong_direct_image(const FilteredSpace& source, const LinearMap& p);

struct MaximalBase {
  Mat basis;   // rows: the produced basis vectors
  Mat change;  // upper-triangular, unit diagonal; basis = change * seed
};

// Upper-unitriangular change of the seed basis such that for every jump a_i
// the number of basis vectors of index >= a_i equals the stage dimension.
// Each row independently maximizes its index inside row_i + span(later rows).
MaximalBase maximal_base(const FilteredSpace& space, const Mat& seed);

// (1/r) * sum of Dirac masses at the stage jumps, weighted by stage dimension
// increments.
DiracMeasure associated_measure(const FilteredSpace& space);

// (1/r) * sum of Dirac masses at the indices of the basis rows.
DiracMeasure basis_measure(const FilteredSpace& space, const Mat& basis);

struct ExactSequenceMeasures {
  DiracMeasure sub;
  DiracMeasure mid;
  DiracMeasure quot;
  bool identity_holds = false;
};

// For a short exact sequence 0 -> V' -> V -> V'' -> 0 (sub injective, quot
// surjective, quot o sub = 0, dims adding up): measures of the induced
// filtrations plus the exact convex-combination identity
// nu_V = (r'/r) nu_V' + (r''/r) nu_V''.
ExactSequenceMeasures exact_sequence_measures(const LinearMap& sub,
                                              const LinearMap& quot,
                                              const FilteredSpace& mid);

}  // namespace hnpoly
