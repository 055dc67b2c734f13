#include "hnpoly/filtration.hpp"

#include <algorithm>
#include <numeric>

namespace hnpoly {

namespace {

// Nonzero part of the reduced row echelon form: a canonical basis of the
// row space.
Mat row_basis(const Mat& m) {
  std::vector<std::size_t> pivots;
  Mat r = rref(m, &pivots);
  Mat out(pivots.size(), m.cols);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out.at(i, j) = r.at(i, j);
  return out;
}

Mat stack(const Mat& top, const Mat& bottom) {
  if (top.rows == 0) return bottom;
  if (bottom.rows == 0) return top;
  if (top.cols != bottom.cols) throw ValidationError("stack width mismatch");
  Mat s(top.rows + bottom.rows, top.cols);
  std::copy(top.a.begin(), top.a.end(), s.a.begin());
  std::copy(bottom.a.begin(), bottom.a.end(),
            s.a.begin() + static_cast<std::ptrdiff_t>(top.a.size()));
  return s;
}

bool is_zero(const std::vector<Rat>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace

FilteredSpace::FilteredSpace(std::size_t dim, std::vector<Mat> flag,
                             std::vector<Rat> jumps)
    : dim_(dim) {
  if (dim == 0) throw ValidationError("filtered space must have positive dimension");
  if (flag.size() != jumps.size() || flag.empty())
    throw ValidationError("flag and jump lists must be nonempty and equal length");
  std::vector<std::size_t> order(flag.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return jumps[a] > jumps[b]; });

  std::size_t prev_rank = 0;
  for (std::size_t idx : order) {
    Mat& m = flag[idx];
    if (m.rows > 0 && m.cols != dim)
      throw ValidationError("stage matrix width differs from the space dimension");
    if (m.rows == 0) m = Mat(0, dim);
    const std::size_t r = rank(m);
    if (r != m.rows) throw ValidationError("stage matrix has dependent rows");
    if (!jumps_.empty() && jumps[idx] == jumps_.back()) {
      // Equal jump values: the filtration at this value is the larger stage.
      if (rowspan_contained(m, flag_.back())) continue;
      if (!rowspan_contained(flag_.back(), m))
        throw ValidationError("flag stages are not nested");
      flag_.back() = m;
      stage_dims_.back() = r;
      prev_rank = r;
      continue;
    }
    if (!jumps_.empty() && !rowspan_contained(flag_.back(), m))
      throw ValidationError("flag stages are not nested");
    if (r == prev_rank) continue;  // redundant stage; the higher jump wins
    flag_.push_back(m);
    jumps_.push_back(jumps[idx]);
    stage_dims_.push_back(r);
    prev_rank = r;
  }
  if (stage_dims_.empty() || stage_dims_.back() != dim)
    throw ValidationError("flag does not exhaust the space");
}

LinearMap::LinearMap(Mat m, std::size_t src, std::size_t tgt)
    : matrix(std::move(m)), source_dim(src), target_dim(tgt) {
  if (matrix.rows != source_dim || matrix.cols != target_dim)
    throw ValidationError("linear map matrix shape mismatch");
}

LinearMap LinearMap::from_rows(const std::vector<std::vector<Rat>>& rows) {
  Mat m = Mat::from_rows(rows);
  return LinearMap(m, m.rows, m.cols);
}

bool LinearMap::injective() const { return rank(matrix) == source_dim; }
bool LinearMap::surjective() const { return rank(matrix) == target_dim; }

std::vector<Rat> LinearMap::apply(const std::vector<Rat>& x) const {
  return apply_row(x, matrix);
}

ExtendedRat index_of(const FilteredSpace& space, const std::vector<Rat>& v) {
  if (v.size() != space.dim()) throw ValidationError("vector length differs from dimension");
  if (is_zero(v)) return ExtendedRat::pos_inf();
  for (std::size_t i = 0; i < space.flag().size(); ++i)
    if (in_rowspan(space.flag()[i], v)) return ExtendedRat::finite(space.jumps()[i]);
  throw ValidationError("exhaustiveness violated");  // unreachable on valid flags
}

FilteredSpace inverse_image(const FilteredSpace& target, const LinearMap& f) {
  if (f.target_dim != target.dim())
    throw ValidationError("inverse image: map target dimension mismatch");
  if (!f.injective()) throw ValidationError("inverse image requires an injective map");
  std::vector<Mat> stages;
  std::vector<Rat> jumps;
  std::size_t prev_rank = 0;
  for (std::size_t i = 0; i < target.flag().size(); ++i) {
    // { x : x*M in rowspan(B) } is the projection of the left kernel of
    // [M; B] onto the first source_dim coordinates.
    Mat ker = left_kernel(stack(f.matrix, target.flag()[i]));
    Mat proj(ker.rows, f.source_dim);
    for (std::size_t r = 0; r < ker.rows; ++r)
      for (std::size_t c = 0; c < f.source_dim; ++c) proj.at(r, c) = ker.at(r, c);
    Mat basis = row_basis(proj);
    if (basis.rows == prev_rank) continue;
    prev_rank = basis.rows;
    stages.push_back(std::move(basis));
    jumps.push_back(target.jumps()[i]);
  }
  return FilteredSpace(f.source_dim, std::move(stages), std::move(jumps));
}

FilteredSpace strong_direct_image(const FilteredSpace& source, const LinearMap& p) {
  if (p.source_dim != source.dim())
    throw ValidationError("direct image: map source dimension mismatch");
  if (!p.surjective()) throw ValidationError("strong direct image requires a surjective map");
  std::vector<Mat> stages;
  std::vector<Rat> jumps;
  std::size_t prev_rank = 0;
  for (std::size_t i = 0; i < source.flag().size(); ++i) {
    Mat image = row_basis(mul(source.flag()[i], p.matrix));
    if (image.rows == prev_rank) continue;
    prev_rank = image.rows;
    stages.push_back(std::move(image));
    jumps.push_back(source.jumps()[i]);
  }
  return FilteredSpace(p.target_dim, std::move(stages), std::move(jumps));
}

MaximalBase maximal_base(const FilteredSpace& space, const Mat& seed) {
  const std::size_t r = space.dim();
  if (seed.rows != r || seed.cols != r || rank(seed) != r)
    throw ValidationError("maximal base seed must be an invertible square matrix");
  MaximalBase out{Mat(r, r), Mat::identity(r)};
  for (std::size_t i = 0; i < r; ++i) {
    const std::vector<Rat> v = seed.row(i);
    Mat tail(r - i - 1, r);
    for (std::size_t t = i + 1; t < r; ++t)
      for (std::size_t c = 0; c < r; ++c) tail.at(t - i - 1, c) = seed.at(t, c);
    // Smallest stage meeting v + span(tail): its jump is the best index
    // attainable by adding multiples of later seed rows to v.
    for (std::size_t k = 0; k < space.flag().size(); ++k) {
      Mat combined = stack(space.flag()[k], tail);
      if (!in_rowspan(combined, v)) continue;
      auto coeffs = solve_left(combined, v);
      if (!coeffs) throw ValidationError("inconsistent solve in maximal_base");
      std::vector<Rat> b = v;
      for (std::size_t t = 0; t < tail.rows; ++t) {
        const Rat& beta = (*coeffs)[space.flag()[k].rows + t];
        if (beta == 0) continue;
        for (std::size_t c = 0; c < r; ++c) b[c] -= beta * tail.at(t, c);
        out.change.at(i, i + 1 + t) = -beta;
      }
      for (std::size_t c = 0; c < r; ++c) out.basis.at(i, c) = b[c];
      break;
    }
  }
  return out;
}

DiracMeasure associated_measure(const FilteredSpace& space) {
  std::vector<DiracMeasure::Atom> atoms;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < space.jumps().size(); ++i) {
    const std::size_t d = space.stage_dims()[i];
    atoms.emplace_back(space.jumps()[i],
                       rat(static_cast<long>(d - prev), static_cast<long>(space.dim())));
    prev = d;
  }
  return DiracMeasure(std::move(atoms));
}

DiracMeasure basis_measure(const FilteredSpace& space, const Mat& basis) {
  if (basis.rows != space.dim() || basis.cols != space.dim() ||
      rank(basis) != space.dim())
    throw ValidationError("basis_measure requires an invertible basis matrix");
  std::vector<DiracMeasure::Atom> atoms;
  const Rat w = rat(1, static_cast<long>(space.dim()));
  for (std::size_t i = 0; i < basis.rows; ++i)
    atoms.emplace_back(index_of(space, basis.row(i)).value(), w);
  return DiracMeasure(std::move(atoms));
}

ExactSequenceMeasures exact_sequence_measures(const LinearMap& sub,
                                              const LinearMap& quot,
                                              const FilteredSpace& mid) {
  if (sub.target_dim != mid.dim() || quot.source_dim != mid.dim())
    throw ValidationError("exact sequence: dimensions do not match the middle space");
  if (sub.source_dim == 0 || quot.target_dim == 0)
    throw ValidationError("exact sequence: end terms must be nonzero");
  if (sub.source_dim + quot.target_dim != mid.dim())
    throw ValidationError("exact sequence: ranks do not add up");
  if (!sub.injective()) throw ValidationError("exact sequence: sub map not injective");
  if (!quot.surjective()) throw ValidationError("exact sequence: quotient map not surjective");
  const Mat comp = mul(sub.matrix, quot.matrix);
  for (const Rat& x : comp.a)
    if (x != 0) throw ValidationError("exact sequence: composition is not zero");

  ExactSequenceMeasures out;
  out.sub = associated_measure(inverse_image(mid, sub));
  out.mid = associated_measure(mid);
  out.quot = associated_measure(strong_direct_image(mid, quot));
  const Rat wsub = rat(static_cast<long>(sub.source_dim), static_cast<long>(mid.dim()));
  const Rat wquot = rat(static_cast<long>(quot.target_dim), static_cast<long>(mid.dim()));
  out.identity_holds = combine({{wsub, out.sub}, {wquot, out.quot}}) == out.mid;
  return out;
}

}  // namespace hnpoly
