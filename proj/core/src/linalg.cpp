#include "hnpoly/linalg.hpp"

namespace hnpoly {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return Mat();
  Mat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols)
      throw ValidationError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rat> Mat::row(std::size_t i) const {
  return std::vector<Rat>(a.begin() + static_cast<std::ptrdiff_t>(i * cols),
                          a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
}

Mat transpose(const Mat& m) {
  Mat t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Mat mul(const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw ValidationError("matrix product shape mismatch");
  Mat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Mat rref(Mat m, std::vector<std::size_t>* pivots) {
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols && lead < m.rows; ++col) {
    std::size_t piv = lead;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    const Rat inv = Rat(1) / m.at(lead, col);
    for (std::size_t j = col; j < m.cols; ++j) m.at(lead, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == lead || m.at(i, col) == 0) continue;
      const Rat f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    if (pivots) pivots->push_back(col);
    ++lead;
  }
  return m;
}

std::size_t rank(const Mat& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

bool in_rowspan(const Mat& A, const std::vector<Rat>& v) {
  if (v.size() != A.cols) throw ValidationError("vector length mismatch");
  Mat aug(A.rows + 1, A.cols);
  aug.a.assign(A.a.begin(), A.a.end());
  aug.a.insert(aug.a.end(), v.begin(), v.end());
  return rank(A) == rank(aug);
}

bool rowspan_contained(const Mat& A, const Mat& B) {
  if (A.rows == 0) return true;
  if (A.cols != B.cols) throw ValidationError("matrix width mismatch");
  Mat aug(A.rows + B.rows, A.cols);
  aug.a.assign(B.a.begin(), B.a.end());
  aug.a.insert(aug.a.end(), A.a.begin(), A.a.end());
  return rank(B) == rank(aug);
}

std::optional<std::vector<Rat>> solve_left(const Mat& A, const std::vector<Rat>& b) {
  if (b.size() != A.cols) throw ValidationError("solve_left shape mismatch");
  // x*A = b  <=>  A^T x^T = b^T; eliminate on [A^T | b^T].
  Mat aug(A.cols, A.rows + 1);
  for (std::size_t i = 0; i < A.cols; ++i) {
    for (std::size_t j = 0; j < A.rows; ++j) aug.at(i, j) = A.at(j, i);
    aug.at(i, A.rows) = b[i];
  }
  std::vector<std::size_t> pivots;
  Mat r = rref(std::move(aug), &pivots);
  for (std::size_t p : pivots)
    if (p == A.rows) return std::nullopt;  // pivot in the augmented column
  std::vector<Rat> x(A.rows, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, A.rows);
  return x;
}

Mat left_kernel(const Mat& A) {
  // Kernel of A^T as a column-vector problem, returned as rows.
  Mat t = transpose(A);  // rows: A.cols, cols: A.rows
  std::vector<std::size_t> pivots;
  Mat r = rref(t, &pivots);
  std::vector<bool> is_pivot(A.rows, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < A.rows; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(A.rows, Rat(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r.at(i, f);
    basis.push_back(std::move(x));
  }
  if (basis.empty()) return Mat(0, A.rows);
  return Mat::from_rows(basis);
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  const std::size_t n = m.rows;
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  Mat r = rref(std::move(aug), &pivots);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

std::vector<Rat> apply_row(const std::vector<Rat>& x, const Mat& M) {
  if (x.size() != M.rows) throw ValidationError("apply_row shape mismatch");
  std::vector<Rat> y(M.cols, Rat(0));
  for (std::size_t i = 0; i < M.rows; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < M.cols; ++j) y[j] += x[i] * M.at(i, j);
  }
  return y;
}

}  // namespace hnpoly
