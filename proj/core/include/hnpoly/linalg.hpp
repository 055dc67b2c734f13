#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hnpoly/rational.hpp"

namespace hnpoly {

// Dense matrix over Q, row-major. Row vectors act on the left throughout the
// library: a linear map with matrix M sends the row vector x to x*M.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<std::vector<Rat>>& rows);

  std::vector<Rat> row(std::size_t i) const;
  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat transpose(const Mat& m);
Mat mul(const Mat& a, const Mat& b);

// Reduced row echelon form; pivot column indices appended to *pivots if given.
Mat rref(Mat m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Mat& m);

// Is v in the row space of A?
bool in_rowspan(const Mat& A, const std::vector<Rat>& v);

// Is rowspan(A) contained in rowspan(B)?
bool rowspan_contained(const Mat& A, const Mat& B);

// Some x with x*A = b, if the system is consistent. x has size A.rows.
std::optional<std::vector<Rat>> solve_left(const Mat& A, const std::vector<Rat>& b);

// Rows spanning { x : x*A = 0 }.
Mat left_kernel(const Mat& A);

std::optional<Mat> inverse(const Mat& m);

// x*M for a row vector x.
std::vector<Rat> apply_row(const std::vector<Rat>& x, const Mat& M);

}  // namespace hnpoly
