#include "lift/matrix.hpp"

#include <cmath>
#include <string>

#include "lift/errors.hpp"

namespace lift {

namespace {

[[noreturn]] void shape_fail(const char* op, const Matrix& a, const Matrix& b) {
  throw ShapeError(std::string(op) + ": incompatible shapes " +
                   std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                   " and " + std::to_string(b.rows) + "x" +
                   std::to_string(b.cols));
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) shape_fail("matmul", a, b);
  Matrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      double av = a(i, k);
      if (av == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += av * b(k, j);
    }
  return out;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) shape_fail("matmul_tn", a, b);
  Matrix out(a.cols, b.cols);
  for (std::size_t k = 0; k < a.rows; ++k)
    for (std::size_t i = 0; i < a.cols; ++i) {
      double av = a(k, i);
      if (av == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += av * b(k, j);
    }
  return out;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) shape_fail("matmul_nt", a, b);
  Matrix out(a.rows, b.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.rows; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols; ++k) s += a(i, k) * b(j, k);
      out(i, j) = s;
    }
  return out;
}

bool all_finite(const Matrix& m) {
  for (double v : m.data)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace lift
