#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "swan/errors.hpp"
#include "swan/rng.hpp"

namespace swan {

/// Dense real matrix, 64-bit entries, row-major storage.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), values_(rows * cols, fill) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(const std::vector<double>& entries);
  /// Entries i.i.d. uniform(-scale, scale).
  static DenseMatrix random_uniform(std::size_t rows, std::size_t cols, double scale, Rng& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }
  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }

  bool all_finite() const;
  bool same_shape(const DenseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(double s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

inline constexpr std::size_t kDefaultKronCap = 4096;

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
/// Kronecker product; output dimensions above `cap` raise CapacityError.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b, std::size_t cap = kDefaultKronCap);
/// Column-stacking vectorization: vec(X)[c*rows + r] = X(r, c).
std::vector<double> vec(const DenseMatrix& a);
/// Inverse of vec for a known shape.
DenseMatrix unvec(const std::vector<double>& v, std::size_t rows, std::size_t cols);

DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scaled(const DenseMatrix& a, double s);
/// a*b elementwise.
DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b);

double frobenius_norm(const DenseMatrix& a);
double max_abs(const DenseMatrix& a);
double dot(const std::vector<double>& a, const std::vector<double>& b);

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(const DenseMatrix& a, double s);
DenseMatrix operator*(double s, const DenseMatrix& a);

namespace serial {
// Reference kernels: single-threaded, textbook loop order. Kept for tests and
// for the kernel benchmark; results must match the parallel kernels bit for bit.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b, std::size_t cap = kDefaultKronCap);
}  // namespace serial

}  // namespace swan
