#include "swan/dense.hpp"

#include <cmath>
#include <string>

namespace swan {

namespace {

// Below this many multiply-adds the OpenMP fork overhead dominates.
constexpr std::int64_t kParallelCutoff = 1 << 15;

std::string shape_str(const DenseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw ShapeError("DenseMatrix: " + std::to_string(values_.size()) + " values for " +
                     std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<double>& entries) {
  DenseMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

DenseMatrix DenseMatrix::random_uniform(std::size_t rows, std::size_t cols, double scale, Rng& rng) {
  DenseMatrix m(rows, cols);
  for (double& v : m.values_) v = uniform(rng, -scale, scale);
  return m;
}

bool DenseMatrix::all_finite() const {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (!same_shape(other)) throw ShapeError("add: " + shape_str(*this) + " vs " + shape_str(other));
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  if (!same_shape(other)) throw ShapeError("sub: " + shape_str(*this) + " vs " + shape_str(other));
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + shape_str(a) + " times " + shape_str(b));
  }
  const std::int64_t n = static_cast<std::int64_t>(a.rows());
  const std::int64_t k = static_cast<std::int64_t>(a.cols());
  const std::int64_t p = static_cast<std::int64_t>(b.cols());
  DenseMatrix out(a.rows(), b.cols());
  const double* ap = a.data();
  const double* bp = b.data();
  double* op = out.data();
  // Each output row is owned by one thread, so the accumulation order per
  // entry is fixed and results are identical at any thread count.
#pragma omp parallel for schedule(static) if (n * k * p > kParallelCutoff)
  for (std::int64_t i = 0; i < n; ++i) {
    double* orow = op + i * p;
    for (std::int64_t kk = 0; kk < k; ++kk) {
      const double aik = ap[i * k + kk];
      if (aik == 0.0) continue;
      const double* brow = bp + kk * p;
      for (std::int64_t j = 0; j < p; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b, std::size_t cap) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > cap || cols > cap) {
    throw CapacityError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds cap " + std::to_string(cap));
  }
  DenseMatrix out(rows, cols);
  const std::int64_t ar = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static) if (static_cast<std::int64_t>(rows* cols) > kParallelCutoff)
  for (std::int64_t i = 0; i < ar; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(static_cast<std::size_t>(i), j);
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          out(static_cast<std::size_t>(i) * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
        }
      }
    }
  }
  return out;
}

std::vector<double> vec(const DenseMatrix& a) {
  std::vector<double> v(a.size());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      v[c * a.rows() + r] = a(r, c);
    }
  }
  return v;
}

DenseMatrix unvec(const std::vector<double>& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) {
    throw ShapeError("unvec: " + std::to_string(v.size()) + " values for " + std::to_string(rows) +
                     "x" + std::to_string(cols));
  }
  DenseMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) {
      m(r, c) = v[c * rows + r];
    }
  }
  return m;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out = a;
  out += b;
  return out;
}

DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out = a;
  out -= b;
  return out;
}

DenseMatrix scaled(const DenseMatrix& a, double s) {
  DenseMatrix out = a;
  out *= s;
  return out;
}

DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b) {
  if (!a.same_shape(b)) throw ShapeError("hadamard: " + shape_str(a) + " vs " + shape_str(b));
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.values().size(); ++i) out.values()[i] *= b.values()[i];
  return out;
}

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (double v : a.values()) s += v * v;
  return std::sqrt(s);
}

double max_abs(const DenseMatrix& a) {
  double m = 0.0;
  for (double v : a.values()) m = std::max(m, std::fabs(v));
  return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) { return add(a, b); }
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) { return sub(a, b); }
DenseMatrix operator*(const DenseMatrix& a, double s) { return scaled(a, s); }
DenseMatrix operator*(double s, const DenseMatrix& a) { return scaled(a, s); }

namespace serial {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + shape_str(a) + " times " + shape_str(b));
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b, std::size_t cap) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > cap || cols > cap) {
    throw CapacityError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds cap " + std::to_string(cap));
  }
  DenseMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
      }
    }
  }
  return out;
}

}  // namespace serial

}  // namespace swan
