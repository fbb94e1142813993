#pragma once

#include <cstddef>
#include <vector>

#include "swan/dense.hpp"

namespace swan {

/// All eigenvalues of a real matrix, paired by index. Complex eigenvalues of
/// real matrices appear in conjugate pairs.
struct EigenSpectrum {
  std::vector<double> real_parts;
  std::vector<double> imag_parts;
};

inline constexpr std::size_t kDefaultEigenCap = 2000;

/// Eigenvalues of a general real square matrix via Householder reduction to
/// Hessenberg form followed by Francis double-shift QR iteration.
EigenSpectrum eigenvalues(const DenseMatrix& a, std::size_t max_dim = kDefaultEigenCap);

double max_abs_real(const EigenSpectrum& s);
double max_abs_imag(const EigenSpectrum& s);
double max_real(const EigenSpectrum& s);
double min_real(const EigenSpectrum& s);

/// e^{t a} by scaling-and-squaring with a truncated Taylor series.
DenseMatrix matrix_exponential(const DenseMatrix& a, double t, std::size_t max_dim = kDefaultEigenCap);

/// Largest singular value, computed as sqrt(lambda_max(A^T A)).
double spectral_norm(const DenseMatrix& a);

}  // namespace swan
