#include "swan/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace swan {

namespace {

// Householder similarity reduction to upper Hessenberg form, after the Algol
// procedure orthes (Martin/Wilkinson) as carried into EISPACK and JAMA.
// Transformations are not accumulated; only eigenvalues are wanted.
void reduce_to_hessenberg(DenseMatrix& h) {
  const int n = static_cast<int>(h.rows());
  const int high = n - 1;
  std::vector<double> ort(static_cast<std::size_t>(n), 0.0);

  for (int m = 1; m <= high - 1; ++m) {
    double scale = 0.0;
    for (int i = m; i <= high; ++i) scale += std::fabs(h(i, m - 1));
    if (scale == 0.0) continue;

    double hh = 0.0;
    for (int i = high; i >= m; --i) {
      ort[i] = h(i, m - 1) / scale;
      hh += ort[i] * ort[i];
    }
    double g = std::sqrt(hh);
    if (ort[m] > 0) g = -g;
    hh -= ort[m] * g;
    ort[m] -= g;

    // H <- (I - u u^T / hh) H (I - u u^T / hh)
    for (int j = m; j < n; ++j) {
      double f = 0.0;
      for (int i = high; i >= m; --i) f += ort[i] * h(i, j);
      f /= hh;
      for (int i = m; i <= high; ++i) h(i, j) -= f * ort[i];
    }
    for (int i = 0; i <= high; ++i) {
      double f = 0.0;
      for (int j = high; j >= m; --j) f += ort[j] * h(i, j);
      f /= hh;
      for (int j = m; j <= high; ++j) h(i, j) -= f * ort[j];
    }
    h(m, m - 1) = scale * g;
  }
}

// Francis double-shift QR on an upper Hessenberg matrix, eigenvalues only.
// Follows the Algol procedure hqr2 (Martin/Wilkinson) and its EISPACK/JAMA
// descendants, with Schur-vector accumulation stripped out.
void hessenberg_qr(DenseMatrix& h, std::vector<double>& re, std::vector<double>& im) {
  const int nn = static_cast<int>(h.rows());
  int n = nn - 1;
  const double eps = std::ldexp(1.0, -52);
  double exshift = 0.0;
  double p = 0, q = 0, r = 0, s = 0, z = 0, w, x, y;

  double norm = 0.0;
  for (int i = 0; i < nn; ++i) {
    for (int j = std::max(i - 1, 0); j < nn; ++j) norm += std::fabs(h(i, j));
  }

  int iter = 0;
  long total_iters = 0;
  while (n >= 0) {
    // Look for a single small sub-diagonal element.
    int l = n;
    while (l > 0) {
      s = std::fabs(h(l - 1, l - 1)) + std::fabs(h(l, l));
      if (s == 0.0) s = norm;
      if (std::fabs(h(l, l - 1)) < eps * s) break;
      --l;
    }

    if (l == n) {
      // One root found.
      re[n] = h(n, n) + exshift;
      im[n] = 0.0;
      --n;
      iter = 0;
    } else if (l == n - 1) {
      // Two roots found.
      w = h(n, n - 1) * h(n - 1, n);
      p = (h(n - 1, n - 1) - h(n, n)) / 2.0;
      q = p * p + w;
      z = std::sqrt(std::fabs(q));
      x = h(n, n) + exshift;
      if (q >= 0) {
        z = (p >= 0) ? (p + z) : (p - z);
        re[n - 1] = x + z;
        re[n] = (z != 0.0) ? (x - w / z) : re[n - 1];
        im[n - 1] = 0.0;
        im[n] = 0.0;
      } else {
        re[n - 1] = x + p;
        re[n] = x + p;
        im[n - 1] = z;
        im[n] = -z;
      }
      n -= 2;
      iter = 0;
    } else {
      // No convergence yet; form shift.
      x = h(n, n);
      y = 0.0;
      w = 0.0;
      if (l < n) {
        y = h(n - 1, n - 1);
        w = h(n, n - 1) * h(n - 1, n);
      }

      if (iter == 10) {
        // Wilkinson's exceptional shift.
        exshift += x;
        for (int i = 0; i <= n; ++i) h(i, i) -= x;
        s = std::fabs(h(n, n - 1)) + std::fabs(h(n - 1, n - 2));
        x = y = 0.75 * s;
        w = -0.4375 * s * s;
      }
      if (iter == 30) {
        s = (y - x) / 2.0;
        s = s * s + w;
        if (s > 0) {
          s = std::sqrt(s);
          if (y < x) s = -s;
          s = x - w / ((y - x) / 2.0 + s);
          for (int i = 0; i <= n; ++i) h(i, i) -= s;
          exshift += s;
          x = y = w = 0.964;
        }
      }

      ++iter;
      ++total_iters;
      if (iter > 50) {
        throw NumericError("eigenvalues: QR iteration failed to converge after " +
                           std::to_string(total_iters) + " total iterations");
      }

      // Look for two consecutive small sub-diagonal elements.
      int m = n - 2;
      while (m >= l) {
        z = h(m, m);
        r = x - z;
        s = y - z;
        p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
        q = h(m + 1, m + 1) - z - r - s;
        r = h(m + 2, m + 1);
        s = std::fabs(p) + std::fabs(q) + std::fabs(r);
        p /= s;
        q /= s;
        r /= s;
        if (m == l) break;
        if (std::fabs(h(m, m - 1)) * (std::fabs(q) + std::fabs(r)) <
            eps * (std::fabs(p) * (std::fabs(h(m - 1, m - 1)) + std::fabs(z) +
                                   std::fabs(h(m + 1, m + 1))))) {
          break;
        }
        --m;
      }
      for (int i = m + 2; i <= n; ++i) {
        h(i, i - 2) = 0.0;
        if (i > m + 2) h(i, i - 3) = 0.0;
      }

      // Double QR step on rows l..n and columns m..n.
      for (int k = m; k <= n - 1; ++k) {
        const bool notlast = (k != n - 1);
        if (k != m) {
          p = h(k, k - 1);
          q = h(k + 1, k - 1);
          r = notlast ? h(k + 2, k - 1) : 0.0;
          x = std::fabs(p) + std::fabs(q) + std::fabs(r);
          if (x != 0.0) {
            p /= x;
            q /= x;
            r /= x;
          }
        }
        if (x == 0.0) break;
        s = std::sqrt(p * p + q * q + r * r);
        if (p < 0) s = -s;
        if (s == 0.0) continue;

        if (k != m) {
          h(k, k - 1) = -s * x;
        } else if (l != m) {
          h(k, k - 1) = -h(k, k - 1);
        }
        p += s;
        x = p / s;
        y = q / s;
        z = r / s;
        q /= p;
        r /= p;

        for (int j = k; j < nn; ++j) {
          p = h(k, j) + q * h(k + 1, j);
          if (notlast) {
            p += r * h(k + 2, j);
            h(k + 2, j) -= p * z;
          }
          h(k, j) -= p * x;
          h(k + 1, j) -= p * y;
        }
        for (int i = 0; i <= std::min(n, k + 3); ++i) {
          p = x * h(i, k) + y * h(i, k + 1);
          if (notlast) {
            p += z * h(i, k + 2);
            h(i, k + 2) -= p * r;
          }
          h(i, k) -= p;
          h(i, k + 1) -= p * q;
        }
      }
    }
  }
}

}  // namespace

EigenSpectrum eigenvalues(const DenseMatrix& a, std::size_t max_dim) {
  if (a.rows() != a.cols()) {
    throw ShapeError("eigenvalues: matrix is " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()));
  }
  if (a.rows() > max_dim) {
    throw CapacityError("eigenvalues: dimension " + std::to_string(a.rows()) + " exceeds cap " +
                        std::to_string(max_dim));
  }
  if (!a.all_finite()) throw NumericError("eigenvalues: non-finite input");

  EigenSpectrum spec;
  const std::size_t n = a.rows();
  spec.real_parts.assign(n, 0.0);
  spec.imag_parts.assign(n, 0.0);
  if (n == 0) return spec;
  if (n == 1) {
    spec.real_parts[0] = a(0, 0);
    return spec;
  }

  DenseMatrix h = a;
  reduce_to_hessenberg(h);
  hessenberg_qr(h, spec.real_parts, spec.imag_parts);
  return spec;
}

double max_abs_real(const EigenSpectrum& s) {
  double m = 0.0;
  for (double v : s.real_parts) m = std::max(m, std::fabs(v));
  return m;
}

double max_abs_imag(const EigenSpectrum& s) {
  double m = 0.0;
  for (double v : s.imag_parts) m = std::max(m, std::fabs(v));
  return m;
}

double max_real(const EigenSpectrum& s) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : s.real_parts) m = std::max(m, v);
  return m;
}

double min_real(const EigenSpectrum& s) {
  double m = std::numeric_limits<double>::infinity();
  for (double v : s.real_parts) m = std::min(m, v);
  return m;
}

DenseMatrix matrix_exponential(const DenseMatrix& a, double t, std::size_t max_dim) {
  if (a.rows() != a.cols()) {
    throw ShapeError("matrix_exponential: matrix is " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()));
  }
  if (a.rows() > max_dim) {
    throw CapacityError("matrix_exponential: dimension " + std::to_string(a.rows()) +
                        " exceeds cap " + std::to_string(max_dim));
  }
  const std::size_t n = a.rows();
  DenseMatrix b = scaled(a, t);

  // Scale so the series argument has norm below 1/2, sum the Taylor series to
  // machine precision, then square back up.
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::fabs(b(i, j));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    b *= std::ldexp(1.0, -squarings);
  }

  DenseMatrix result = DenseMatrix::identity(n);
  DenseMatrix term = DenseMatrix::identity(n);
  for (int k = 1; k <= 40; ++k) {
    term = matmul(term, b);
    term *= 1.0 / static_cast<double>(k);
    result += term;
    if (max_abs(term) < 1e-18 * std::max(1.0, max_abs(result))) break;
  }
  for (int i = 0; i < squarings; ++i) result = matmul(result, result);
  if (!result.all_finite()) throw NumericError("matrix_exponential: non-finite result");
  return result;
}

double spectral_norm(const DenseMatrix& a) {
  if (a.size() == 0) return 0.0;
  DenseMatrix ata = matmul(transpose(a), a);
  EigenSpectrum s = eigenvalues(ata, std::max<std::size_t>(ata.rows(), kDefaultEigenCap));
  double lam = std::max(0.0, max_real(s));
  return std::sqrt(lam);
}

}  // namespace swan
