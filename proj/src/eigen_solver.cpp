// Symmetric eigenvalue solver: Householder tridiagonalization followed by
// implicit-shift QL iteration. Eigenvectors are never accumulated.

#include <algorithm>
#include <cmath>
#include <string>

#include "vne/error.hpp"
#include "vne/spectral.hpp"

namespace vne {

namespace {

constexpr int kMaxQlIterations = 60;

struct Tridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off;  // off[i] couples i-1 and i; off[0] = 0
};

// Reduces a dense row-major symmetric matrix (destroyed) to tridiagonal form,
// eliminating from the last row upwards.
Tridiagonal householder_tridiagonalize(std::vector<double>& a, std::size_t n) {
  Tridiagonal t;
  t.diagonal.assign(n, 0.0);
  t.off.assign(n, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        t.off[i] = at(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        t.off[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        // p = A u / h, stored in off[0..l]
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          double acc = 0.0;
          for (std::size_t k = 0; k <= j; ++k) acc += at(j, k) * at(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) acc += at(k, j) * at(i, k);
          t.off[j] = acc / h;
          f += t.off[j] * at(i, j);
        }
        const double hh = f / (h + h);
        // A <- A - q u^T - u q^T with q = p - hh u, lower triangle only
        for (std::size_t j = 0; j <= l; ++j) {
          const double uj = at(i, j);
          const double qj = t.off[j] - hh * uj;
          t.off[j] = qj;
          for (std::size_t k = 0; k <= j; ++k) at(j, k) -= uj * t.off[k] + qj * at(i, k);
        }
      }
    } else {
      t.off[i] = at(i, l);
    }
    t.diagonal[i] = h;
  }
  for (std::size_t i = 0; i < n; ++i) t.diagonal[i] = at(i, i);
  t.off[0] = 0.0;
  return t;
}

// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal matrix.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = d.size();
  if (n == 0) return;
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m = l;
    while (true) {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m == l) break;
      if (++iterations > kMaxQlIterations)
        throw NumericalError("QL iteration did not converge for eigenvalue " + std::to_string(l));

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      std::size_t i = m;
      while (i-- > l) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

}  // namespace

std::vector<double> SymmetricMatrix::dense() const {
  std::vector<double> out(order_ * order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j <= i; ++j) out[i * order_ + j] = out[j * order_ + i] = (*this)(i, j);
  return out;
}

double Spectrum::sum() const {
  double s = 0.0;
  for (double x : eigenvalues) s += x;
  return s;
}

std::size_t Spectrum::zero_count(double tolerance) const {
  return static_cast<std::size_t>(
      std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double x) { return x < tolerance; }));
}

Spectrum symmetric_eigenvalues(const SymmetricMatrix& m) {
  const std::size_t n = m.order();
  Spectrum out;
  if (n == 0) return out;
  if (n == 1) {
    out.eigenvalues = {m(0, 0)};
    return out;
  }
  auto a = m.dense();
  auto t = householder_tridiagonalize(a, n);
  tridiagonal_ql(t.diagonal, t.off);
  std::sort(t.diagonal.begin(), t.diagonal.end());
  out.eigenvalues = std::move(t.diagonal);
  return out;
}

}  // namespace vne
