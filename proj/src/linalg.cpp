#include "cpdc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cpdc/units.hpp"

namespace cpdc {

namespace {

// Tile edge for the Gram kernels. Small enough that three tiles of rows fit
// in L2 alongside the weight vector.
constexpr std::size_t kTile = 48;

}  // namespace

CMat gram_conj_weighted(const CMat& m, const std::vector<double>& w) {
  const std::size_t n = m.rows, k = m.cols;
  if (w.size() != k) throw std::runtime_error("gram_conj_weighted: weight size mismatch");
  CMat mw(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    const cdouble* src = m.row(i);
    cdouble* dst = mw.row(i);
    for (std::size_t c = 0; c < k; ++c) dst[c] = src[c] * w[c];
  }
  CMat g(n, n);
  for (std::size_t jb = 0; jb < n; jb += kTile) {
    const std::size_t je = std::min(jb + kTile, n);
    for (std::size_t lb = 0; lb <= jb; lb += kTile) {
      const std::size_t le = std::min(lb + kTile, n);
      for (std::size_t j = jb; j < je; ++j) {
        const cdouble* mj = m.row(j);
        const std::size_t lmax = std::min(le, j + 1);
        for (std::size_t l = lb; l < lmax; ++l) {
          const cdouble* ml = mw.row(l);
          double re = 0.0, im = 0.0;
          for (std::size_t c = 0; c < k; ++c) {
            const double ar = mj[c].real(), ai = mj[c].imag();
            const double br = ml[c].real(), bi = ml[c].imag();
            re += ar * br + ai * bi;  // conj(a) * b
            im += ar * bi - ai * br;
          }
          g(j, l) = {re, im};
        }
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = j + 1; l < n; ++l) g(j, l) = std::conj(g(l, j));
  return g;
}

CMat gram_conj_weighted_rows(const CMat& m, const std::vector<double>& w) {
  const std::size_t n = m.cols, k = m.rows;
  if (w.size() != k) throw std::runtime_error("gram_conj_weighted_rows: weight size mismatch");
  CMat g(n, n);
  // Accumulate rank-1 updates row by row; row access is contiguous.
  for (std::size_t r = 0; r < k; ++r) {
    const cdouble* mr = m.row(r);
    const double wr = w[r];
    for (std::size_t j = 0; j < n; ++j) {
      const double ar = mr[j].real(), ai = mr[j].imag();
      cdouble* gj = g.row(j);
      for (std::size_t l = j; l < n; ++l) {
        const double br = mr[l].real(), bi = mr[l].imag();
        gj[l] += cdouble(wr * (ar * br + ai * bi), wr * (ar * bi - ai * br));
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < j; ++l) g(j, l) = std::conj(g(l, j));
  return g;
}

namespace {

// Implicit-shift QL eigenvalue iteration on a real symmetric tridiagonal
// matrix (diagonal d, subdiagonal e with e[n-1] unused). Eigenvalues land in
// d, unsorted. Couplings below eps * ||T|| deflate outright; quadrature Gram
// matrices are strongly graded and would otherwise stall the local test.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = d.size();
  if (n == 0) return;
  e[n - 1] = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  double anorm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(d[i]) + std::abs(e[i]);
    if (i > 0) row += std::abs(e[i - 1]);
    anorm = std::max(anorm, row);
  }
  const double floor_thr = eps * anorm;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= floor_thr) break;
      }
      if (m != l) {
        if (iter++ == 100) throw std::runtime_error("hermitian_eigenvalues: QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          double b = c * e[i];
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
        if (!underflow) {
          d[l] -= p;
          e[l] = g;
          e[m] = 0.0;
        }
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> hermitian_eigenvalues(CMat a) {
  const std::size_t n = a.rows;
  if (n != a.cols) throw std::runtime_error("hermitian_eigenvalues: matrix not square");
  if (n == 0) return {};
  if (n == 1) return {a(0, 0).real()};

  std::vector<double> d(n), e(n, 0.0);
  std::vector<cdouble> v(n), p(n), wvec(n);

  // Householder reduction to Hermitian tridiagonal form; only d and |e| are
  // kept since a diagonal unitary similarity makes the subdiagonal real.
  for (std::size_t kcol = 0; kcol + 2 < n; ++kcol) {
    const std::size_t m = n - kcol - 1;  // trailing block size
    double xnorm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = a(kcol + 1 + i, kcol);
      xnorm2 += std::norm(v[i]);
    }
    const double xnorm = std::sqrt(xnorm2);
    d[kcol] = a(kcol, kcol).real();
    if (xnorm == 0.0) {
      e[kcol] = 0.0;
      continue;
    }
    cdouble alpha = v[0];
    cdouble beta = (std::abs(alpha) == 0.0)
                       ? cdouble(-xnorm, 0.0)
                       : -(alpha / std::abs(alpha)) * xnorm;
    v[0] = alpha - beta;
    double vnorm2 = xnorm2 - std::norm(alpha) + std::norm(v[0]);
    if (vnorm2 <= 0.0) {
      e[kcol] = std::abs(beta);
      continue;
    }
    const double tau = 2.0 / vnorm2;

    // p = tau * A2 * v over the trailing block
    for (std::size_t i = 0; i < m; ++i) {
      cdouble acc = 0.0;
      const cdouble* arow = a.row(kcol + 1 + i) + kcol + 1;
      for (std::size_t j = 0; j < m; ++j) acc += arow[j] * v[j];
      p[i] = tau * acc;
    }
    cdouble vhp = 0.0;
    for (std::size_t i = 0; i < m; ++i) vhp += std::conj(v[i]) * p[i];
    for (std::size_t i = 0; i < m; ++i) wvec[i] = p[i] - (0.5 * tau * vhp) * v[i];

    // A2 <- A2 - v w^H - w v^H
    for (std::size_t i = 0; i < m; ++i) {
      cdouble* arow = a.row(kcol + 1 + i) + kcol + 1;
      const cdouble vi = v[i], wi = wvec[i];
      for (std::size_t j = 0; j < m; ++j)
        arow[j] -= vi * std::conj(wvec[j]) + wi * std::conj(v[j]);
    }
    e[kcol] = std::abs(beta);
  }
  d[n - 2] = a(n - 2, n - 2).real();
  d[n - 1] = a(n - 1, n - 1).real();
  e[n - 2] = std::abs(a(n - 1, n - 2));

  tridiag_ql(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

Fft::Fft(std::size_t n) : n_(n) {
  if (n < 2 || (n & (n - 1)) != 0) throw std::runtime_error("Fft: size must be a power of two");
  tw_.resize(n / 2);
  for (std::size_t i = 0; i < n / 2; ++i) {
    double ang = -units::two_pi * static_cast<double>(i) / static_cast<double>(n);
    tw_[i] = {std::cos(ang), std::sin(ang)};
  }
  rev_.resize(n);
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b)
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    rev_[i] = r;
  }
}

void Fft::transform(cdouble* x, int sign) const {
  const std::size_t n = n_;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = rev_[i];
    if (j > i) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t k = 0; k < half; ++k) {
        cdouble w = tw_[k * stride];
        if (sign > 0) w = std::conj(w);
        const cdouble t = x[base + k + half] * w;
        const cdouble u = x[base + k];
        x[base + k] = u + t;
        x[base + k + half] = u - t;
      }
    }
  }
}

void centered_fft2(CMat& grid, double scale) {
  const std::size_t nr = grid.rows, nc = grid.cols;
  if (nr % 4 != 0 || nc % 4 != 0)
    throw std::runtime_error("centered_fft2: dimensions must be multiples of 4");
  Fft frow(nc);
  Fft fcol(nr);

  // (-1)^(i+j) pre-phase recenters the input axes.
  for (std::size_t i = 0; i < nr; ++i) {
    cdouble* r = grid.row(i);
    for (std::size_t j = 0; j < nc; ++j)
      if ((i + j) & 1) r[j] = -r[j];
  }
  for (std::size_t i = 0; i < nr; ++i) frow.transform(grid.row(i), -1);

  std::vector<cdouble> col(nr);
  for (std::size_t j = 0; j < nc; ++j) {
    for (std::size_t i = 0; i < nr; ++i) col[i] = grid(i, j);
    fcol.transform(col.data(), -1);
    for (std::size_t i = 0; i < nr; ++i) grid(i, j) = col[i];
  }

  // (-1)^(k+l) post-phase recenters the output axes; with rows and cols
  // divisible by 4 the residual constant phase is exactly 1.
  for (std::size_t i = 0; i < nr; ++i) {
    cdouble* r = grid.row(i);
    for (std::size_t j = 0; j < nc; ++j) {
      if ((i + j) & 1) r[j] = -r[j];
      r[j] *= scale;
    }
  }
}

}  // namespace cpdc
