#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cpdc {

using cdouble = std::complex<double>;

/// Dense row-major complex matrix.
struct CMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cdouble> a;

  CMat() = default;
  CMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  cdouble& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const cdouble& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  cdouble* row(std::size_t i) { return a.data() + i * cols; }
  const cdouble* row(std::size_t i) const { return a.data() + i * cols; }
};

/// G(j,l) = sum_k conj(M(j,k)) w(k) M(l,k); the weighted Gram over columns.
/// Hermitian by construction; both triangles are filled.
CMat gram_conj_weighted(const CMat& m, const std::vector<double>& w);

/// Same contraction over rows: G(j,l) = sum_k conj(M(k,j)) w(k) M(k,l).
CMat gram_conj_weighted_rows(const CMat& m, const std::vector<double>& w);

/// Eigenvalues of a Hermitian matrix, ascending. Destroys its argument.
/// Householder tridiagonalization followed by implicit-shift QL.
std::vector<double> hermitian_eigenvalues(CMat a);

/// Radix-2 in-place FFT with a precomputed twiddle table.
/// sign = -1: X_k = sum_n x_n exp(-2*pi*i*k*n/N); sign = +1 is the inverse
/// kernel without the 1/N factor.
class Fft {
 public:
  explicit Fft(std::size_t n);
  std::size_t size() const { return n_; }
  void transform(cdouble* x, int sign) const;

 private:
  std::size_t n_;
  std::vector<cdouble> tw_;     // n/2 roots for sign = -1
  std::vector<std::size_t> rev_;
};

/// Centered 2-D transform used for the frequency->time mapping:
///   out(ta, tb) = scale * sum_{n,m} in(n,m) exp(-i (W_n ta + W_m tb))
/// with W_n = (n - N/2) dW and t_k = (k - K/2) dt, dt = 2 pi / (N dW).
/// Performed in place on a rows x cols row-major grid; rows and cols must be
/// powers of two (and multiples of 4 so the center-shift phases are real).
void centered_fft2(CMat& grid, double scale);

}  // namespace cpdc
