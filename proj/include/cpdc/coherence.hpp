#pragma once

#include <vector>

#include "cpdc/biphoton.hpp"

namespace cpdc {

enum class Beam { signal, idler };

/// First-order spectral coherence function of one marginal beam on a 1-D
/// frequency axis: values(j,l) = G1(Omega_j, Omega_l).
struct CoherenceGrid {
  Beam which = Beam::signal;
  std::vector<double> axis;  // rad/s
  double step = 0.0;
  CMat values;               // Hermitian n x n
  std::vector<double> spectrum;  // diagonal, real
  double fwhm_spectrum = 0.0;    // of the diagonal, main lobe
  double fwhm_coherence = 0.0;   // of |G| along the central antidiagonal cut

  std::size_t n() const { return axis.size(); }
};

/// G1 by trapezoidal quadrature over the traced axis of psi:
///   signal: G(W,W') = sum_k w_k conj(psi(W,k)) psi(W',k)
///   idler:  G(W,W') = sum_k w_k conj(psi(k,W)) psi(k,W')
/// Throws when the traced axis has fewer than 8 points.
CoherenceGrid g1(const JsaGrid& jsa, Beam which);

/// Marginal spectrum only (the G1 diagonal); avoids the O(n^3) contraction.
std::vector<double> g1_spectrum(const JsaGrid& jsa, Beam which);

/// CW-limit closed form on the given axis:
///   G = g^2 Ip(W'-W) sinc(W/Ogvs) sinc(W'/Ogvs) e^{i s (W'-W)/Ogvs}
/// with s = -1 for the signal, +1 for the idler, and Ip the Fourier
/// transform of the pump intensity profile; for the Gaussian pump
/// Ip(W) = tau_p/(2 sqrt(pi)) exp(-W^2 tau_p^2/4). The diagonal constant
/// and the phase signs are pinned against quadrature g1.
CoherenceGrid g1_cw_closed_form(const PhaseMatchSummary& summary, const PumpPulse& pulse,
                                const std::vector<double>& axis, Beam which = Beam::signal,
                                double g = 0.01);

/// Ultrashort-limit closed forms (pump replica envelope x sinc coherence).
CoherenceGrid g1_ultrashort_closed_form(const PhaseMatchSummary& summary,
                                        const PumpPulse& pulse,
                                        const std::vector<double>& axis, Beam which,
                                        double g = 0.01);

/// Intermediate-limit closed forms; both beams come out rank-1.
CoherenceGrid g1_intermediate_closed_form(const PhaseMatchSummary& summary,
                                          const PumpPulse& pulse,
                                          const std::vector<double>& axis, Beam which,
                                          double g = 0.01);

/// Siegert/thermal decomposition of <I(W) I(W')>: the two smooth terms on the
/// grid plus the delta-term weight (the marginal spectrum) kept separate.
struct IntensityCorrelation {
  std::vector<double> axis;
  double step = 0.0;
  std::vector<double> smooth;        // n x n row-major: <I><I'> + |G|^2
  std::vector<double> delta_weight;  // <I(W)>, the singular term's weight
};

IntensityCorrelation siegert_intensity_correlation(const CoherenceGrid& g);

/// Relative L2 distance between two coherence grids on identical axes.
/// Compares complex values by default, magnitudes when magnitude_only.
double relative_l2(const CoherenceGrid& a, const CoherenceGrid& b,
                   bool magnitude_only = false);

}  // namespace cpdc
