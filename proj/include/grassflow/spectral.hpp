#pragma once

#include <vector>

#include "grassflow/types.hpp"

namespace grassflow::spectral {

// Forward/inverse DFT, normalized so that ifft(fft(a)) == a.
std::vector<cplx> fft(const std::vector<cplx>& a);
std::vector<cplx> ifft(const std::vector<cplx>& a);

// d^order/dx^order of the trigonometric interpolant on [-L, L).
// The Nyquist mode is zeroed for odd orders.
std::vector<cplx> deriv(const std::vector<cplx>& a, double L, int order = 1);

// Left-anchored spectral antiderivative: F with F' = f and F(x_0) = 0.
// The mean of f contributes a linear ramp; all other modes are divided by ik.
std::vector<cplx> antideriv(const std::vector<cplx>& a, double L);

// Evaluate the trigonometric interpolant on the refined grid with
// `factor` times as many points (zero-padded spectrum).
std::vector<cplx> upsample(const std::vector<cplx>& a, int factor);

}  // namespace grassflow::spectral
