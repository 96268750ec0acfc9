#pragma once

namespace gait::umap {

/// Parameters of the low-dimensional similarity curve
/// phi(d) = (1 + a·d^(2b))⁻¹.
struct CurveParams {
    double a = 1.0;
    double b = 1.0;
    double rms_residual = 0.0;
};

/// Least-squares fit of phi to the piecewise target that is 1 up to
/// min_dist and decays as exp(−(x − min_dist)/spread) beyond it, sampled
/// on 300 uniform grid points over (0, 3·spread]. Requires spread > 0 and
/// 0 <= min_dist < 3·spread (ConfigError otherwise); throws
/// FitDivergedError if the fit fails to describe the target.
CurveParams fit_ab(double min_dist, double spread);

} // namespace gait::umap
