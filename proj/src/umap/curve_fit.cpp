#include "gait/umap/curve_fit.hpp"

#include "gait/errors.hpp"

#include <cmath>
#include <vector>

namespace gait::umap {

namespace {

constexpr std::size_t kGridSize = 300;
constexpr double kDivergedRms = 0.1;

} // namespace

CurveParams fit_ab(double min_dist, double spread) {
    if (!(spread > 0.0) || min_dist < 0.0 || min_dist >= 3.0 * spread) {
        throw ConfigError("fit_ab requires spread > 0 and 0 <= min_dist < 3*spread");
    }

    std::vector<double> x(kGridSize);
    std::vector<double> y(kGridSize);
    const double step = 3.0 * spread / static_cast<double>(kGridSize);
    for (std::size_t i = 0; i < kGridSize; ++i) {
        x[i] = step * static_cast<double>(i + 1);
        y[i] = x[i] <= min_dist ? 1.0 : std::exp(-(x[i] - min_dist) / spread);
    }

    // Levenberg–Marquardt on f(x) = (1 + a x^(2b))⁻¹ against the target.
    double a = 1.0;
    double b = 1.0;
    double lambda = 1e-3;

    auto rss = [&](double pa, double pb) {
        double sum = 0.0;
        for (std::size_t i = 0; i < kGridSize; ++i) {
            const double f = 1.0 / (1.0 + pa * std::pow(x[i], 2.0 * pb));
            const double r = y[i] - f;
            sum += r * r;
        }
        return sum;
    };

    double current = rss(a, b);
    for (int iter = 0; iter < 200; ++iter) {
        // Normal equations for the 2-parameter Jacobian.
        double jaa = 0.0, jab = 0.0, jbb = 0.0, ga = 0.0, gb = 0.0;
        for (std::size_t i = 0; i < kGridSize; ++i) {
            const double u = std::pow(x[i], 2.0 * b);
            const double denom = 1.0 + a * u;
            const double f = 1.0 / denom;
            const double r = y[i] - f;
            const double dfda = -u / (denom * denom);
            const double dfdb = -2.0 * a * u * std::log(x[i]) / (denom * denom);
            jaa += dfda * dfda;
            jab += dfda * dfdb;
            jbb += dfdb * dfdb;
            ga += dfda * r;
            gb += dfdb * r;
        }

        bool stepped = false;
        for (int damp = 0; damp < 16; ++damp) {
            const double maa = jaa * (1.0 + lambda);
            const double mbb = jbb * (1.0 + lambda);
            const double det = maa * mbb - jab * jab;
            if (det == 0.0) break;
            const double da = (ga * mbb - gb * jab) / det;
            const double db = (gb * maa - ga * jab) / det;
            const double na = a + da;
            const double nb = b + db;
            if (na > 0.0 && nb > 0.0) {
                const double next = rss(na, nb);
                if (next < current) {
                    a = na;
                    b = nb;
                    current = next;
                    lambda = std::max(lambda * 0.5, 1e-12);
                    stepped = true;
                    if (std::fabs(da) + std::fabs(db) < 1e-12) iter = 200;
                    break;
                }
            }
            lambda *= 4.0;
        }
        if (!stepped) break;
    }

    CurveParams out;
    out.a = a;
    out.b = b;
    out.rms_residual = std::sqrt(current / static_cast<double>(kGridSize));
    if (!std::isfinite(out.rms_residual) || out.rms_residual > kDivergedRms) {
        throw FitDivergedError(out.rms_residual);
    }
    return out;
}

} // namespace gait::umap
