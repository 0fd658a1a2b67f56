#include "cvschmidt/amplitude.hpp"

#include <cmath>

#include "cvschmidt/quadrature.hpp"

namespace cvschmidt {

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

PdcParams pdc_from_physical(double tau_e, double tau_o, double sigma, double omega_bar) {
    if (!(sigma > 0.0)) throw std::invalid_argument("pdc_from_physical: sigma must be > 0");
    PdcParams p;
    p.tau_e = tau_e;
    p.tau_o = tau_o;
    p.sigma = sigma;
    p.omega_bar = omega_bar;
    p.l_p = tau_o * sigma;
    p.l_q = tau_e * sigma;
    return p;
}

PdcParams pdc_from_dimensionless(double l_p, double l_q) {
    // sigma = 1 makes the group delays numerically equal to l_p, l_q
    PdcParams p;
    p.tau_e = l_q;
    p.tau_o = l_p;
    p.sigma = 1.0;
    p.omega_bar = 0.0;
    p.l_p = l_p;
    p.l_q = l_q;
    return p;
}

Amplitude pdc_amplitude(const PdcParams& params) {
    if (!(params.sigma > 0.0)) throw std::invalid_argument("pdc_amplitude: sigma must be > 0");
    const double lp = params.l_p, lq = params.l_q;
    Amplitude amp;
    amp.evaluate = [lp, lq](double p, double q) {
        const double s = p + q;
        return Complex(std::exp(-s * s) * sinc(0.5 * (lp * p + lq * q)), 0.0);
    };
    amp.label = "pdc";
    return amp;
}

Amplitude normalize(const Amplitude& amp, const QuadratureRule& rule_p,
                    const QuadratureRule& rule_q, int threads) {
    const double n2 = amp.norm_hint ? *amp.norm_hint : norm_squared(amp, rule_p, rule_q, threads);
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw NumericalError("normalize: amplitude has zero or non-finite norm");
    const double s = 1.0 / std::sqrt(n2);
    Amplitude out = amp;
    out.evaluate = [inner = amp.evaluate, s](double p, double q) { return s * inner(p, q); };
    out.norm_hint = 1.0;
    return out;
}

}  // namespace cvschmidt
