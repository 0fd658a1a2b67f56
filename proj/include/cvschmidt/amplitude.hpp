#pragma once

#include <functional>
#include <optional>
#include <string>

#include "cvschmidt/types.hpp"

namespace cvschmidt {

class QuadratureRule;

/// sin(x)/x with a series branch near zero; sinc(0) = 1.
double sinc(double x);

/// A bipartite wavefunction f(p,q) with domain metadata. Immutable after
/// construction; evaluate is pure and safe to call concurrently.
struct Amplitude {
    std::function<Complex(double, double)> evaluate;
    Interval domain_p = Interval::real_line();
    Interval domain_q = Interval::real_line();
    std::string label;
    std::optional<double> norm_hint;  // cached ||f||², when known

    Complex operator()(double p, double q) const { return evaluate(p, q); }
};

/// Down-conversion parameters. tau_e/tau_o are the group-delay products in
/// ps, sigma the pump width in ps⁻¹; l_p and l_q are the dimensionless
/// combinations tau_o*sigma and tau_e*sigma that the amplitude depends on.
/// omega_bar is carried for provenance only; it cancels out of the
/// dimensionless form.
struct PdcParams {
    double tau_e = 0.0;
    double tau_o = 0.0;
    double sigma = 1.0;
    double omega_bar = 0.0;
    double l_p = 0.0;
    double l_q = 0.0;
};

PdcParams pdc_from_physical(double tau_e, double tau_o, double sigma, double omega_bar);
PdcParams pdc_from_dimensionless(double l_p, double l_q);

/// f(p,q) = exp(-(p+q)²) · sinc((l_p·p + l_q·q)/2) on the full plane.
Amplitude pdc_amplitude(const PdcParams& params);

/// Rescales amp to unit L² norm (computed with the given rules unless a
/// norm_hint is present); the result carries norm_hint = 1.
Amplitude normalize(const Amplitude& amp, const QuadratureRule& rule_p,
                    const QuadratureRule& rule_q, int threads = 1);

}  // namespace cvschmidt
