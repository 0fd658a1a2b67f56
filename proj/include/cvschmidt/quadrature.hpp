#pragma once

#include <functional>
#include <vector>

#include "cvschmidt/types.hpp"

namespace cvschmidt {

struct Amplitude;

enum class Measure { GaussHermite, GaussLaguerre, GaussLegendre };

const char* to_string(Measure measure);

/// Gaussian quadrature rule: exact for polynomials of degree <= 2*order-1
/// against its weight. Besides the plain weights it carries compensated
/// weights (weight times the inverse weight density at the node, computed
/// stably through the orthonormal-function recurrence), which turn a rule
/// built for weight w(x) into one for plain dx integrals of integrands with
/// w-like decay. Plain Hermite/Laguerre weights underflow to zero at the
/// extreme nodes of very large rules; the compensated weights never do.
class QuadratureRule {
  public:
    static QuadratureRule gauss(Measure measure, int order);

    /// Affine image of the rule: nodes -> scale*x + shift, weights scaled by
    /// |scale|. Used to place Gauss-Legendre on an arbitrary interval or to
    /// match a scaled basis.
    QuadratureRule mapped(double scale, double shift = 0.0) const;

    Measure measure() const { return measure_; }
    int order() const { return order_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<double>& compensated_weights() const { return comp_weights_; }

  private:
    QuadratureRule() = default;

    Measure measure_ = Measure::GaussLegendre;
    int order_ = 0;
    std::vector<double> nodes_;         // ascending
    std::vector<double> weights_;
    std::vector<double> comp_weights_;
};

using Integrand2D = std::function<Complex(double, double)>;

/// Tensor-product integral Σ_ij w_i w'_j f(p_i, q_j) with compensated
/// summation in a fixed row-major order; the result is bit-identical for any
/// thread count. Throws NumericalError if the integrand is non-finite at a
/// node.
Complex integrate_2d(const Integrand2D& f, const QuadratureRule& rule_p,
                     const QuadratureRule& rule_q, bool weight_compensation,
                     int threads = 1);

/// ∫∫ |f(p,q)|² dp dq by tensor quadrature (always weight-compensated).
double norm_squared(const Amplitude& amp, const QuadratureRule& rule_p,
                    const QuadratureRule& rule_q, int threads = 1);

/// Default rule order for a Hermite-basis expansion with the given cutoff.
int default_order(int max_cutoff);

}  // namespace cvschmidt
