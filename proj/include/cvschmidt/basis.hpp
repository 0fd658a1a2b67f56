#pragma once

#include <vector>

#include "cvschmidt/types.hpp"

namespace cvschmidt {

enum class BasisKind { HermiteScaled, Laguerre, Legendre };

const char* to_string(BasisKind kind);

/// A discrete orthonormal function family {O_n} on an interval. The square
/// root of the classical weight is absorbed into the functions, so
/// ∫ O_m O_n dk = δ_mn with a plain dk measure.
///
/// All families are evaluated through the normalized three-term recurrence on
/// the orthonormal functions themselves, which keeps magnitudes O(1) and is
/// stable to n = 200 (enforced as max_order()).
class BasisFamily {
  public:
    /// Hermite functions √β h_n(βk) on (-∞,∞); β is the width parameter.
    static BasisFamily hermite(double beta = 1.0);
    /// Laguerre functions √s L_n(sk) e^{-sk/2} on (0,∞).
    static BasisFamily laguerre(double scale = 1.0);
    /// Normalized Legendre polynomials mapped to a finite interval (a,b).
    static BasisFamily legendre(double a = -1.0, double b = 1.0);

    BasisKind kind() const { return kind_; }
    double scale() const { return scale_; }
    const Interval& domain() const { return domain_; }

    double evaluate(int n, double k) const;
    /// Values O_0(k) .. O_{n_max}(k) from one pass of the shared recurrence.
    std::vector<double> evaluate_batch(int n_max, double k) const;

    /// Monomial coefficients of the polynomial part: O_n in canonical
    /// coordinates equals w(x)^{1/2}-envelope times Σ_d coeff[n][d] x^d.
    /// Only supported for HermiteScaled (envelope e^{-x²/2}).
    static std::vector<std::vector<double>> hermite_monomial_table(int n_max);

    static constexpr int max_order() { return 200; }

  private:
    BasisFamily(BasisKind kind, double scale, double shift, Interval domain)
        : kind_(kind), scale_(scale), shift_(shift), domain_(domain) {}

    BasisKind kind_;
    double scale_;   // canonical coordinate x = scale*k + shift
    double shift_;
    Interval domain_;
};

}  // namespace cvschmidt
