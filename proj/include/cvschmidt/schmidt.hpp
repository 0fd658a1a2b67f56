#pragma once

#include <Eigen/Core>
#include <optional>
#include <span>
#include <vector>

#include "cvschmidt/amplitude.hpp"
#include "cvschmidt/basis.hpp"
#include "cvschmidt/quadrature.hpp"

namespace cvschmidt {

/// Truncated expansion block C_mn = ∫∫ O¹_m(p) O²_n(q) f(p,q) dp dq of shape
/// (m0+1) x (n0+1), together with ||f||² and quadrature provenance.
/// norm_f_squared is absent for objects representing distributions outside
/// L² (see delta_coefficients); the d¹/d² metrics reject those.
struct CoefficientMatrix {
    Eigen::MatrixXcd entries;
    BasisFamily basis_1;
    BasisFamily basis_2;
    std::optional<double> norm_f_squared;
    int quad_order_p = 0;
    int quad_order_q = 0;

    int m0() const { return static_cast<int>(entries.rows()) - 1; }
    int n0() const { return static_cast<int>(entries.cols()) - 1; }

    /// The top-left (m0+1) x (n0+1) block; norm and provenance carry over.
    CoefficientMatrix truncated(int m0, int n0) const;
};

/// Schmidt form of a coefficient block: eigenvalues λ_i (descending) and the
/// per-side mode coefficient rows, so that mode i on side α is
/// Σ_n modes_α(i,n) O^α_n(k) and C_mn = Σ_i √λ_i modes_1(i,m) modes_2(i,n).
struct SchmidtDecomposition {
    std::vector<double> lambdas;
    Eigen::MatrixXcd modes_1;
    Eigen::MatrixXcd modes_2;
    CoefficientMatrix source;

    int rank() const;  // count of λ above the clipping threshold
};

/// Expands amp over the tensor basis by quadrature. Weight-compensated rules
/// are used throughout, so rule measures only need to cover the amplitude's
/// effective support. ||f||² is taken from amp.norm_hint when present,
/// otherwise computed with the same rules.
CoefficientMatrix compute_coefficients(const Amplitude& amp, const BasisFamily& basis_1,
                                       const BasisFamily& basis_2, int m0, int n0,
                                       const QuadratureRule& rule_p, const QuadratureRule& rule_q,
                                       int threads = 1);

/// Identity block of the resolution-of-identity expansion: C_mn = δ_mn with
/// no finite norm. decompose/entropy/schmidt_number apply; d¹/d² do not.
CoefficientMatrix delta_coefficients(int n_max, const BasisFamily& basis = BasisFamily::hermite());

/// Factorizes C by singular values (λ_i = σ_i²), which is equivalent to the
/// eigenproblem on C C† but better conditioned. Phases are fixed so the
/// largest-magnitude entry of each modes_1 row is real positive; λ below
/// 1e-14·λ_0 are clipped to zero and their modes_2 rows zero-filled.
SchmidtDecomposition decompose(const CoefficientMatrix& coeffs);

Complex eval_mode(const SchmidtDecomposition& dec, int side, int i, double k);

/// Coefficients c_d with mode_i(k) ≈ envelope(βk) Σ_d c_d k^d, by expanding
/// each basis function into monomials. HermiteScaled bases only.
std::vector<double> mode_to_monomial(const SchmidtDecomposition& dec, int side, int i,
                                     int max_degree);

/// Relative mean-square residual ∫∫|f - Σ √λ ψ¹ψ²|² / ||f||² by direct
/// quadrature with the given rules.
double distance_d1(const Amplitude& amp, const SchmidtDecomposition& dec,
                   const QuadratureRule& rule_p, const QuadratureRule& rule_q, int threads = 1);

/// Captured-weight error 1 - Σλ / ||f||², clamped to [0,1].
double distance_d2(const SchmidtDecomposition& dec);

/// Entanglement entropy -Σ w log2 w over w = λ/Σλ, with 0·log0 = 0.
double entropy(std::span<const double> lambdas);

/// Participation ratio (Σλ)² / Σλ².
double schmidt_number(std::span<const double> lambdas);

}  // namespace cvschmidt
