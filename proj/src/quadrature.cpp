#include "cvschmidt/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "cvschmidt/amplitude.hpp"
#include "cvschmidt/detail/accumulate.hpp"

namespace cvschmidt {

namespace {

// orthonormal recurrence coefficients: x p_k = off(k+1) p_{k+1} + diag(k) p_k + off(k) p_{k-1}
double jacobi_diag(Measure m, int k) {
    return m == Measure::GaussLaguerre ? 2.0 * k + 1.0 : 0.0;
}

double jacobi_off(Measure m, int k) {
    switch (m) {
        case Measure::GaussHermite: return std::sqrt(k / 2.0);
        case Measure::GaussLaguerre: return static_cast<double>(k);
        case Measure::GaussLegendre: return k / std::sqrt(4.0 * k * k - 1.0);
    }
    return 0.0;
}

// orders beyond which the orthonormal-function seeds underflow at the
// extreme nodes
int max_gauss_order(Measure m) {
    switch (m) {
        case Measure::GaussHermite: return 600;
        case Measure::GaussLaguerre: return 300;
        case Measure::GaussLegendre: return 20000;
    }
    return 0;
}

// orthonormal *functions* (square root of the weight absorbed): seed value
// and three-term step. Values stay O(1) at every node, so Christoffel
// weights are computed without overflow at any supported order.
double fn_seed(Measure m, double x) {
    switch (m) {
        case Measure::GaussHermite: return 0.7511255444649425 * std::exp(-0.5 * x * x);
        case Measure::GaussLaguerre: return std::exp(-0.5 * x);
        case Measure::GaussLegendre: return std::numbers::sqrt2 / 2.0;
    }
    return 0.0;
}

double fn_step(Measure m, int n, double x, double vn, double vnm1) {
    switch (m) {
        case Measure::GaussHermite:
            return std::sqrt(2.0 / (n + 1)) * x * vn - std::sqrt(double(n) / (n + 1)) * vnm1;
        case Measure::GaussLaguerre:
            return ((2.0 * n + 1.0 - x) * vn - n * vnm1) / (n + 1);
        case Measure::GaussLegendre:
            return (x * vn - jacobi_off(m, n) * vnm1) / jacobi_off(m, n + 1);
    }
    return 0.0;
}

struct FnPair {
    double sum_sq;   // Σ_{k<order} v_k(x)²
    double v_last;   // v_order(x)
    double v_prev;   // v_{order-1}(x)
};

FnPair fn_scan(Measure m, int order, double x) {
    double v0 = fn_seed(m, x);
    double sum = v0 * v0;
    double v1 = fn_step(m, 0, x, v0, 0.0);
    for (int k = 1; k < order; ++k) {
        sum += v1 * v1;
        const double v2 = fn_step(m, k, x, v1, v0);
        v0 = v1;
        v1 = v2;
    }
    if (order == 0) return {0.0, v0, 0.0};
    return {sum, v1, v0};
}

// derivative of the order-th orthonormal function at x (envelope included)
double fn_derivative(Measure m, int order, double x, double v_n, double v_nm1) {
    const int n = order;
    switch (m) {
        case Measure::GaussHermite:
            return std::sqrt(2.0 * n) * v_nm1 - x * v_n;
        case Measure::GaussLaguerre:
            return (n / x) * (v_n - v_nm1) - 0.5 * v_n;
        case Measure::GaussLegendre:
            return n * (x * v_n - std::sqrt((2.0 * n + 1.0) / (2.0 * n - 1.0)) * v_nm1) /
                   (x * x - 1.0);
    }
    return 0.0;
}

double inverse_weight_log(Measure m, double x) {
    switch (m) {
        case Measure::GaussHermite: return x * x;
        case Measure::GaussLaguerre: return x;
        case Measure::GaussLegendre: return 0.0;
    }
    return 0.0;
}

bool symmetric_measure(Measure m) { return m != Measure::GaussLaguerre; }

}  // namespace

const char* to_string(Measure measure) {
    switch (measure) {
        case Measure::GaussHermite: return "gauss-hermite";
        case Measure::GaussLaguerre: return "gauss-laguerre";
        case Measure::GaussLegendre: return "gauss-legendre";
    }
    return "?";
}

QuadratureRule QuadratureRule::gauss(Measure measure, int order) {
    if (order < 1) throw std::invalid_argument("QuadratureRule: order must be >= 1");
    if (order > max_gauss_order(measure))
        throw std::invalid_argument("QuadratureRule: order exceeds the stable limit for this measure");

    // Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix
    Eigen::VectorXd diag(order), off(std::max(order - 1, 1));
    for (int k = 0; k < order; ++k) diag[k] = jacobi_diag(measure, k);
    for (int k = 1; k < order; ++k) off[k - 1] = jacobi_off(measure, k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off.head(std::max(order - 1, 0)),
                                  Eigen::EigenvaluesOnly);

    QuadratureRule rule;
    rule.measure_ = measure;
    rule.order_ = order;
    rule.nodes_.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + order);
    std::sort(rule.nodes_.begin(), rule.nodes_.end());

    // one Newton step on the order-th orthonormal function sharpens the
    // eigensolver output to machine-precision roots
    for (double& x : rule.nodes_) {
        for (int pass = 0; pass < 2; ++pass) {
            const FnPair fp = fn_scan(measure, order, x);
            const double d = fn_derivative(measure, order, x, fp.v_last, fp.v_prev);
            if (d == 0.0) break;
            const double dx = fp.v_last / d;
            x -= dx;
            if (std::abs(dx) < 1e-15 * (1.0 + std::abs(x))) break;
        }
    }
    std::sort(rule.nodes_.begin(), rule.nodes_.end());

    // kill O(eps) asymmetry for symmetric weights
    if (symmetric_measure(measure)) {
        for (int i = 0, j = order - 1; i < j; ++i, --j) {
            const double m = 0.5 * (rule.nodes_[j] - rule.nodes_[i]);
            rule.nodes_[i] = -m;
            rule.nodes_[j] = m;
        }
        if (order % 2 == 1) rule.nodes_[order / 2] = 0.0;
    }

    // Christoffel numbers: w_i = mu0-normalized 1/Σ p_k(x_i)²; running the sum
    // on the orthonormal functions gives the compensated weight directly
    rule.weights_.resize(order);
    rule.comp_weights_.resize(order);
    for (int i = 0; i < order; ++i) {
        const FnPair fp = fn_scan(measure, order, rule.nodes_[i]);
        const double cw = 1.0 / fp.sum_sq;
        rule.comp_weights_[i] = cw;
        rule.weights_[i] = cw * std::exp(-inverse_weight_log(measure, rule.nodes_[i]));
    }
    if (symmetric_measure(measure)) {
        for (int i = 0, j = order - 1; i < j; ++i, --j) {
            rule.weights_[i] = rule.weights_[j] = 0.5 * (rule.weights_[i] + rule.weights_[j]);
            rule.comp_weights_[i] = rule.comp_weights_[j] =
                0.5 * (rule.comp_weights_[i] + rule.comp_weights_[j]);
        }
    }
    return rule;
}

QuadratureRule QuadratureRule::mapped(double scale, double shift) const {
    if (!(scale != 0.0) || !std::isfinite(scale) || !std::isfinite(shift))
        throw std::invalid_argument("QuadratureRule::mapped: bad affine map");
    QuadratureRule r(*this);
    const double a = std::abs(scale);
    for (int i = 0; i < order_; ++i) {
        r.nodes_[i] = scale * nodes_[i] + shift;
        r.weights_[i] *= a;
        r.comp_weights_[i] *= a;
    }
    if (scale < 0.0) {
        std::reverse(r.nodes_.begin(), r.nodes_.end());
        std::reverse(r.weights_.begin(), r.weights_.end());
        std::reverse(r.comp_weights_.begin(), r.comp_weights_.end());
    }
    return r;
}

Complex integrate_2d(const Integrand2D& f, const QuadratureRule& rule_p,
                     const QuadratureRule& rule_q, bool weight_compensation, int threads) {
    if (rule_p.order() == 0 || rule_q.order() == 0)
        throw std::invalid_argument("integrate_2d: empty rule");
    const auto& wp = weight_compensation ? rule_p.compensated_weights() : rule_p.weights();
    const auto& wq = weight_compensation ? rule_q.compensated_weights() : rule_q.weights();
    const auto& xp = rule_p.nodes();
    const auto& xq = rule_q.nodes();

    std::vector<Complex> row_sums(xp.size());
    detail::parallel_rows(xp.size(), threads, [&](size_t i) {
        detail::KahanSum<Complex> row;
        for (size_t j = 0; j < xq.size(); ++j) {
            const Complex v = f(xp[i], xq[j]);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw NumericalError("integrate_2d: non-finite integrand at node (" +
                                     std::to_string(xp[i]) + ", " + std::to_string(xq[j]) + ")");
            row.add(wq[j] * v);
        }
        row_sums[i] = row.value();
    });

    detail::KahanSum<Complex> total;
    for (size_t i = 0; i < xp.size(); ++i) total.add(wp[i] * row_sums[i]);
    return total.value();
}

double norm_squared(const Amplitude& amp, const QuadratureRule& rule_p,
                    const QuadratureRule& rule_q, int threads) {
    const Complex value = integrate_2d(
        [&amp](double p, double q) {
            const Complex v = amp.evaluate(p, q);
            return Complex(std::norm(v), 0.0);
        },
        rule_p, rule_q, /*weight_compensation=*/true, threads);
    return value.real();
}

int default_order(int max_cutoff) { return 4 * max_cutoff + 40; }

}  // namespace cvschmidt
