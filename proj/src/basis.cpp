#include "cvschmidt/basis.hpp"

#include <cmath>
#include <numbers>

namespace cvschmidt {

namespace {

constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^(-1/4)

double hermite_step(int n, double x, double hn, double hnm1) {
    return std::sqrt(2.0 / (n + 1)) * x * hn - std::sqrt(double(n) / (n + 1)) * hnm1;
}

double laguerre_step(int n, double x, double ln, double lnm1) {
    return ((2.0 * n + 1.0 - x) * ln - n * lnm1) / (n + 1);
}

double legendre_step(int n, double x, double pn, double pnm1) {
    auto a = [](int m) { return m / std::sqrt(4.0 * m * m - 1.0); };
    return (x * pn - a(n) * pnm1) / a(n + 1);
}

double seed(BasisKind kind, double x) {
    switch (kind) {
        case BasisKind::HermiteScaled: return kPiQuarterInv * std::exp(-0.5 * x * x);
        case BasisKind::Laguerre: return std::exp(-0.5 * x);
        case BasisKind::Legendre: return std::numbers::sqrt2 / 2.0;
    }
    return 0.0;
}

double step(BasisKind kind, int n, double x, double vn, double vnm1) {
    switch (kind) {
        case BasisKind::HermiteScaled: return hermite_step(n, x, vn, vnm1);
        case BasisKind::Laguerre: return laguerre_step(n, x, vn, vnm1);
        case BasisKind::Legendre: return legendre_step(n, x, vn, vnm1);
    }
    return 0.0;
}

// value of O_1 given O_0; all three families share v1 = c1(x) * v0
double first(BasisKind kind, double x, double v0) {
    switch (kind) {
        case BasisKind::HermiteScaled: return std::numbers::sqrt2 * x * v0;
        case BasisKind::Laguerre: return (1.0 - x) * v0;
        case BasisKind::Legendre: return std::sqrt(3.0) * x * v0;
    }
    return 0.0;
}

}  // namespace

const char* to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::HermiteScaled: return "hermite";
        case BasisKind::Laguerre: return "laguerre";
        case BasisKind::Legendre: return "legendre";
    }
    return "?";
}

BasisFamily BasisFamily::hermite(double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("BasisFamily: beta must be > 0");
    return {BasisKind::HermiteScaled, beta, 0.0, Interval::real_line()};
}

BasisFamily BasisFamily::laguerre(double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("BasisFamily: scale must be > 0");
    return {BasisKind::Laguerre, scale, 0.0, Interval::half_line()};
}

BasisFamily BasisFamily::legendre(double a, double b) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("BasisFamily: legendre needs a finite interval a < b");
    return {BasisKind::Legendre, 2.0 / (b - a), -(a + b) / (b - a), Interval{a, b}};
}

double BasisFamily::evaluate(int n, double k) const {
    if (n < 0) throw std::invalid_argument("BasisFamily::evaluate: n must be >= 0");
    if (!domain_.contains(k)) throw std::invalid_argument("BasisFamily::evaluate: k outside domain");
    const double x = scale_ * k + shift_;
    const double amp = std::sqrt(scale_);
    double v0 = seed(kind_, x);
    if (n == 0) return amp * v0;
    double v1 = first(kind_, x, v0);
    for (int m = 1; m < n; ++m) {
        const double v2 = step(kind_, m, x, v1, v0);
        v0 = v1;
        v1 = v2;
    }
    return amp * v1;
}

std::vector<double> BasisFamily::evaluate_batch(int n_max, double k) const {
    if (n_max < 0) throw std::invalid_argument("BasisFamily::evaluate_batch: n_max must be >= 0");
    if (!domain_.contains(k)) throw std::invalid_argument("BasisFamily::evaluate_batch: k outside domain");
    const double x = scale_ * k + shift_;
    const double amp = std::sqrt(scale_);
    std::vector<double> out(static_cast<size_t>(n_max) + 1);
    out[0] = seed(kind_, x);
    if (n_max >= 1) out[1] = first(kind_, x, out[0]);
    for (int m = 1; m < n_max; ++m) out[m + 1] = step(kind_, m, x, out[m], out[m - 1]);
    for (double& v : out) v *= amp;
    return out;
}

std::vector<std::vector<double>> BasisFamily::hermite_monomial_table(int n_max) {
    if (n_max < 0) throw std::invalid_argument("hermite_monomial_table: n_max must be >= 0");
    // same recurrence as evaluate, applied to monomial coefficient vectors
    std::vector<std::vector<double>> c(static_cast<size_t>(n_max) + 1);
    c[0] = {kPiQuarterInv};
    if (n_max >= 1) c[1] = {0.0, std::numbers::sqrt2 * kPiQuarterInv};
    for (int n = 1; n < n_max; ++n) {
        const double s1 = std::sqrt(2.0 / (n + 1));
        const double s2 = std::sqrt(double(n) / (n + 1));
        std::vector<double> next(static_cast<size_t>(n) + 2, 0.0);
        for (size_t d = 0; d < c[n].size(); ++d) next[d + 1] += s1 * c[n][d];
        for (size_t d = 0; d < c[n - 1].size(); ++d) next[d] -= s2 * c[n - 1][d];
        c[n + 1] = std::move(next);
    }
    return c;
}

}  // namespace cvschmidt
