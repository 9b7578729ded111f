// Quadrature utilities: adaptive Gauss-Kronrod for finite panels (real- and
// complex-valued integrands) and Gauss-Laguerre rules for exponential tails.
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <Eigen/Eigenvalues>

#include "crowsense/errors.hpp"

namespace crowsense {

using complexd = std::complex<double>;

/// Adaptive Gauss-Kronrod (7-15) integration of a real-valued function.
template <class F>
double integrate_gk(F&& f, double a, double b, double rel_tol = 1e-10,
                    double* err_out = nullptr) {
    double err = 0.0;
    double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, /*max_depth=*/18, rel_tol, &err);
    if (err_out) *err_out = err;
    return v;
}

/// Adaptive Gauss-Kronrod integration of a complex-valued function,
/// performed on the real and imaginary parts independently so the error
/// control of the underlying real routine applies to each component.
template <class F>
complexd integrate_gk_complex(F&& f, double a, double b, double rel_tol = 1e-10,
                              double* err_out = nullptr) {
    double er = 0.0, ei = 0.0;
    double re = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        [&f](double x) { return f(x).real(); }, a, b, 18, rel_tol, &er);
    double im = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        [&f](double x) { return f(x).imag(); }, a, b, 18, rel_tol, &ei);
    if (err_out) *err_out = std::hypot(er, ei);
    return {re, im};
}

/// Gauss-Laguerre rule: integral_0^inf e^{-x} f(x) dx ~ sum_i w_i f(x_i).
/// Nodes/weights from the Golub-Welsch eigenproblem of the Laguerre Jacobi
/// matrix (diagonal 2i+1, off-diagonal i), cached per order.
struct LaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const LaguerreRule& get(int n) {
        static std::map<int, LaguerreRule> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;

        Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            jacobi(i, i) = 2.0 * i + 1.0;
            if (i > 0) {
                jacobi(i, i - 1) = static_cast<double>(i);
                jacobi(i - 1, i) = static_cast<double>(i);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
        LaguerreRule rule;
        rule.nodes.resize(n);
        rule.weights.resize(n);
        for (int i = 0; i < n; ++i) {
            rule.nodes[i] = solver.eigenvalues()(i);
            const double v0 = solver.eigenvectors()(0, i);
            rule.weights[i] = v0 * v0;  // total weight integral_0^inf e^{-x} dx = 1
        }
        return cache.emplace(n, std::move(rule)).first->second;
    }
};

/// integral_a^inf e^{-s x} h(x) dx with a Gauss-Laguerre rule of the given
/// order; s > 0 sets the decay scale, h must be subexponential.
template <class F>
complexd integrate_laguerre_tail(F&& h, double a, double s, int order = 64) {
    if (!(s > 0.0)) {
        throw domain_error(error_code::quadrature_failure,
                           "integrate_laguerre_tail: decay scale must be positive");
    }
    const LaguerreRule& rule = LaguerreRule::get(order);
    complexd sum = 0.0;
    for (int i = 0; i < order; ++i) {
        sum += rule.weights[i] * h(a + rule.nodes[i] / s);
    }
    return sum * std::exp(-s * a) / s;
}

}  // namespace crowsense
