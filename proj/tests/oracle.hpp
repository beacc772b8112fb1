#pragma once

// Independent numeric oracle for the descent criterion.  The monomial
// s^{m/2} e^{ik theta} induces F(z) = |z|^m e^{ik arg z} on the punctured
// disc; it extends to a smooth function at 0 iff it agrees with a polynomial.
// The oracle least-squares-fits F on sampled points by real polynomials in
// (u, v) through total degree m and thresholds the residual.  It shares no
// code path with mono_descends.

#include <Eigen/Dense>
#include <complex>

#include "cutkit/verify.hpp"

namespace oracle {

inline bool monomial_descends(int m, int k, uint64_t seed = 2024,
                              double threshold = 1e-8) {
    const int points = 200;
    cutkit::Rng rng(seed);

    std::vector<double> us(points), vs(points);
    std::vector<std::complex<double>> values(points);
    for (int i = 0; i < points; ++i) {
        double r = rng.uniform(0.05, 1.0);
        double phi = rng.uniform(0.0, 6.283185307179586);
        us[i] = r * std::cos(phi);
        vs[i] = r * std::sin(phi);
        values[i] = std::pow(r, m) * std::polar(1.0, k * phi);
    }

    std::vector<std::pair<int, int>> basis;
    for (int total = 0; total <= m; ++total)
        for (int a = 0; a <= total; ++a) basis.emplace_back(a, total - a);

    Eigen::MatrixXd vandermonde(points, basis.size());
    for (int i = 0; i < points; ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            vandermonde(i, j) =
                std::pow(us[i], basis[j].first) * std::pow(vs[i], basis[j].second);

    Eigen::VectorXd re(points), im(points);
    for (int i = 0; i < points; ++i) {
        re(i) = values[i].real();
        im(i) = values[i].imag();
    }
    auto solver = vandermonde.colPivHouseholderQr();
    Eigen::VectorXd residual_re = vandermonde * solver.solve(re) - re;
    Eigen::VectorXd residual_im = vandermonde * solver.solve(im) - im;
    double rms = std::sqrt((residual_re.squaredNorm() + residual_im.squaredNorm()) / points);
    return rms < threshold;
}

}  // namespace oracle
