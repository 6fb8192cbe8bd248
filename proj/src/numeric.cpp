#include "tg/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace tg {

double to_double(const Rational& q) { return q.get_d(); }

namespace {

using cd = std::complex<double>;

// f(z) and f'(z) in one Horner pass.
std::pair<cd, cd> eval_with_derivative(const std::vector<cd>& c, const cd& z) {
    cd f(0.0), df(0.0);
    for (std::size_t i = c.size(); i-- > 0;) {
        df = df * z + f;
        f = f * z + c[i];
    }
    return {f, df};
}

}  // namespace

double relative_residual(const std::vector<cd>& c, const cd& z) {
    cd f(0.0);
    double scale = 0.0;
    const double az = std::abs(z);
    for (std::size_t i = c.size(); i-- > 0;) {
        f = f * z + c[i];
        scale = scale * az + std::abs(c[i]);
    }
    return std::abs(f) / std::max(1.0, scale);
}

std::vector<cd> numeric_roots(const std::vector<cd>& ascending, const NumericOptions& opts) {
    std::vector<cd> c(ascending);
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.empty()) throw ArgumentError("numeric_roots of the zero polynomial");
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg == 0) return {};

    std::vector<cd> roots;
    // Exact zeros at the origin deflate cleanly and would otherwise stall the
    // simultaneous iteration.
    std::size_t low = 0;
    while (low < c.size() && std::abs(c[low]) == 0.0) ++low;
    for (std::size_t i = 0; i < low; ++i) roots.push_back(cd(0.0, 0.0));
    if (low > 0) c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
    const int d = static_cast<int>(c.size()) - 1;
    if (d == 0) return roots;
    if (d == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }

    // Cauchy bound for the start circle, with deterministic jitter so symmetric
    // configurations do not trap the iteration.
    double maxratio = 0.0;
    for (int i = 0; i < d; ++i) maxratio = std::max(maxratio, std::abs(c[static_cast<std::size_t>(i)]) / std::abs(c.back()));
    const double radius = 1.0 + maxratio;
    std::vector<cd> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        double angle = 2.0 * M_PI * k / d + 0.4;
        double r = radius * (0.5 + 0.3 * (k + 1.0) / d);
        z[static_cast<std::size_t>(k)] = cd(r * std::cos(angle), r * std::sin(angle));
    }

    bool converged = false;
    for (int iter = 0; iter < opts.max_iterations && !converged; ++iter) {
        double worst_move = 0.0;
        for (int k = 0; k < d; ++k) {
            auto& zk = z[static_cast<std::size_t>(k)];
            auto [f, df] = eval_with_derivative(c, zk);
            if (std::abs(f) == 0.0) continue;
            cd newton = (df == cd(0.0)) ? cd(1e-3, 1e-3) : f / df;
            cd repulse(0.0);
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                cd diff = zk - z[static_cast<std::size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = cd(1e-12, 1e-12);
                repulse += cd(1.0) / diff;
            }
            cd denom = cd(1.0) - newton * repulse;
            cd step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
            zk -= step;
            worst_move = std::max(worst_move, std::abs(step) / std::max(1.0, std::abs(zk)));
        }
        converged = worst_move < opts.movement_tol;
    }

    double worst = 0.0;
    for (const cd& zk : z) worst = std::max(worst, relative_residual(c, zk));
    if (!converged && worst > opts.residual_tol)
        throw NumericError("numeric_roots: no convergence after " + std::to_string(opts.max_iterations) +
                           " iterations (residual " + std::to_string(worst) + ")");
    if (worst > opts.residual_tol)
        throw NumericError("numeric_roots: converged but residual " + std::to_string(worst) +
                           " exceeds tolerance");

    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

std::vector<cd> numeric_roots(const PolyQ& f, const NumericOptions& opts) {
    std::vector<cd> c;
    c.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (int k = 0; k <= f.degree(); ++k) c.emplace_back(to_double(f.coeff(k)), 0.0);
    return numeric_roots(c, opts);
}

}  // namespace tg
