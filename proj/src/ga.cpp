#include "orcas/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "orcas/bitmath.hpp"
#include "orcas/nprs.hpp"
#include "orcas/nprsd.hpp"

namespace orcas {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this x the truncated moment series for psi is accurate to ~1e-12.
constexpr double kPsiSeriesMax = 1e-3;
// Table endpoints. Above kTableMax the asymptotic expansion of phi takes over.
constexpr double kTableMin = 1e-4;
constexpr double kTableMax = kMuSaturation;
constexpr int kTableSize = 4096;

double integrand(double u, double x) {
    // e^{-u^2/(4x)} sech(u/2); positive, unimodal.
    double c = std::cosh(0.5 * u);
    return std::exp(-u * u / (4.0 * x)) / c;
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb, double whole,
                        double eps, int depth, double x) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = integrand(lm, x), frm = integrand(rm, x);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive_simpson(a, m, fa, flm, fm, left, 0.5 * eps, depth - 1, x) +
           adaptive_simpson(m, b, fm, frm, fb, right, 0.5 * eps, depth - 1, x);
}

double integrate_even(double x) {
    // int_0^inf of the integrand; the sech factor bounds the tail beyond 70
    // and the Gaussian factor bounds it for small x.
    double scale = std::sqrt(2.0 * x);  // std of the Gaussian factor
    std::vector<double> pts{0.0};
    for (double c : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0})
        if (c * scale < 70.0) pts.push_back(c * scale);
    for (double p : {1.0, 2.0, 5.0, 10.0, 20.0, 40.0, 70.0})
        if (p < 70.0 + 1e-9) pts.push_back(p);
    pts.push_back(70.0);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    double rough = std::min(std::sqrt(4.0 * kPi * x), 2.0 * kPi) * 0.5;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double a = pts[i], b = pts[i + 1];
        double fa = integrand(a, x), fb = integrand(b, x);
        double m = 0.5 * (a + b), fm = integrand(m, x);
        double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        total += adaptive_simpson(a, b, fa, fm, fb, whole, 1e-14 * rough, 48, x);
    }
    return total;
}

// Truncated moment expansion of psi(x) = E[tanh(L/2)], valid for small x.
double psi_series(double x) {
    return x * (0.5 + x * (-0.25 + x * (5.0 / 24.0 - x * 13.0 / 48.0)));
}

double log_phi_asymptotic(double x) {
    double corr = -kPi * kPi / (4.0 * x) + 5.0 * std::pow(kPi, 4) / (32.0 * x * x);
    return -0.25 * x + 0.5 * std::log(kPi / x) + std::log1p(corr);
}

struct PchipTable {
    double log_lo = 0.0, step = 0.0;
    std::vector<double> xs, ys, slopes;  // ys over log-spaced xs

    void build(std::vector<double> log_ys, double lo, double hi, int size) {
        log_lo = std::log(lo);
        step = (std::log(hi) - log_lo) / (size - 1);
        ys = std::move(log_ys);
        // Fritsch-Carlson monotone slopes on the uniform log-x grid.
        int n = size;
        std::vector<double> d(n - 1);
        for (int i = 0; i + 1 < n; ++i) d[i] = (ys[i + 1] - ys[i]) / step;
        slopes.assign(n, 0.0);
        slopes[0] = d[0];
        slopes[n - 1] = d[n - 2];
        for (int i = 1; i + 1 < n; ++i) {
            if (d[i - 1] == 0.0 || d[i] == 0.0 || (d[i - 1] > 0) != (d[i] > 0))
                slopes[i] = 0.0;
            else
                slopes[i] = 2.0 * d[i - 1] * d[i] / (d[i - 1] + d[i]);
        }
    }

    double eval(double x) const {
        double t = (std::log(x) - log_lo) / step;
        int i = std::clamp(static_cast<int>(t), 0, static_cast<int>(ys.size()) - 2);
        double s = t - i;  // in [0,1]
        double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
        double h10 = s * (1 - s) * (1 - s);
        double h01 = s * s * (3 - 2 * s);
        double h11 = s * s * (s - 1);
        return h00 * ys[i] + h10 * step * slopes[i] + h01 * ys[i + 1] + h11 * step * slopes[i + 1];
    }
};

struct PhiTables {
    PchipTable log_phi_tab;  // log phi over [kTableMin, kTableMax]
    PchipTable log_psi_tab;  // log psi over the same grid

    PhiTables() {
        std::vector<double> lphi(kTableSize), lpsi(kTableSize);
        double llo = std::log(kTableMin), lhi = std::log(kTableMax);
        for (int i = 0; i < kTableSize; ++i) {
            double x = std::exp(llo + (lhi - llo) * i / (kTableSize - 1));
            double integral = 2.0 * integrate_even(x);
            double lp = -0.25 * x + std::log(integral) - 0.5 * std::log(4.0 * kPi * x);
            lphi[i] = lp;
            lpsi[i] = x < kPsiSeriesMax ? std::log(psi_series(x)) : std::log(-std::expm1(lp));
        }
        log_phi_tab.build(std::move(lphi), kTableMin, kTableMax, kTableSize);
        log_psi_tab.build(std::move(lpsi), kTableMin, kTableMax, kTableSize);
    }
};

const PhiTables& tables() {
    static const PhiTables t;
    return t;
}

}  // namespace

double q_func(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double phi_quadrature(double x) {
    if (x < 0) throw std::invalid_argument("phi: negative mean");
    if (x == 0) return 1.0;
    double integral = 2.0 * integrate_even(x);
    return std::exp(-0.25 * x) * integral / std::sqrt(4.0 * kPi * x);
}

double log_phi(double x) {
    if (x <= 0) {
        if (x == 0) return 0.0;
        throw std::invalid_argument("log_phi: negative mean");
    }
    if (x < kTableMin) return std::log1p(-psi_series(x));
    if (x > kTableMax) return log_phi_asymptotic(x);
    return tables().log_phi_tab.eval(x);
}

double phi(double x) {
    if (x < 0) throw std::invalid_argument("phi: negative mean");
    if (x == 0) return 1.0;
    if (std::isinf(x)) return 0.0;
    // Route through psi while phi is close to 1; keeps phi_inv(phi(x))
    // consistent through a single table in the ill-conditioned region.
    if (x <= 2.0) return 1.0 - psi(x);
    return std::exp(log_phi(x));
}

double psi(double x) {
    if (x < 0) throw std::invalid_argument("psi: negative mean");
    if (x == 0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < kPsiSeriesMax) return psi_series(x);
    if (x > 60.0) return 1.0 - std::exp(log_phi(x));  // phi < 5e-8: no cancellation left
    return std::exp(tables().log_psi_tab.eval(x));
}

namespace {

// Solve log_phi(x) = target for x; bisection over the table, asymptotic
// Newton beyond it.
double phi_inv_from_log(double target) {
    if (target >= 0.0) return 0.0;
    if (target < log_phi_asymptotic(kTableMax)) {
        double x = -4.0 * target;  // leading order
        for (int it = 0; it < 60; ++it) {
            double fx = log_phi_asymptotic(x) - target;
            double deriv = -0.25 - 0.5 / x + kPi * kPi / (4.0 * x * x);
            double nx = x - fx / deriv;
            if (!(nx > kTableMax)) nx = kTableMax;
            if (std::abs(nx - x) <= 1e-12 * x) return nx;
            x = nx;
        }
        return x;
    }
    double lo = kTableMin, hi = kTableMax;
    if (target > log_phi(lo)) {
        // phi close to 1: invert the series region via psi.
        return psi_inv(-std::expm1(target));
    }
    for (int it = 0; it < 200 && hi - lo > 1e-12 * lo; ++it) {
        double mid = std::sqrt(lo * hi);
        if (log_phi(mid) > target) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double psi_inv(double y) {
    if (y < 0 || y >= 1) throw std::invalid_argument("psi_inv: argument outside [0,1)");
    if (y == 0) return 0.0;
    double y_series_max = psi_series(kPsiSeriesMax);
    if (y <= y_series_max) {
        double x = 2.0 * y;
        for (int it = 0; it < 8; ++it) {
            double fx = psi_series(x) - y;
            double deriv = 0.5 - 0.5 * x + (5.0 / 8.0) * x * x - (13.0 / 12.0) * x * x * x;
            x -= fx / deriv;
        }
        return x;
    }
    if (y >= psi(60.0)) {
        double one_minus = 1.0 - y;
        if (one_minus <= 0) return kInf;
        return phi_inv_from_log(std::log(one_minus));
    }
    double target = std::log(y);
    double lo = kPsiSeriesMax, hi = 60.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * lo; ++it) {
        double mid = std::sqrt(lo * hi);
        if (tables().log_psi_tab.eval(mid) < target) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double phi_inv(double y) {
    if (y <= 0 || y > 1) throw std::invalid_argument("phi_inv: argument outside (0,1]");
    if (y == 1) return 0.0;
    if (y > 0.5) return psi_inv(1.0 - y);
    return phi_inv_from_log(std::log(y));
}

double f_evolve(double mu) {
    if (mu < 0) throw std::invalid_argument("f_evolve: negative mean");
    if (mu == 0) return 0.0;
    if (std::isinf(mu)) return kInf;
    if (mu >= kMuSaturation) return mu - 4.0 * std::log(2.0);
    if (mu < 1.0) {
        double s = psi(mu);
        return psi_inv(s * s);
    }
    double lp = log_phi(mu);
    double p = std::exp(lp);
    // phi(f) = phi(mu) * (2 - phi(mu)), exact rearrangement of
    // 1 - (1 - phi)^2 that avoids cancellation.
    return phi_inv_from_log(lp + std::log(2.0 - p));
}

double check_combine_mu(double mu1, double mu2) {
    if (mu1 < 0 || mu2 < 0) throw std::invalid_argument("check_combine_mu: negative mean");
    if (mu1 == 0 || mu2 == 0) return 0.0;
    if (std::isinf(mu1)) return mu2;
    if (std::isinf(mu2)) return mu1;
    if (std::min(mu1, mu2) >= kMuSaturation) {
        // Both phis underflow; combine in the asymptotic log domain.
        double l1 = log_phi_asymptotic(mu1), l2 = log_phi_asymptotic(mu2);
        double hi = std::max(l1, l2), lo = std::min(l1, l2);
        return phi_inv_from_log(hi + std::log1p(std::exp(lo - hi)));
    }
    double s = psi(mu1) * psi(mu2);
    if (s < 0.45) return psi_inv(s);
    double l1 = log_phi(mu1), l2 = log_phi(mu2);
    if (l1 < l2) std::swap(l1, l2);  // l1 = larger phi
    double p1 = std::exp(l1);
    return phi_inv_from_log(l1 + std::log1p(std::exp(l2 - l1) * (1.0 - p1)));
}

double union_bound(double sigma, const WeightDistribution& weights) {
    if (!(sigma > 0)) throw std::invalid_argument("union_bound: sigma must be positive");
    double sum = 0.0;
    for (std::size_t w = 1; w < weights.counts.size(); ++w) {
        if (weights.counts[w] == 0) continue;
        double a = weights.counts[w].convert_to<double>();
        sum += a * q_func(std::sqrt(static_cast<double>(w)) / sigma);
    }
    return std::clamp(sum, 0.0, 1.0);
}

const WeightDistribution& cached_leaf_weights(int n, int k) {
    static std::map<std::pair<int, int>, WeightDistribution> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    unsigned lb = bit_length(static_cast<std::uint64_t>(n));
    WeightDistribution w = (k <= static_cast<int>(lb)) ? nprs_weight_distribution(n, k)
                                                       : nprsd_weight_distribution(n, k);
    return cache.emplace(std::make_pair(n, k), std::move(w)).first->second;
}

double leaf_bler(double mu, int n, int k) {
    if (mu < 0) throw std::invalid_argument("leaf_bler: negative mean");
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("leaf_bler: bad dimensions");
    unsigned lb = bit_length(static_cast<std::uint64_t>(n));
    if (k > static_cast<int>(lb) && k < n - static_cast<int>(lb))
        throw std::invalid_argument("leaf_bler: (n,k) is mid-rate, no leaf code exists");
    if (k == 0) return 0.0;
    if (std::isinf(mu)) return 0.0;

    double q = q_func(std::sqrt(mu / 2.0));  // Q(1/sigma)
    double uncoded = -std::expm1(static_cast<double>(n) * std::log1p(-q));
    if (mu == 0) return std::min(1.0, uncoded);
    double sigma = std::sqrt(2.0 / mu);
    double ub = union_bound(sigma, cached_leaf_weights(n, k));
    return std::min(ub, uncoded);
}

}  // namespace orcas
