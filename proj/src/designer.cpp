#include "orcas/designer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "orcas/ga.hpp"

namespace orcas {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The recursion bottoms out at lengths whose low-rate and high-rate leaf
// ranges jointly cover every dimension; checked once at load.
const bool leaf_ranges_cover = [] {
    for (int n : {1, 2, 3, 5, 7, 9}) {
        int lb = static_cast<int>(bit_length(static_cast<std::uint64_t>(n)));
        for (int k = 1; k <= n; ++k)
            if (k > lb && k < n - lb)
                throw std::logic_error("leaf dimension ranges do not cover 1..n");
    }
    return true;
}();

bool sorted_along(const ReliabilityTable& t) {
    for (std::size_t i = 1; i < t.pi.size(); ++i)
        if (t.p[static_cast<std::size_t>(t.pi[i])] <
            t.p[static_cast<std::size_t>(t.pi[i - 1])])
            return false;
    return true;
}

ReliabilityTable evolve_rec(double mu, int n, bool apply_override, EvolveDiagnostics* diag) {
    ReliabilityTable table;
    table.p.resize(static_cast<std::size_t>(n));
    table.pi.resize(static_cast<std::size_t>(n));

    if (n % 2 == 1 || n == 2) {
        // Leaf lengths: NPRS and NPRSD codes jointly cover every dimension.
        for (int k = 1; k <= n; ++k) {
            table.p[static_cast<std::size_t>(n - k)] = leaf_bler(mu, n, k);
            table.pi[static_cast<std::size_t>(n - k)] = k - 1;
        }
        return table;
    }

    ReliabilityTable u = evolve_rec(f_evolve(mu), n / 2, apply_override, diag);
    ReliabilityTable v = evolve_rec(g_evolve(mu), n / 2, apply_override, diag);
    if (diag && (!sorted_along(u) || !sorted_along(v))) ++diag->nonmonotone_children;

    int half = n / 2;
    int i = 0, j = 0;
    double ut = 0.0, vt = 0.0;
    for (int k = 1; k <= n; ++k) {
        double d1 = i < half ? (u.p[static_cast<std::size_t>(u.pi[i])] - ut) * (1.0 - vt) : kInf;
        double d2 = j < half ? (v.p[static_cast<std::size_t>(v.pi[j])] - vt) * (1.0 - ut) : kInf;
        int pos;
        if (d1 < d2) {
            ut = u.p[static_cast<std::size_t>(u.pi[i])];
            pos = u.pi[i];
            ++i;
        } else {
            vt = v.p[static_cast<std::size_t>(v.pi[j])];
            pos = v.pi[j] + half;
            ++j;
        }
        table.pi[static_cast<std::size_t>(k - 1)] = pos;
        table.p[static_cast<std::size_t>(pos)] = ut + vt - ut * vt;
    }

    if (apply_override) {
        unsigned lb = bit_length(static_cast<std::uint64_t>(n));
        std::set<int> override_dims;
        for (int k = 2; k <= static_cast<int>(lb); ++k) override_dims.insert(k);
        for (int k = n - static_cast<int>(lb); k <= n - 2; ++k)
            if (k >= 1) override_dims.insert(k);
        for (int k : override_dims) {
            int pos = table.pi[static_cast<std::size_t>(k - 1)];
            table.p[static_cast<std::size_t>(pos)] =
                std::min(table.p[static_cast<std::size_t>(pos)], leaf_bler(mu, n, k));
        }
    }
    return table;
}

}  // namespace

ReliabilityTable evolve(double mu, int n, EvolveDiagnostics* diag) {
    if (!length_supported(n)) throw std::invalid_argument("evolve: unsupported length");
    if (mu < 0) throw std::invalid_argument("evolve: negative mean");
    return evolve_rec(mu, n, true, diag);
}

ReliabilityTable evolve_without_override(double mu, int n, EvolveDiagnostics* diag) {
    if (!length_supported(n)) throw std::invalid_argument("evolve: unsupported length");
    return evolve_rec(mu, n, false, diag);
}

RateProfile design(int n, int k, double es_n0_linear, EvolveDiagnostics* diag) {
    if (k < 0 || k > n) throw std::invalid_argument("design: dimension out of range");
    ReliabilityTable table = evolve(4.0 * es_n0_linear, n, diag);
    RateProfile profile;
    profile.bits = BitVector(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i)
        profile.bits.set(static_cast<std::size_t>(table.pi[static_cast<std::size_t>(i)]), true);
    return profile;
}

namespace {

double evaluate_rec(double mu, const BitVector& bits, std::size_t begin, std::size_t len) {
    int k = 0;
    for (std::size_t i = begin; i < begin + len; ++i) k += bits.get(i);
    if (k == 0) return 0.0;
    int n = static_cast<int>(len);
    unsigned lb = bit_length(len);
    if (k <= static_cast<int>(lb) || k >= n - static_cast<int>(lb)) {
        ReliabilityTable table = evolve(mu, n);
        return table.p[static_cast<std::size_t>(table.pi[static_cast<std::size_t>(k - 1)])];
    }
    if (len % 2 != 0) throw std::invalid_argument("evaluate: malformed profile");
    double u = evaluate_rec(f_evolve(mu), bits, begin, len / 2);
    double v = evaluate_rec(g_evolve(mu), bits, begin + len / 2, len / 2);
    return u + v - u * v;
}

}  // namespace

double evaluate(double eb_n0_linear, const RateProfile& profile) {
    int n = profile.n(), k = profile.k();
    if (k == 0) return 0.0;
    double mu = 4.0 * (static_cast<double>(k) / n) * eb_n0_linear;
    return evaluate_rec(mu, profile.bits, 0, static_cast<std::size_t>(n));
}

TargetDesign design_for_target(int n, int k, double target_bler) {
    if (!(target_bler > 0.0 && target_bler < 1.0))
        throw std::invalid_argument("design_for_target: target outside (0,1)");
    if (k == 0) {
        TargetDesign out;
        out.profile.bits = BitVector(static_cast<std::size_t>(n));
        out.es_n0_linear = 1.0;
        out.achieved_bler = 0.0;
        return out;
    }
    double rate = static_cast<double>(k) / n;
    auto bler_at = [&](double es) {
        RateProfile p = design(n, k, es);
        return evaluate(es / rate, p);
    };
    double lo = 1e-4, hi = 1e4;
    for (int it = 0; it < 100; ++it) {
        double mid = std::sqrt(lo * hi);
        double b = bler_at(mid);
        if (b > 0.0 && std::fabs(b / target_bler - 1.0) <= 0.02) {
            TargetDesign out;
            out.profile = design(n, k, mid);
            out.es_n0_linear = mid;
            out.achieved_bler = b;
            return out;
        }
        if (b > target_bler) lo = mid; else hi = mid;
    }
    throw SearchError("design_for_target: no design SNR reaches the target BLER within 2%");
}

}  // namespace orcas
