#pragma once

#include <stdexcept>
#include <vector>

#include "orcas/tree.hpp"

namespace orcas {

// Per-position cumulative BLER p and activation order pi as produced by the
// density-evolution sweep: pi[i] is the i-th position to receive an
// information bit, p[pi[i]] the estimated BLER of the dimension-(i+1) code.
struct ReliabilityTable {
    std::vector<double> p;
    std::vector<int> pi;
};

struct EvolveDiagnostics {
    // Number of child tables whose p was no longer sorted along pi when the
    // parent merge consumed them (the min-override can cause this; the merge
    // is run verbatim regardless).
    int nonmonotone_children = 0;
};

// Density evolution with Gaussian approximation over the recursive halving
// of n, greedy merge of the two half tables, and the leaf-code min-override
// for dimensions where an NPRS/NPRSD code exists.
ReliabilityTable evolve(double mu, int n, EvolveDiagnostics* diag = nullptr);

// Same, with the leaf-code override step disabled (pure Plotkin recursion).
ReliabilityTable evolve_without_override(double mu, int n, EvolveDiagnostics* diag = nullptr);

// Rate profile with ones at the first k activation positions of
// evolve(4 * es_n0, n).
RateProfile design(int n, int k, double es_n0_linear, EvolveDiagnostics* diag = nullptr);

// Analytic BLER of a rate profile at Eb/N0 (linear): recursive
// p1 + p2 - p1 p2 combination over the implied tree with leaf values taken
// from evolve's table.
double evaluate(double eb_n0_linear, const RateProfile& profile);

struct SearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TargetDesign {
    RateProfile profile;
    double es_n0_linear = 0.0;
    double achieved_bler = 0.0;
};

// Bisection on the design SNR until the profile designed at that SNR
// evaluates to the target BLER within 2% relative. Throws SearchError after
// 100 iterations without convergence.
TargetDesign design_for_target(int n, int k, double target_bler);

}  // namespace orcas
