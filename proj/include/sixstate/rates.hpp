#pragma once

#include <utility>
#include <vector>

#include "sixstate/twirl.hpp"

namespace sixstate {

/// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x), continuous at 0 and 1.
double binary_entropy(double x);

double binary_entropy_deriv(double x);

/// Phase-error entropy of the qubit-based six-state protocol (also the 1- and
/// 2-photon branch): e + (1-e) h(e / (2(1-e))).
double h12(double e_b);

/// Analytic derivative of h12; cross-checked against finite differences in tests.
double h12_prime(double e_b);

/// 3-photon phase-error entropy as a function of the bit-error and
/// fictitious-Y-error rates; equals h12 on the diagonal e_y = e_b.
double h3(double e_b, double e_y);

struct RegionParams {
    double u = 0.0;  // [0,1]
    double t = 0.0;  // [0,1]
    double s = 0.0;  // [-1,1]
};

/// (u,t,s) -> (r0,r1,r2) -> (e_b, e_y); image is the closed triangle with
/// vertices (1/4,1/3), (7/12,2/3), (3/4,1/2).
ErrorPoint region_map(const RegionParams& p, const SquashResult& sq);

/// Feasible e_y interval at a given e_b in [1/4, 3/4].
std::pair<double, double> region_bounds(double e_b);

/// Maximum of h3(e_b, .) over the feasible e_y interval (golden section).
double max_h3_at(double e_b);

struct TangentB {
    double e_b = 0.0;      // abscissa of B, where h12 meets 1 - h
    double slope = 0.0;    // tangent line to h12 at B
    double intercept = 0.0;
    double e_c = 0.0;      // where the tangent meets h(e) again
};

TangentB tangent_at_b();

/// Piecewise concave upper bound on H(Z|X): the h12 curve up to e_d, then the
/// tangent line anchored at the 3-photon vertex value v3 = h3(1/4, 1/3).
struct Envelope {
    double e_d = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
    double v3 = 0.0;
};

Envelope tangent_envelope();

double hzx_upper(double e_b, const Envelope& env);

enum class Protocol { SixStateThreshold, SixStateQubit, Bb84 };

/// Bit-error-rate threshold: the root of 1 - h(e) against the protocol's
/// phase-error entropy bound.
double threshold(Protocol protocol);

struct KeyRateRow {
    double e_b = 0.0;
    double hzx_upper = 0.0;
    double rate = 0.0;
    double n_sif = 1.0;
};

KeyRateRow keyrate(double e_b, const Envelope& env, double n_sif = 1.0);

/// Independent envelope oracle: upper concave hull of the sampled point cloud
/// (h12 curve, 3-photon region, and the h(e) boundary beyond the smallest
/// neglected-photon-number minimum), restricted to [0, 1/4].
std::vector<std::pair<double, double>> envelope_oracle(double grid_step);

/// Piecewise-linear evaluation of hull vertices.
double hull_value(const std::vector<std::pair<double, double>>& hull, double x);

struct NeglectReport {
    int nmax = 0;
    std::vector<int> photon_numbers;
    std::vector<double> min_bit_errors;
    double worst_margin = 0.0;  // min over grid of line - h(e)
    bool pass = false;
};

/// Certifies that photon numbers 4..nmax can be neglected: their minimum bit
/// error rate exceeds 0.25677 and h(e) stays under the envelope line there.
NeglectReport neglect_check(int nmax);

}  // namespace sixstate
