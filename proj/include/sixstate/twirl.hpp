#pragma once

#include <vector>

#include "sixstate/states.hpp"

namespace sixstate {

/// 2x2 unitary with canonical phase (first nonzero entry real positive);
/// one representative per projective class.
struct GroupElement {
    ComplexMatrix u;
};

/// Closure of the pi/2 rotations about X, Y, Z modulo global phase:
/// the 24-element octahedral rotation group, deterministically ordered.
using GroupSet = std::vector<GroupElement>;

GroupSet enumerate_group();

/// Block projectors of the twirled 16-dim Alice(x)Bob space:
/// p0, p1, p2 on qubit(x)H with ranks 3, 3, 2; q = 1(x)pi_hperp, rank 8.
struct ProjectorSet {
    ComplexMatrix p0, p1, p2, q;
};

const ProjectorSet& projectors();

ProjectorSet build_projectors();

/// Coordinates of a twirled state: rho = r0 P0 + r1 P1 + r2 P2 + r3 1_{Hperp}.
struct RCoefficients {
    double r0 = 0.0, r1 = 0.0, r2 = 0.0, r3 = 0.0;
};

struct ErrorPoint {
    double e_b = 0.0;
    double e_y = 0.0;
};

/// Symmetrization channel: group average with g applied to all four qubits,
/// followed by the analytic Haar twirl of the qubit(x)Hperp block.
ComplexMatrix twirl(const ComplexMatrix& rho);

/// Extract (r0, r1, r2, r3) from a state in the twirl fixed space.
RCoefficients decompose(const ComplexMatrix& rho_sym);

/// Residual of the best fit of rho onto span{p0, p1, p2, q}.
double fixed_space_residual(const ComplexMatrix& rho);

/// Closed-form error rates, r3 eliminated via the unit-trace condition:
/// e_b = r0/4 - 3 r1/4 + r2/2 + 1/2, e_y = r0/2 - r1/2 + 1/2.
/// Cross-validated against direct traces of Gamma_Z and Gamma~_y.
ErrorPoint error_rates(const RCoefficients& r, const SquashResult& sq);

struct LinearFormReport {
    // block traces Tr[Gamma P_i] and Tr[Gamma q]
    std::array<double, 4> gamma_z_traces{};
    std::array<double, 4> gamma_y_traces{};
    // coefficients after r3 elimination, last entry the constant term
    std::array<double, 4> e_b_coeffs{};
    std::array<double, 4> e_y_coeffs{};
    double max_residual = 0.0;
    bool pass = false;
};

/// Recover the closed-form coefficient sets from the constructed operators
/// and report the worst deviation.
LinearFormReport verify_linear_forms(const SquashResult& sq);

}  // namespace sixstate
