#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sixstate/operator_core.hpp"

namespace sixstate {

enum class BasisAxis { X, Y, Z };
enum class BitValue : int { Minus = -1, Plus = +1 };

inline constexpr std::array<BasisAxis, 3> kAllAxes{BasisAxis::X, BasisAxis::Y, BasisAxis::Z};
inline constexpr std::array<BitValue, 2> kAllBits{BitValue::Plus, BitValue::Minus};

inline int sign(BitValue b) { return static_cast<int>(b); }

/// Largest photon number handled by default (dim-512 eigensolve).
inline constexpr int kNMaxDefault = 8;

ComplexMatrix pauli(BasisAxis axis);

/// Eigenket of sigma_axis with eigenvalue sign(bit).
/// Conventions: |Z+> = (1,0), |Z-> = (0,1), |X_b> = (|Z+> + b|Z->)/sqrt2,
/// |Y_b> = (|Z+> + i b|Z->)/sqrt2.
Ket basis_ket(BasisAxis axis, BitValue bit);

/// (|Z-,Z+> - |Z+,Z->)/sqrt2, invariant under g(x)g up to phase.
Ket singlet();

/// Dicke states of n qubits, ordered by number of down spins w = 0..n
/// (spin label m = (n - 2w)/2 descending).
std::vector<Ket> dicke_states(int n);

/// Splitting of the n-qubit space into the symmetric subspace H (rank n+1)
/// and its complement H-perp; states on H-perp always double-click.
struct SymmetricSplit {
    int n;
    ComplexMatrix pi_h;
    ComplexMatrix pi_hperp;
};

SymmetricSplit symmetric_split(int n);

/// Threshold-detector POVM element for outcome bit along axis on n photons:
/// (P(|a_b>)^{(x)n} - P(|a_-b>)^{(x)n} + 1)/2. The 1/2 on H-perp is the
/// random assignment of double clicks.
ComplexMatrix threshold_povm(BasisAxis axis, BitValue bit, int n);

/// T_a = M_{a,+1} - M_{a,-1} = P(|a_1>)^{(x)n} - P(|a_-1>)^{(x)n}.
ComplexMatrix basis_contrast(BasisAxis axis, int n);

/// Error observable on the 2^{n+1}-dim Alice(x)Bob space:
/// P(|a_1>)(x)M_{a_1} + P(|a_-1>)(x)M_{a_-1}.
ComplexMatrix error_povm(BasisAxis axis, int n);

/// Basis-averaged error observable (Gamma_X + Gamma_Y + Gamma_Z)/3.
ComplexMatrix avg_error_povm(int n);

/// Unital map F from qubit operators to 3-photon operators with
/// F(1)=1, F(sigma_x)=T_x, F(sigma_z)=T_z, F(sigma_y)=y_op, certified
/// completely positive through its 16x16 Choi matrix. This is the adjoint
/// of a squashing map compatible with the X/Z threshold measurements.
struct SquashResult {
    ComplexMatrix y_op;  // Hermitian, 8x8, supported on the symmetric subspace
    ComplexMatrix choi;  // 16x16
    double choi_min_eig = 0.0;
    double constraint_residual = 0.0;
    std::optional<double> lambda_ansatz;
    std::optional<std::vector<ComplexMatrix>> kraus;  // 8x2 blocks, F(X) = sum A X A^dag
};

SquashResult construct_squash_y();

/// Apply the map encoded by a Choi matrix (dims 2 -> 8): F(X) = Tr_in[(X^T (x) 1) C].
ComplexMatrix apply_choi_map(const ComplexMatrix& choi, const ComplexMatrix& x);

/// POVM element for the fictitious Y-basis error on the squashed qubit pair:
/// (1(x)1 + sigma_y (x) y_op)/2 on the 16-dim space.
ComplexMatrix ytilde_error_povm(const SquashResult& sq);

struct ClickStats {
    std::int64_t trials = 0;
    std::int64_t plus = 0;
    std::int64_t minus = 0;
    double freq_plus = 0.0;
    double prob_plus = 0.0;  // Tr[M_{axis,+1} state]
};

/// Sample threshold-detector outcomes from a density operator on Bob's
/// 2^n-dim space; deterministic for a fixed seed (mt19937_64).
ClickStats simulate_clicks(const ComplexMatrix& state, BasisAxis axis, int n, std::int64_t trials,
                           std::uint64_t seed);

}  // namespace sixstate
