#include "sixstate/states.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "sixstate/twirl.hpp"

namespace sixstate {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_photon_number(int n) {
    if (n < 1 || n > kNMaxDefault)
        throw BadPhotonNumberError("photon number " + std::to_string(n) + " outside 1.." +
                                   std::to_string(kNMaxDefault));
}

double binom(int n, int k) {
    double out = 1.0;
    for (int i = 1; i <= k; ++i) out *= static_cast<double>(n - k + i) / i;
    return out;
}

}  // namespace

ComplexMatrix pauli(BasisAxis axis) {
    ComplexMatrix s(2, 2);
    switch (axis) {
        case BasisAxis::X:
            s << 0, 1, 1, 0;
            break;
        case BasisAxis::Y:
            s << 0, -kI, kI, 0;
            break;
        case BasisAxis::Z:
            s << 1, 0, 0, -1;
            break;
    }
    return s;
}

Ket basis_ket(BasisAxis axis, BitValue bit) {
    Ket v(2);
    const double b = sign(bit);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (axis) {
        case BasisAxis::Z:
            v << (bit == BitValue::Plus ? 1.0 : 0.0), (bit == BitValue::Plus ? 0.0 : 1.0);
            break;
        case BasisAxis::X:
            v << inv_sqrt2, b * inv_sqrt2;
            break;
        case BasisAxis::Y:
            v << inv_sqrt2, kI * b * inv_sqrt2;
            break;
    }
    return v;
}

Ket singlet() {
    Ket v = Ket::Zero(4);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    v(2) = inv_sqrt2;   // |Z-,Z+>
    v(1) = -inv_sqrt2;  // |Z+,Z->
    return v;
}

std::vector<Ket> dicke_states(int n) {
    check_photon_number(n);
    const int dim = 1 << n;
    std::vector<Ket> out;
    out.reserve(n + 1);
    for (int w = 0; w <= n; ++w) {
        Ket v = Ket::Zero(dim);
        const double amp = 1.0 / std::sqrt(binom(n, w));
        for (int x = 0; x < dim; ++x)
            if (std::popcount(static_cast<unsigned>(x)) == w) v(x) = amp;
        out.push_back(std::move(v));
    }
    return out;
}

SymmetricSplit symmetric_split(int n) {
    check_photon_number(n);
    const int dim = 1 << n;
    ComplexMatrix pi_h = ComplexMatrix::Zero(dim, dim);
    for (const Ket& d : dicke_states(n)) pi_h += d * d.adjoint();
    return SymmetricSplit{n, pi_h, identity(dim) - pi_h};
}

ComplexMatrix threshold_povm(BasisAxis axis, BitValue bit, int n) {
    check_photon_number(n);
    const ComplexMatrix p_same = kron_pow(projector(basis_ket(axis, bit)), n);
    const BitValue other = (bit == BitValue::Plus) ? BitValue::Minus : BitValue::Plus;
    const ComplexMatrix p_opp = kron_pow(projector(basis_ket(axis, other)), n);
    return 0.5 * (p_same - p_opp + identity(1 << n));
}

ComplexMatrix basis_contrast(BasisAxis axis, int n) {
    check_photon_number(n);
    return kron_pow(projector(basis_ket(axis, BitValue::Plus)), n) -
           kron_pow(projector(basis_ket(axis, BitValue::Minus)), n);
}

ComplexMatrix error_povm(BasisAxis axis, int n) {
    check_photon_number(n);
    ComplexMatrix gamma = ComplexMatrix::Zero(1 << (n + 1), 1 << (n + 1));
    for (BitValue b : kAllBits)
        gamma += kron(projector(basis_ket(axis, b)), threshold_povm(axis, b, n));
    return gamma;
}

ComplexMatrix avg_error_povm(int n) {
    check_photon_number(n);
    ComplexMatrix gbar = ComplexMatrix::Zero(1 << (n + 1), 1 << (n + 1));
    for (BasisAxis axis : kAllAxes) gbar += error_povm(axis, n);
    return gbar / 3.0;
}

ComplexMatrix apply_choi_map(const ComplexMatrix& choi, const ComplexMatrix& x) {
    if (x.rows() != 2 || x.cols() != 2) throw BadDimensionError("apply_choi_map: input must be 2x2");
    // C = sum_ij |i><j| (x) F(|i><j|), so F(X) = sum_ij X(i,j) C_block(i,j)
    const Eigen::Index d = choi.rows() / 2;
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) out += x(i, j) * choi.block(i * d, j * d, d, d);
    return out;
}

namespace {

ComplexMatrix assemble_choi(const ComplexMatrix& t_x, const ComplexMatrix& t_z,
                            const ComplexMatrix& y) {
    const ComplexMatrix one = identity(8);
    ComplexMatrix choi(16, 16);
    choi.block(0, 0, 8, 8) = 0.5 * (one + t_z);   // F(|0><0|)
    choi.block(8, 8, 8, 8) = 0.5 * (one - t_z);   // F(|1><1|)
    choi.block(0, 8, 8, 8) = 0.5 * (t_x + kI * y);  // F(|0><1|), |0><1| = (sx + i sy)/2
    choi.block(8, 0, 8, 8) = 0.5 * (t_x - kI * y);
    return choi;
}

// Functional gradients G_i with Tr[(sigma_y (x) y) P_i] = Tr[y G_i].
ComplexMatrix constraint_gradient(const ComplexMatrix& p) {
    const ComplexMatrix sy = pauli(BasisAxis::Y);
    ComplexMatrix g = ComplexMatrix::Zero(8, 8);
    for (Eigen::Index q = 0; q < 8; ++q)
        for (Eigen::Index pp = 0; pp < 8; ++pp) {
            Complex acc = 0.0;
            for (Eigen::Index a = 0; a < 2; ++a)
                for (Eigen::Index b = 0; b < 2; ++b) acc += sy(a, b) * p(b * 8 + q, a * 8 + pp);
            g(q, pp) = acc;
        }
    return g;
}

double squash_residual(const ComplexMatrix& y, const std::array<ComplexMatrix, 3>& grads,
                       const std::array<double, 3>& targets) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        r = std::max(r, std::abs((y * grads[i]).trace().real() - targets[i]));
    return r;
}

}  // namespace

SquashResult construct_squash_y() {
    const ComplexMatrix t_x = basis_contrast(BasisAxis::X, 3);
    const ComplexMatrix t_y = basis_contrast(BasisAxis::Y, 3);
    const ComplexMatrix t_z = basis_contrast(BasisAxis::Z, 3);
    const ProjectorSet& ps = projectors();
    const std::array<ComplexMatrix, 3> grads{constraint_gradient(ps.p0), constraint_gradient(ps.p1),
                                             constraint_gradient(ps.p2)};
    const std::array<double, 3> targets{1.0, -1.0, 0.0};

    SquashResult out;

    // Step 1: ansatz y = lambda T_y, lambda fixed by the P0 constraint.
    const double c0 = (t_y * grads[0]).trace().real();
    if (std::abs(c0) > 1e-12) {
        const double lambda = targets[0] / c0;
        ComplexMatrix y = lambda * t_y;
        const double res = squash_residual(y, grads, targets);
        const ComplexMatrix choi = assemble_choi(t_x, t_z, y);
        const double min_eig = min_eigenvalue(choi);
        if (res <= kTolPsd && min_eig >= -kTolPsd) {
            out.y_op = std::move(y);
            out.choi = choi;
            out.choi_min_eig = min_eig;
            out.constraint_residual = res;
            out.lambda_ansatz = lambda;
        }
    }

    if (!out.lambda_ansatz) {
        // Fallback: Dykstra alternating projections between the PSD cone and
        // the affine set {Choi of a map with the required block traces}.
        ComplexMatrix y = ComplexMatrix::Zero(8, 8);
        ComplexMatrix choi = assemble_choi(t_x, t_z, y);
        ComplexMatrix correction = ComplexMatrix::Zero(16, 16);
        Eigen::Matrix3d gram;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) gram(i, j) = (grads[i] * grads[j]).trace().real();
        // The gradients sum to zero (so does the target vector), so the Gram
        // matrix is rank-deficient; use the pseudo-inverse for the multipliers.
        const Eigen::Matrix3d gram_pinv =
            gram.completeOrthogonalDecomposition().pseudoInverse();

        auto project_affine = [&](const ComplexMatrix& c) {
            const ComplexMatrix b01 = c.block(0, 8, 8, 8);
            const ComplexMatrix d = 2.0 * b01 - t_x;
            ComplexMatrix y0 = -kI * d;
            y0 = 0.5 * (y0 + y0.adjoint());
            Eigen::Vector3d rhs;
            for (int i = 0; i < 3; ++i) rhs(i) = targets[i] - (y0 * grads[i]).trace().real();
            const Eigen::Vector3d mu = gram_pinv * rhs;
            for (int i = 0; i < 3; ++i) y0 += mu(i) * grads[i];
            return std::pair{assemble_choi(t_x, t_z, y0), y0};
        };

        const int max_iters = 100000;
        for (int it = 0; it < max_iters; ++it) {
            auto [affine, y_new] = project_affine(choi);
            const ComplexMatrix shifted = affine + correction;
            const ComplexMatrix psd = project_psd(shifted);
            correction = shifted - psd;
            const double step = (psd - choi).cwiseAbs().maxCoeff();
            choi = psd;
            y = y_new;
            if (step < 1e-12) break;
        }
        const auto [affine_final, y_final] = project_affine(choi);
        const double res = squash_residual(y_final, grads, targets);
        const ComplexMatrix choi_final = assemble_choi(t_x, t_z, y_final);
        const double min_eig = min_eigenvalue(choi_final);
        if (res > 1e-7 || min_eig < -1e-7)
            throw InfeasibleError("construct_squash_y: Dykstra stalled, constraint residual " +
                                  std::to_string(res) + ", Choi min eigenvalue " +
                                  std::to_string(min_eig));
        out.y_op = y_final;
        out.choi = choi_final;
        out.choi_min_eig = min_eig;
        out.constraint_residual = res;
    }

    // Kraus operators of F from the Choi eigendecomposition.
    EigenSystem es = hermitian_eigensystem(out.choi);
    std::vector<ComplexMatrix> kraus;
    for (Eigen::Index k = 0; k < 16; ++k) {
        if (es.values(k) <= 1e-10) continue;
        ComplexMatrix a(8, 2);
        for (Eigen::Index i = 0; i < 2; ++i) a.col(i) = es.vectors.col(k).segment(i * 8, 8);
        kraus.push_back(std::sqrt(es.values(k)) * a);
    }
    out.kraus = std::move(kraus);
    return out;
}

ComplexMatrix ytilde_error_povm(const SquashResult& sq) {
    return 0.5 * (identity(16) + kron(pauli(BasisAxis::Y), sq.y_op));
}

ClickStats simulate_clicks(const ComplexMatrix& state, BasisAxis axis, int n, std::int64_t trials,
                           std::uint64_t seed) {
    check_photon_number(n);
    if (trials < 1) throw DomainError("simulate_clicks: trials must be >= 1");
    const Eigen::Index dim = 1 << n;
    if (state.rows() != dim || state.cols() != dim)
        throw BadDimensionError("simulate_clicks: state dimension mismatch");
    if (!is_hermitian(state, kTolPsd) || std::abs(state.trace().real() - 1.0) > kTolPsd ||
        min_eigenvalue(0.5 * (state + state.adjoint())) < -kTolPsd)
        throw NotDensityOperatorError("simulate_clicks: state is not a density operator");

    const ComplexMatrix m_plus = threshold_povm(axis, BitValue::Plus, n);
    double p = (m_plus * state).trace().real();
    p = std::clamp(p, 0.0, 1.0);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    ClickStats stats;
    stats.trials = trials;
    stats.prob_plus = p;
    for (std::int64_t t = 0; t < trials; ++t) {
        if (unif(rng) < p)
            ++stats.plus;
        else
            ++stats.minus;
    }
    stats.freq_plus = static_cast<double>(stats.plus) / static_cast<double>(trials);
    return stats;
}

}  // namespace sixstate
