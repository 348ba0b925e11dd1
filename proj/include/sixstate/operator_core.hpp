#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "sixstate/errors.hpp"

namespace sixstate {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;

// Centralized numeric tolerances.
inline constexpr double kTolEig = 1e-10;
inline constexpr double kTolPsd = 1e-9;
inline constexpr double kTolRoot = 1e-9;

/// Eigendecomposition of a Hermitian operator, eigenvalues ascending,
/// eigenvectors as orthonormal columns.
struct EigenSystem {
    Eigen::VectorXd values;
    ComplexMatrix vectors;
};

inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

/// max |A - A^dagger| over entries; zero for exactly Hermitian input.
double hermiticity_error(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = kTolEig);

/// Kronecker (tensor) product, row-major index convention:
/// (a (x) b)(i*rb+k, j*cb+l) = a(i,j) b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
Ket kron(const Ket& a, const Ket& b);

/// n-fold Kronecker power.
ComplexMatrix kron_pow(const ComplexMatrix& a, int n);

/// Rank-one projector |v><v| / <v|v>.
ComplexMatrix projector(const Ket& v);

EigenSystem hermitian_eigensystem(const ComplexMatrix& h);

double min_eigenvalue(const ComplexMatrix& h);

/// Clip the spectrum at zero: sum_k max(lambda_k, 0) v_k v_k^dagger.
ComplexMatrix project_psd(const ComplexMatrix& h);

/// Deterministic bisection; requires a sign change on [lo, hi].
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol = kTolRoot);

}  // namespace sixstate
