#include "sixstate/operator_core.hpp"

#include <cmath>

namespace sixstate {

double hermiticity_error(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw BadDimensionError("hermiticity_error: matrix not square");
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return hermiticity_error(a) <= tol * scale;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Ket kron(const Ket& a, const Ket& b) {
    Ket out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

ComplexMatrix kron_pow(const ComplexMatrix& a, int n) {
    if (n < 1) throw BadDimensionError("kron_pow: exponent must be >= 1");
    ComplexMatrix out = a;
    for (int k = 1; k < n; ++k) out = kron(out, a);
    return out;
}

ComplexMatrix projector(const Ket& v) {
    double n2 = v.squaredNorm();
    if (n2 <= 0.0) throw BadDimensionError("projector: zero vector");
    return (v * v.adjoint()) / n2;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& h) {
    if (!is_hermitian(h))
        throw NonHermitianError("hermitian_eigensystem: input deviates from Hermitian by " +
                                std::to_string(hermiticity_error(h)));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw NoConvergenceError(
            "hermitian_eigensystem: QR iteration failed to converge within the "
            "solver's internal iteration budget (dim " +
            std::to_string(h.rows()) + ")");
    return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const ComplexMatrix& h) { return hermitian_eigensystem(h).values(0); }

ComplexMatrix project_psd(const ComplexMatrix& h) {
    EigenSystem es = hermitian_eigensystem(h);
    Eigen::VectorXd clipped = es.values.cwiseMax(0.0);
    return es.vectors * clipped.asDiagonal() * es.vectors.adjoint();
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (tol <= 0.0) throw DomainError("bisect_root: tol must be positive");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoBracketError("bisect_root: no sign change on [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // bracket at machine resolution
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace sixstate
