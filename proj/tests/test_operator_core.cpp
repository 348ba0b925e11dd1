#include <doctest.h>

#include <random>

#include "sixstate/operator_core.hpp"
#include "sixstate/rates.hpp"

using namespace sixstate;

namespace {

ComplexMatrix random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_CASE("kron basics") {
    CHECK((kron(identity(2), identity(2)) - identity(4)).cwiseAbs().maxCoeff() == 0.0);

    // sigma_z (x) sigma_z on |0>(x)|1> has eigenvalue -1
    ComplexMatrix sz(2, 2);
    sz << 1, 0, 0, -1;
    Ket v = Ket::Zero(4);
    v(1) = 1.0;  // |0>(x)|1>
    CHECK(((kron(sz, sz) * v + v).cwiseAbs().maxCoeff()) < 1e-15);

    std::mt19937_64 rng(1);
    const ComplexMatrix a = random_hermitian(2, rng), b = random_hermitian(2, rng),
                        c = random_hermitian(2, rng);
    CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK(kron(a, b).rows() == 4);
    CHECK((kron(a, b) * kron(b, c) - kron((a * b).eval(), (b * c).eval())).cwiseAbs().maxCoeff() <=
          1e-13);
}

TEST_CASE("hermitian eigensystem") {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = 3;
    d(1, 1) = 1;
    d(2, 2) = 2;
    const EigenSystem es = hermitian_eigensystem(d);
    CHECK(es.values(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(es.values(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(es.values(2) == doctest::Approx(3.0).epsilon(1e-12));

    ComplexMatrix sx(2, 2);
    sx << 0, 1, 1, 0;
    const EigenSystem x = hermitian_eigensystem(sx);
    CHECK(x.values(0) == doctest::Approx(-1.0));
    CHECK(x.values(1) == doctest::Approx(1.0));
    // eigenvectors proportional to (1, -1)/sqrt2 and (1, 1)/sqrt2
    CHECK(std::abs(x.vectors(0, 0) / x.vectors(1, 0) + 1.0) < 1e-12);
    CHECK(std::abs(x.vectors(0, 1) / x.vectors(1, 1) - 1.0) < 1e-12);

    std::mt19937_64 rng(2);
    const ComplexMatrix h = random_hermitian(16, rng);
    const EigenSystem e16 = hermitian_eigensystem(h);
    const ComplexMatrix back = e16.vectors * e16.values.asDiagonal() * e16.vectors.adjoint();
    CHECK((h - back).cwiseAbs().maxCoeff() <= 1e-10 * h.cwiseAbs().maxCoeff());
    CHECK((e16.vectors.adjoint() * e16.vectors - identity(16)).cwiseAbs().maxCoeff() <= 1e-10);

    ComplexMatrix bad(2, 2);
    bad << 0, 1, 0, 0;
    CHECK_THROWS_AS(hermitian_eigensystem(bad), NonHermitianError);
}

TEST_CASE("psd projection") {
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 1;
    d(1, 1) = -1;
    const ComplexMatrix p = project_psd(d);
    CHECK(p(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(p(1, 1)) < 1e-12);

    CHECK((project_psd(p) - p).cwiseAbs().maxCoeff() <= 1e-12);

    ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
    neg(0, 0) = -2;
    neg(1, 1) = -3;
    CHECK(project_psd(neg).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("bisection") {
    CHECK(bisect_root([](double x) { return x - 0.5; }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(0.5).epsilon(1e-10));
    CHECK(bisect_root([](double x) { return binary_entropy(x) - 0.5; }, 0.05, 0.3, 1e-12) ==
          doctest::Approx(0.110028).epsilon(1e-5));
    CHECK(bisect_root([](double x) { return x * x - 2.0; }, 1.0, 2.0, 1e-12) ==
          doctest::Approx(1.414214).epsilon(1e-6));
    CHECK_THROWS_AS(bisect_root([](double x) { return x + 1.0; }, 0.0, 1.0, 1e-12),
                    NoBracketError);
}
