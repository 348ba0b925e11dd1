#include "sixstate/twirl.hpp"

#include <algorithm>
#include <cmath>

namespace sixstate {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix canonical_phase(const ComplexMatrix& u) {
    for (Eigen::Index i = 0; i < u.rows(); ++i)
        for (Eigen::Index j = 0; j < u.cols(); ++j) {
            const Complex z = u(i, j);
            if (std::abs(z) > 1e-9) return u * (std::abs(z) / z);
        }
    throw BadDimensionError("canonical_phase: zero matrix");
}

// rounded row-major (re, im) key for dedup and deterministic ordering
std::array<long long, 8> element_key(const ComplexMatrix& u) {
    std::array<long long, 8> key{};
    int k = 0;
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) {
            key[k++] = std::llround(u(i, j).real() * 1e6);
            key[k++] = std::llround(u(i, j).imag() * 1e6);
        }
    return key;
}

}  // namespace

GroupSet enumerate_group() {
    std::vector<ComplexMatrix> gens;
    for (BasisAxis axis : kAllAxes) {
        // exp(-i pi sigma/4) = (1 - i sigma)/sqrt2
        gens.push_back(canonical_phase((identity(2) - kI * pauli(axis)) / std::sqrt(2.0)));
    }

    std::vector<std::pair<std::array<long long, 8>, ComplexMatrix>> found;
    auto insert = [&](const ComplexMatrix& u) {
        const auto key = element_key(u);
        for (const auto& [k, v] : found)
            if (k == key) return false;
        found.emplace_back(key, u);
        return true;
    };

    insert(canonical_phase(identity(2)));
    bool grew = true;
    while (grew) {
        grew = false;
        const auto snapshot = found;
        for (const auto& [k1, a] : snapshot)
            for (const ComplexMatrix& g : gens)
                if (insert(canonical_phase(g * a))) grew = true;
        if (found.size() > 48)
            throw ClosureOverflowError("enumerate_group: closure exceeded 48 candidates");
    }

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    GroupSet out;
    out.reserve(found.size());
    for (auto& [k, u] : found) out.push_back(GroupElement{std::move(u)});
    return out;
}

namespace {

// |a> (x) |3/2, m>: Alice Z component a in {+,-}, Bob Dicke label m = (3-2w)/2.
Ket labeled_ket(int alice_down, int bob_w, const std::vector<Ket>& dicke) {
    Ket a = Ket::Zero(2);
    a(alice_down) = 1.0;
    return kron(a, dicke[static_cast<std::size_t>(bob_w)]);
}

ComplexMatrix span_projector(std::vector<Ket> vecs) {
    // Gram-Schmidt in the listed order
    std::vector<Ket> ortho;
    for (Ket& v : vecs) {
        for (const Ket& u : ortho) v -= u * (u.adjoint() * v)(0);
        v.normalize();
        ortho.push_back(std::move(v));
    }
    ComplexMatrix p = ComplexMatrix::Zero(16, 16);
    for (const Ket& u : ortho) p += u * u.adjoint();
    return p;
}

}  // namespace

ProjectorSet build_projectors() {
    const auto dicke = dicke_states(3);
    const double s3 = std::sqrt(3.0);
    // index helpers: Alice + -> 0, - -> 1; Bob m = 3/2,1/2,-1/2,-3/2 -> w = 0,1,2,3
    auto k = [&](int alice_down, int w) { return labeled_ket(alice_down, w, dicke); };

    ProjectorSet ps;
    ps.p0 = span_projector({k(1, 3) - k(0, 0),        // |-,-3/2> - |+,3/2>
                            s3 * k(1, 2) + k(0, 3),   // sqrt3|-,-1/2> + |+,-3/2>
                            s3 * k(0, 1) + k(1, 0)}); // sqrt3|+,1/2> + |-,3/2>
    ps.p1 = span_projector({k(1, 1) - k(0, 2),        // |-,1/2> - |+,-1/2>
                            k(1, 2) - s3 * k(0, 3),   // |-,-1/2> - sqrt3|+,-3/2>
                            k(0, 1) - s3 * k(1, 0)}); // |+,1/2> - sqrt3|-,3/2>
    ps.p2 = span_projector({k(1, 1) + k(0, 2),        // |-,1/2> + |+,-1/2>
                            k(1, 3) + k(0, 0)});      // |-,-3/2> + |+,3/2>
    ps.q = kron(identity(2), symmetric_split(3).pi_hperp);
    return ps;
}

const ProjectorSet& projectors() {
    static const ProjectorSet ps = build_projectors();
    return ps;
}

namespace {

const std::vector<ComplexMatrix>& group_fourfold() {
    static const std::vector<ComplexMatrix> g4 = [] {
        std::vector<ComplexMatrix> out;
        for (const GroupElement& g : enumerate_group())
            out.push_back(kron(g.u, kron_pow(g.u, 3)));
        return out;
    }();
    return g4;
}

}  // namespace

ComplexMatrix twirl(const ComplexMatrix& rho) {
    if (rho.rows() != 16 || rho.cols() != 16) throw BadDimensionError("twirl: expected 16x16");
    if (!is_hermitian(rho, 1e-9)) throw BadDimensionError("twirl: expected Hermitian input");
    const auto& g4 = group_fourfold();
    ComplexMatrix avg = ComplexMatrix::Zero(16, 16);
    for (const ComplexMatrix& g : g4) avg += g * rho * g.adjoint();
    avg /= static_cast<double>(g4.size());

    const ProjectorSet& ps = projectors();
    const ComplexMatrix pih16 = identity(16) - ps.q;
    // Haar twirl over the qubit(x)Hperp block collapses it to a multiple of q
    // and kills the cross blocks.
    return pih16 * avg * pih16 + ((ps.q * rho).trace().real() / 8.0) * ps.q;
}

double fixed_space_residual(const ComplexMatrix& rho) {
    const ProjectorSet& ps = projectors();
    const RCoefficients r{(ps.p0 * rho).trace().real() / 3.0, (ps.p1 * rho).trace().real() / 3.0,
                          (ps.p2 * rho).trace().real() / 2.0, (ps.q * rho).trace().real() / 8.0};
    const ComplexMatrix fit = r.r0 * ps.p0 + r.r1 * ps.p1 + r.r2 * ps.p2 + r.r3 * ps.q;
    return (rho - fit).cwiseAbs().maxCoeff();
}

RCoefficients decompose(const ComplexMatrix& rho_sym) {
    if (rho_sym.rows() != 16 || rho_sym.cols() != 16)
        throw BadDimensionError("decompose: expected 16x16");
    const double residual = fixed_space_residual(rho_sym);
    if (residual > 1e-8)
        throw NotSymmetrizedError("decompose: fit residual " + std::to_string(residual) +
                                  " exceeds 1e-8");
    const ProjectorSet& ps = projectors();
    return RCoefficients{(ps.p0 * rho_sym).trace().real() / 3.0,
                         (ps.p1 * rho_sym).trace().real() / 3.0,
                         (ps.p2 * rho_sym).trace().real() / 2.0,
                         (ps.q * rho_sym).trace().real() / 8.0};
}

ErrorPoint error_rates(const RCoefficients& r_in, const SquashResult& sq) {
    RCoefficients r = r_in;
    const double budget = 3.0 * r.r0 + 3.0 * r.r1 + 2.0 * r.r2;
    if (r.r0 < -1e-10 || r.r1 < -1e-10 || r.r2 < -1e-10 || budget > 1.0 + 1e-10)
        throw InfeasibleRError("error_rates: coefficients violate positivity");
    r.r3 = (1.0 - budget) / 8.0;

    const ErrorPoint pt{0.25 * r.r0 - 0.75 * r.r1 + 0.5 * r.r2 + 0.5,
                        0.5 * r.r0 - 0.5 * r.r1 + 0.5};

    // cross-validate the closed forms against direct traces
    const ProjectorSet& ps = projectors();
    static const ComplexMatrix gamma_z = error_povm(BasisAxis::Z, 3);
    const ComplexMatrix rho = r.r0 * ps.p0 + r.r1 * ps.p1 + r.r2 * ps.p2 + r.r3 * ps.q;
    const double eb_direct = (gamma_z * rho).trace().real();
    thread_local ComplexMatrix cached_y, cached_gamma_y;
    if (cached_y.size() != sq.y_op.size() ||
        (cached_y - sq.y_op).cwiseAbs().maxCoeff() != 0.0) {
        cached_y = sq.y_op;
        cached_gamma_y = ytilde_error_povm(sq);
    }
    const double ey_direct = (cached_gamma_y * rho).trace().real();
    if (std::abs(eb_direct - pt.e_b) > 1e-9 || std::abs(ey_direct - pt.e_y) > 1e-9)
        throw InfeasibleRError("error_rates: closed form disagrees with direct trace");
    return pt;
}

LinearFormReport verify_linear_forms(const SquashResult& sq) {
    const ProjectorSet& ps = projectors();
    const ComplexMatrix gamma_z = error_povm(BasisAxis::Z, 3);
    const ComplexMatrix gamma_y = ytilde_error_povm(sq);

    LinearFormReport rep;
    const std::array<const ComplexMatrix*, 4> blocks{&ps.p0, &ps.p1, &ps.p2, &ps.q};
    for (int i = 0; i < 4; ++i) {
        rep.gamma_z_traces[i] = (gamma_z * *blocks[i]).trace().real();
        rep.gamma_y_traces[i] = (gamma_y * *blocks[i]).trace().real();
    }

    // eliminate r3 through 8 r3 = 1 - 3 r0 - 3 r1 - 2 r2
    const std::array<double, 3> mult{3.0, 3.0, 2.0};
    for (int i = 0; i < 3; ++i) {
        rep.e_b_coeffs[i] = rep.gamma_z_traces[i] - mult[i] / 8.0 * rep.gamma_z_traces[3];
        rep.e_y_coeffs[i] = rep.gamma_y_traces[i] - mult[i] / 8.0 * rep.gamma_y_traces[3];
    }
    rep.e_b_coeffs[3] = rep.gamma_z_traces[3] / 8.0;
    rep.e_y_coeffs[3] = rep.gamma_y_traces[3] / 8.0;

    const std::array<double, 4> eb_expected{0.25, -0.75, 0.5, 0.5};
    const std::array<double, 4> ey_expected{0.5, -0.5, 0.0, 0.5};
    for (int i = 0; i < 4; ++i) {
        rep.max_residual = std::max(rep.max_residual, std::abs(rep.e_b_coeffs[i] - eb_expected[i]));
        rep.max_residual = std::max(rep.max_residual, std::abs(rep.e_y_coeffs[i] - ey_expected[i]));
    }
    rep.pass = rep.max_residual <= 1e-9;
    return rep;
}

}  // namespace sixstate
