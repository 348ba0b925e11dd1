#include "sixstate/verify.hpp"

#include <cmath>
#include <random>

#include "sixstate/photon_bounds.hpp"
#include "sixstate/rates.hpp"

namespace sixstate {

namespace {

ComplexMatrix random_matrix(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    return g;
}

ComplexMatrix random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
    const ComplexMatrix g = random_matrix(n, rng);
    return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_density(Eigen::Index n, std::mt19937_64& rng) {
    const ComplexMatrix g = random_matrix(n, rng);
    ComplexMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

struct Runner {
    std::vector<CheckResult> results;

    void record(const std::string& name, double residual, double tol) {
        results.push_back({name, residual <= tol, residual, tol});
    }
    void record_flag(const std::string& name, bool pass, double residual, double tol) {
        results.push_back({name, pass, residual, tol});
    }
};

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
    Runner r;
    std::mt19937_64 rng(opts.seed);
    const int n_top = opts.fast ? 3 : 5;
    const int n_table = opts.fast ? 5 : kNMaxDefault;

    // --- operator core ---
    {
        double rec = 0.0, tr = 0.0;
        for (Eigen::Index dim : {2, 8, 16, 64}) {
            if (opts.fast && dim > 16) continue;
            const ComplexMatrix h = random_hermitian(dim, rng);
            const EigenSystem es = hermitian_eigensystem(h);
            const ComplexMatrix back = es.vectors * es.values.asDiagonal() * es.vectors.adjoint();
            const double scale = std::max(1.0, max_abs(h));
            rec = std::max(rec, max_abs(h - back) / scale);
            tr = std::max(tr, std::abs(es.values.sum() - h.trace().real()) / scale);
        }
        r.record("eig_reconstruction", rec, kTolEig);
        r.record("eig_trace_sum", tr, kTolEig);
    }
    {
        const ComplexMatrix h = random_hermitian(12, rng);
        const ComplexMatrix p = project_psd(h);
        r.record("psd_idempotent", max_abs(project_psd(p) - p), 1e-12);
        r.record("psd_cone", std::max(0.0, -min_eigenvalue(p)), 1e-12);
        // Loewner monotonicity on commuting (diagonal) inputs
        Eigen::VectorXd d1(4), d2(4);
        d1 << -2, -0.5, 0.3, 1.0;
        d2 << -1, 0.0, 0.5, 2.0;
        const ComplexMatrix a = project_psd(ComplexMatrix(d1.cast<Complex>().asDiagonal()));
        const ComplexMatrix b = project_psd(ComplexMatrix(d2.cast<Complex>().asDiagonal()));
        r.record("psd_monotone_diagonal", std::max(0.0, -min_eigenvalue(b - a)), 1e-12);
    }
    {
        const ComplexMatrix a = random_matrix(2, rng), b = random_matrix(2, rng);
        const ComplexMatrix c = random_matrix(2, rng), d = random_matrix(2, rng);
        const double mixed = max_abs(kron(a, b) * kron(c, d) - kron((a * c).eval(), (b * d).eval()));
        r.record("kron_mixed_product", mixed, 1e-13 * 100);
        const double assoc = max_abs(kron(kron(a, b), c) - kron(a, kron(b, c)));
        r.record("kron_associativity", assoc, 1e-13);
    }

    // --- states and measurements ---
    {
        double comp = 0.0, dc = 0.0, bounds = 0.0;
        for (int n = 1; n <= n_top; ++n) {
            const SymmetricSplit split = symmetric_split(n);
            for (BasisAxis axis : kAllAxes) {
                const ComplexMatrix mp = threshold_povm(axis, BitValue::Plus, n);
                const ComplexMatrix mm = threshold_povm(axis, BitValue::Minus, n);
                comp = std::max(comp, max_abs(mp + mm - identity(1 << n)));
                for (const ComplexMatrix* m : {&mp, &mm}) {
                    const EigenSystem es = hermitian_eigensystem(*m);
                    bounds = std::max(bounds, std::max(-es.values(0), es.values(es.values.size() - 1) - 1.0));
                    if (n >= 2)
                        dc = std::max(dc, max_abs(split.pi_hperp * *m * split.pi_hperp -
                                                  0.5 * split.pi_hperp));
                }
            }
        }
        r.record("povm_completeness", comp, 1e-12);
        r.record("povm_operator_bounds", std::max(0.0, bounds), 1e-12);
        r.record("double_click_block", dc, 1e-12);
    }
    {
        // conjugation by the pi/2 X rotation sends M_{Z,b} to M_{Y,-b}
        const ComplexMatrix rx = (identity(2) - Complex(0, 1) * pauli(BasisAxis::X)) / std::sqrt(2.0);
        double cov = 0.0;
        for (int n = 1; n <= 3; ++n) {
            const ComplexMatrix rxn = kron_pow(rx, n);
            for (BitValue b : kAllBits) {
                const BitValue nb = (b == BitValue::Plus) ? BitValue::Minus : BitValue::Plus;
                cov = std::max(cov, max_abs(rxn * threshold_povm(BasisAxis::Z, b, n) * rxn.adjoint() -
                                            threshold_povm(BasisAxis::Y, nb, n)));
            }
        }
        r.record("basis_covariance", cov, 1e-12);
    }
    {
        double tcon = 0.0;
        for (BasisAxis axis : kAllAxes)
            tcon = std::max(tcon, max_abs(basis_contrast(axis, 3) -
                                          (threshold_povm(axis, BitValue::Plus, 3) -
                                           threshold_povm(axis, BitValue::Minus, 3))));
        r.record("contrast_consistency", tcon, 1e-12);
    }
    {
        const Ket s = singlet();
        double err = 0.0;
        for (BasisAxis axis : kAllAxes)
            err = std::max(err, std::abs((s.adjoint() * error_povm(axis, 1) * s)(0).real()));
        r.record("singlet_zero_error", err, 1e-12);
    }

    const SquashResult sq = construct_squash_y();
    {
        r.record("squash_constraint_residual", sq.constraint_residual, 1e-9);
        r.record("squash_choi_psd", std::max(0.0, -sq.choi_min_eig), 1e-9);
        double fsq = 0.0;
        for (BasisAxis axis : {BasisAxis::X, BasisAxis::Z})
            for (BitValue b : kAllBits)
                fsq = std::max(fsq, max_abs(apply_choi_map(sq.choi, projector(basis_ket(axis, b))) -
                                            threshold_povm(axis, b, 3)));
        r.record("squash_reproduces_xz_povms", fsq, 1e-9);
        const ComplexMatrix gy = ytilde_error_povm(sq);
        const EigenSystem es = hermitian_eigensystem(gy);
        r.record("ytilde_operator_bounds",
                 std::max(-es.values(0), es.values(es.values.size() - 1) - 1.0), 1e-9);
    }

    // --- symmetry twirl ---
    {
        const GroupSet g = enumerate_group();
        r.record_flag("group_order_24", g.size() == 24,
                      std::abs(static_cast<double>(g.size()) - 24.0), 0.5);
        double unit = 0.0;
        bool has_id = false;
        for (const GroupElement& e : g) {
            unit = std::max(unit, max_abs(e.u * e.u.adjoint() - identity(2)));
            if (max_abs(e.u - identity(2)) < 1e-9) has_id = true;
        }
        r.record("group_unitarity", unit, 1e-12);
        r.record_flag("group_contains_identity", has_id, has_id ? 0.0 : 1.0, 0.5);
    }
    {
        ProjectorSet ps = build_projectors();
        if (opts.inject_projector_perturbation) ps.p0(0, 0) += 1e-3;
        double idem = 0.0, orth = 0.0;
        const std::array<const ComplexMatrix*, 4> blocks{&ps.p0, &ps.p1, &ps.p2, &ps.q};
        const std::array<double, 4> ranks{3, 3, 2, 8};
        double rank_err = 0.0;
        for (int i = 0; i < 4; ++i) {
            idem = std::max(idem, max_abs(*blocks[i] * *blocks[i] - *blocks[i]));
            rank_err = std::max(rank_err, std::abs(blocks[i]->trace().real() - ranks[i]));
            for (int j = i + 1; j < 4; ++j)
                orth = std::max(orth, max_abs(*blocks[i] * *blocks[j]));
        }
        r.record("projector_idempotent", idem, 1e-12);
        r.record("projector_orthogonal", orth, 1e-12);
        r.record("projector_ranks", rank_err, 1e-10);
        r.record("projector_completeness",
                 max_abs(ps.p0 + ps.p1 + ps.p2 + ps.q - identity(16)), 1e-12);
        r.record("projector_resolves_symmetric_block",
                 max_abs(ps.p0 + ps.p1 + ps.p2 - kron(identity(2), symmetric_split(3).pi_h)),
                 1e-12);
        double comm = 0.0;
        for (const GroupElement& g : enumerate_group()) {
            const ComplexMatrix g4 = kron(g.u, kron_pow(g.u, 3));
            for (int i = 0; i < 3; ++i)
                comm = std::max(comm, max_abs(g4 * *blocks[i] - *blocks[i] * g4));
        }
        r.record("projector_group_invariance", comm, 1e-12);
    }
    {
        const int trials = opts.fast ? 10 : 50;
        double span = 0.0, idem = 0.0, gbar_inv = 0.0, basis_eq = 0.0;
        const ComplexMatrix gbar = avg_error_povm(3);
        const ComplexMatrix gx = error_povm(BasisAxis::X, 3);
        const ComplexMatrix gy = error_povm(BasisAxis::Y, 3);
        const ComplexMatrix gz = error_povm(BasisAxis::Z, 3);
        for (int t = 0; t < trials; ++t) {
            const ComplexMatrix rho = random_density(16, rng);
            const ComplexMatrix w = twirl(rho);
            span = std::max(span, fixed_space_residual(w));
            idem = std::max(idem, max_abs(twirl(w) - w));
            gbar_inv = std::max(gbar_inv, std::abs((gbar * rho).trace().real() -
                                                   (gbar * w).trace().real()));
            const double ex = (gx * w).trace().real();
            const double ey = (gy * w).trace().real();
            const double ez = (gz * w).trace().real();
            basis_eq = std::max({basis_eq, std::abs(ex - ey), std::abs(ey - ez)});
        }
        r.record("twirl_fixed_space", span, 1e-10);
        r.record("twirl_idempotent", idem, 1e-10);
        r.record("twirl_preserves_avg_error", gbar_inv, 1e-10);
        r.record("twirl_basis_equalization", basis_eq, 1e-10);
    }
    {
        // inequivalent blocks: group-averaged off-diagonal intertwiners vanish
        const ProjectorSet& ps = projectors();
        const std::array<const ComplexMatrix*, 3> blocks{&ps.p0, &ps.p1, &ps.p2};
        const ComplexMatrix x = random_matrix(16, rng);
        double inter = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                ComplexMatrix avg = ComplexMatrix::Zero(16, 16);
                for (const GroupElement& g : enumerate_group()) {
                    const ComplexMatrix g4 = kron(g.u, kron_pow(g.u, 3));
                    avg += g4 * (*blocks[i] * x * *blocks[j]) * g4.adjoint();
                }
                inter = std::max(inter, max_abs(avg / 24.0));
            }
        r.record("block_inequivalence", inter, 1e-9);
    }
    {
        const LinearFormReport rep = verify_linear_forms(sq);
        r.record("linear_form_coefficients", rep.max_residual, 1e-9);
    }

    // --- rate analysis ---
    {
        double diag = 0.0;
        for (int i = 1; i <= 100; ++i) {
            const double e = 0.005 * i * 0.99;  // stays inside (0, 1/2)
            diag = std::max(diag, std::abs(h3(e, e) - h12(e)));
        }
        r.record("h3_diagonal_identity", diag, 1e-12);
    }
    {
        double dprime = 0.0;
        for (double e = 0.02; e < 0.48; e += 0.02) {
            const double fd = (h12(e + 1e-6) - h12(e - 1e-6)) / 2e-6;
            dprime = std::max(dprime, std::abs(h12_prime(e) - fd));
        }
        r.record("h12_prime_finite_difference", dprime, 1e-6);
    }
    {
        const Envelope env = tangent_envelope();
        double conc = 0.0;
        const double step = 1e-4;
        auto second_diff = [&](auto f, double a, double b) {
            double worst = 0.0;
            for (double x = a + step; x < b - step; x += step)
                worst = std::max(worst, f(x - step) + f(x + step) - 2.0 * f(x));
            return worst;
        };
        conc = std::max(conc, second_diff([](double x) { return binary_entropy(x); }, 0.01, 0.99));
        conc = std::max(conc, second_diff([](double x) { return h12(x); }, 0.01, 0.49));
        conc = std::max(conc, second_diff([&](double x) { return hzx_upper(x, env); }, 0.01, 0.24));
        r.record("entropy_concavity", conc, 1e-8);

        const double tb = threshold(Protocol::Bb84);
        const double tt = threshold(Protocol::SixStateThreshold);
        const double tq = threshold(Protocol::SixStateQubit);
        r.record_flag("threshold_ordering", tb + 1e-5 < tt && tt + 1e-5 < tq,
                      std::min(tt - tb, tq - tt), 1.0);
        r.record("sixstate_threshold_value", std::abs(tt - 0.126112), 5e-6);

        // 200x200 grid over the (e_b, e_y) triangle
        const int grid = opts.fast ? 50 : 200;
        double excess = -1e300;
        for (int i = 0; i <= grid; ++i) {
            const double eb = 0.25 + 0.5 * static_cast<double>(i) / grid;
            const auto [lo, hi] = region_bounds(eb);
            for (int j = 0; j <= grid; ++j) {
                const double ey = lo + (hi - lo) * static_cast<double>(j) / grid;
                const double line = env.slope * eb + env.intercept;
                excess = std::max(excess, h3(eb, ey) - line);
            }
        }
        r.record("envelope_dominates_region", std::max(0.0, excess), 1e-6);

        // a coarser sweep through the parameterization itself
        const int pgrid = opts.fast ? 6 : 12;
        double pexcess = -1e300;
        for (int iu = 0; iu <= pgrid; ++iu)
            for (int it = 0; it <= pgrid; ++it)
                for (int is = 0; is <= pgrid; ++is) {
                    const RegionParams p{static_cast<double>(iu) / pgrid,
                                         static_cast<double>(it) / pgrid,
                                         -1.0 + 2.0 * static_cast<double>(is) / pgrid};
                    const ErrorPoint pt = region_map(p, sq);
                    const double line = env.slope * pt.e_b + env.intercept;
                    pexcess = std::max(pexcess, h3(pt.e_b, pt.e_y) - line);
                }
        r.record("envelope_dominates_parameterization", std::max(0.0, pexcess), 1e-6);

        const double step_oracle = opts.fast ? 1e-3 : 1e-4;
        const auto hull = envelope_oracle(step_oracle);
        double dev = 0.0;
        for (double e = 0.0; e <= 0.25 + 1e-12; e += 1e-3)
            dev = std::max(dev, std::abs(hull_value(hull, std::min(e, 0.25)) -
                                         hzx_upper(std::min(e, 0.25), env)));
        r.record("envelope_oracle_agreement", dev, std::max(1e-4, 3.0 * step_oracle));
    }

    // --- photon bounds ---
    {
        const auto table = min_error_table(n_table);
        double agree = 0.0;
        for (const MinErrorRow& row : table)
            agree = std::max(agree, std::abs(row.min_e_b - row.reduced_check));
        r.record("minerr_full_vs_reduced", agree, 1e-10);
        r.record("minerr_n1_zero", std::abs(table[0].min_e_b), 1e-12);
        r.record_flag("minerr_n2_positive", table[1].min_e_b > 1e-6, table[1].min_e_b, 1.0);
        r.record("minerr_n3_quarter", std::abs(table[2].min_e_b - 0.25), 1e-9);
        bool exceeds = true;
        for (std::size_t i = 3; i < table.size(); ++i)
            exceeds = exceeds && table[i].min_e_b > 0.25677;
        r.record_flag("minerr_n4plus_above_neglect_cut", exceeds, 0.0, 1.0);

        // the N=1 minimizer is the singlet
        const EigenSystem es = hermitian_eigensystem(avg_error_povm(1));
        const double fid = std::norm((singlet().adjoint() * es.vectors.col(0))(0));
        r.record("minerr_n1_singlet_fidelity", 1.0 - fid, 1e-9);

        const NeglectReport neg = neglect_check(n_table);
        r.record_flag("neglect_line_dominance", neg.pass, -neg.worst_margin, 0.0);
    }

    // --- sampling bridge ---
    if (!opts.fast) {
        const std::int64_t trials = 100000;
        const ComplexMatrix maximally_mixed = identity(8) / 8.0;
        const ClickStats a = simulate_clicks(maximally_mixed, BasisAxis::X, 3, trials, opts.seed);
        const double sigma_a = std::sqrt(a.prob_plus * (1.0 - a.prob_plus) / trials);
        r.record("clicks_mixed_within_4sigma", std::abs(a.freq_plus - a.prob_plus),
                 4.0 * std::max(sigma_a, 1e-12));

        const ComplexMatrix pure = kron_pow(projector(basis_ket(BasisAxis::Z, BitValue::Plus)), 2);
        const ClickStats b = simulate_clicks(pure, BasisAxis::Z, 2, trials, opts.seed + 1);
        r.record("clicks_deterministic_state", std::abs(b.freq_plus - 1.0), 1e-12);

        const ClickStats c1 = simulate_clicks(maximally_mixed, BasisAxis::Y, 3, 1000, 7);
        const ClickStats c2 = simulate_clicks(maximally_mixed, BasisAxis::Y, 3, 1000, 7);
        r.record_flag("clicks_seed_reproducible", c1.plus == c2.plus,
                      std::abs(static_cast<double>(c1.plus - c2.plus)), 0.5);
    }

    return r.results;
}

}  // namespace sixstate
