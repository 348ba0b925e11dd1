#include "sixstate/rates.hpp"

#include <algorithm>
#include <cmath>

#include "sixstate/photon_bounds.hpp"

namespace sixstate {

namespace {

constexpr double kDomainSlack = 1e-12;

void check_unit_interval(double x, const char* who) {
    if (!(x >= -kDomainSlack && x <= 1.0 + kDomainSlack))
        throw DomainError(std::string(who) + ": argument " + std::to_string(x) +
                          " outside [0, 1]");
}

}  // namespace

double binary_entropy(double x) {
    check_unit_interval(x, "binary_entropy");
    x = std::clamp(x, 0.0, 1.0);
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

double binary_entropy_deriv(double x) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("binary_entropy_deriv: argument outside (0, 1)");
    return std::log2((1.0 - x) / x);
}

double h12(double e_b) {
    if (!(e_b >= -kDomainSlack && e_b <= 0.5 + kDomainSlack))
        throw DomainError("h12: bit error rate outside [0, 1/2]");
    e_b = std::clamp(e_b, 0.0, 0.5);
    if (e_b == 0.0) return 0.0;
    return e_b + (1.0 - e_b) * binary_entropy(e_b / (2.0 * (1.0 - e_b)));
}

double h12_prime(double e_b) {
    if (!(e_b > 0.0 && e_b < 0.5)) throw DomainError("h12_prime: argument outside (0, 1/2)");
    const double x = e_b / (2.0 * (1.0 - e_b));
    return 1.0 - binary_entropy(x) + binary_entropy_deriv(x) / (2.0 * (1.0 - e_b));
}

double h3(double e_b, double e_y) {
    if (!(e_b > 0.0 && e_b < 1.0)) throw DomainError("h3: e_b outside (0, 1)");
    const double x1 = (2.0 * e_b - e_y) / (2.0 * e_b);
    const double x2 = e_y / (2.0 - 2.0 * e_b);
    check_unit_interval(x1, "h3");
    check_unit_interval(x2, "h3");
    return e_b * binary_entropy(x1) + (1.0 - e_b) * binary_entropy(x2);
}

ErrorPoint region_map(const RegionParams& p, const SquashResult& sq) {
    if (!(p.u >= 0.0 && p.u <= 1.0 && p.t >= 0.0 && p.t <= 1.0 && p.s >= -1.0 && p.s <= 1.0))
        throw DomainError("region_map: parameters outside the box");
    const RCoefficients r{p.u * p.t * (1.0 + p.s) / 6.0, p.u * p.t * (1.0 - p.s) / 6.0,
                          p.u * (1.0 - p.t) / 2.0, 0.0};
    return error_rates(r, sq);
}

std::pair<double, double> region_bounds(double e_b) {
    if (!(e_b >= 0.25 - kDomainSlack && e_b <= 0.75 + kDomainSlack))
        throw DomainError("region_bounds: e_b outside [1/4, 3/4]");
    e_b = std::clamp(e_b, 0.25, 0.75);
    const double lo = e_b / 3.0 + 0.25;
    const double hi = (e_b <= 7.0 / 12.0) ? e_b + 1.0 / 12.0 : 1.25 - e_b;
    return {lo, std::max(lo, hi)};
}

double max_h3_at(double e_b) {
    auto [lo, hi] = region_bounds(e_b);
    auto f = [&](double ey) { return h3(e_b, ey); };
    // golden-section search; h3 is concave in e_y at fixed e_b
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-10) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return std::max({f(0.5 * (a + b)), f(lo), f(hi)});
}

TangentB tangent_at_b() {
    TangentB out;
    out.e_b = bisect_root([](double e) { return h12(e) - (1.0 - binary_entropy(e)); }, 0.05, 0.25,
                          1e-10);
    out.slope = h12_prime(out.e_b);
    out.intercept = h12(out.e_b) - out.slope * out.e_b;
    // The neglect cutoff C is where the final bounding line (the envelope's
    // tangent branch) re-crosses the binary entropy curve.
    const Envelope env = tangent_envelope();
    out.e_c = bisect_root(
        [&](double e) { return binary_entropy(e) - (env.slope * e + env.intercept); },
        out.e_b + 1e-6, 0.5, 1e-10);
    return out;
}

Envelope tangent_envelope() {
    Envelope env;
    env.v3 = h3(0.25, 1.0 / 3.0);
    env.e_d = bisect_root(
        [&](double e) { return h12(e) + h12_prime(e) * (0.25 - e) - env.v3; }, 0.05, 0.2, 1e-10);
    env.slope = h12_prime(env.e_d);
    env.intercept = h12(env.e_d) - env.slope * env.e_d;
    return env;
}

double hzx_upper(double e_b, const Envelope& env) {
    if (!(e_b >= -kDomainSlack && e_b <= 0.25 + kDomainSlack))
        throw DomainError("hzx_upper: e_b outside [0, 1/4]");
    e_b = std::clamp(e_b, 0.0, 0.25);
    if (e_b <= env.e_d) return h12(e_b);
    return env.slope * e_b + env.intercept;
}

double threshold(Protocol protocol) {
    switch (protocol) {
        case Protocol::Bb84:
            return bisect_root(
                [](double e) { return 1.0 - 2.0 * binary_entropy(e); }, 0.05, 0.3, 1e-10);
        case Protocol::SixStateQubit:
            return bisect_root(
                [](double e) { return 1.0 - binary_entropy(e) - h12(e); }, 0.05, 0.3, 1e-10);
        case Protocol::SixStateThreshold: {
            const Envelope env = tangent_envelope();
            return bisect_root(
                [&](double e) { return 1.0 - binary_entropy(e) - hzx_upper(e, env); }, 0.05, 0.25,
                1e-10);
        }
    }
    throw DomainError("threshold: unknown protocol");
}

KeyRateRow keyrate(double e_b, const Envelope& env, double n_sif) {
    if (n_sif < 0.0) throw DomainError("keyrate: n_sif must be nonnegative");
    KeyRateRow row;
    row.e_b = e_b;
    row.n_sif = n_sif;
    row.hzx_upper = hzx_upper(e_b, env);
    row.rate = n_sif * (1.0 - binary_entropy(e_b) - row.hzx_upper);
    return row;
}

namespace {

// upper hull by monotone chain over points sorted by x
std::vector<std::pair<double, double>> upper_hull(std::vector<std::pair<double, double>> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<double, double>> hull;
    for (const auto& p : pts) {
        if (!hull.empty() && hull.back().first == p.first) {
            if (hull.back().second >= p.second) continue;
            hull.pop_back();
        }
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            const double cross = (b.first - a.first) * (p.second - a.second) -
                                 (b.second - a.second) * (p.first - a.first);
            if (cross >= 0.0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

}  // namespace

double hull_value(const std::vector<std::pair<double, double>>& hull, double x) {
    if (hull.empty()) throw DomainError("hull_value: empty hull");
    if (x <= hull.front().first) return hull.front().second;
    if (x >= hull.back().first) return hull.back().second;
    auto it = std::lower_bound(hull.begin(), hull.end(), std::pair{x, -1e300});
    const auto& b = *it;
    const auto& a = *(it - 1);
    const double w = (x - a.first) / (b.first - a.first);
    return a.second + w * (b.second - a.second);
}

std::vector<std::pair<double, double>> envelope_oracle(double grid_step) {
    if (!(grid_step >= 1e-5 && grid_step <= 1e-2))
        throw DomainError("envelope_oracle: grid_step outside [1e-5, 1e-2]");

    std::vector<std::pair<double, double>> pts;
    pts.emplace_back(0.0, 0.0);
    for (double e = grid_step; e < 0.5; e += grid_step) pts.emplace_back(e, h12(e));
    pts.emplace_back(0.5, h12(0.5));

    // 3-photon region: per e_b the hull only sees the largest attainable h3
    for (double e = 0.25; e <= 0.75 + 1e-15; e += grid_step) {
        const double eb = std::min(e, 0.75);
        pts.emplace_back(eb, max_h3_at(eb));
    }

    // boundary h(e) beyond the smallest minimum bit error of the neglected
    // photon numbers
    double e_cut = 1.0;
    for (int n = 4; n <= kNMaxDefault; ++n) e_cut = std::min(e_cut, min_bit_error(n).min_e_b);
    for (double e = e_cut; e < 1.0; e += grid_step) pts.emplace_back(e, binary_entropy(e));
    pts.emplace_back(1.0, 0.0);

    auto hull = upper_hull(std::move(pts));
    // restrict to [0, 1/4], keeping the interpolated endpoint value
    std::vector<std::pair<double, double>> out;
    for (const auto& p : hull)
        if (p.first <= 0.25 + 1e-15) out.push_back(p);
    if (out.empty() || out.back().first < 0.25) out.emplace_back(0.25, hull_value(hull, 0.25));
    return out;
}

NeglectReport neglect_check(int nmax) {
    if (nmax < 4) throw DomainError("neglect_check: nmax must be >= 4");
    const Envelope env = tangent_envelope();
    NeglectReport rep;
    rep.nmax = nmax;
    rep.worst_margin = 1e300;
    bool ok = true;
    for (int n = 4; n <= nmax; ++n) {
        const double m = min_bit_error(n).min_e_b;
        rep.photon_numbers.push_back(n);
        rep.min_bit_errors.push_back(m);
        if (!(m > 0.25677)) {
            ok = false;
            throw NeglectViolationError("neglect_check: min bit error for N=" + std::to_string(n) +
                                        " is " + std::to_string(m) + ", not above 0.25677");
        }
        for (double e = m; e <= 1.0 + 1e-15; e += 1e-4) {
            const double ee = std::min(e, 1.0);
            const double margin = env.slope * ee + env.intercept - binary_entropy(ee);
            rep.worst_margin = std::min(rep.worst_margin, margin);
            if (margin < 0.0)
                throw NeglectViolationError("neglect_check: line dominance fails at N=" +
                                            std::to_string(n) + ", e=" + std::to_string(ee));
        }
    }
    rep.pass = ok;
    return rep;
}

}  // namespace sixstate
