#include "sixstate/photon_bounds.hpp"

#include <algorithm>

namespace sixstate {

MinErrorRow min_bit_error(int n) {
    if (n < 1 || n > kNMaxDefault)
        throw BadPhotonNumberError("min_bit_error: n outside 1.." + std::to_string(kNMaxDefault));

    const ComplexMatrix gbar = avg_error_povm(n);
    MinErrorRow row;
    row.n = n;
    row.min_e_b = min_eigenvalue(gbar);

    // Compress to qubit(x)H via the Dicke isometry; the Hperp block of gbar is
    // the constant 1/2, so the full minimum is min(reduced minimum, 1/2).
    const auto dicke = dicke_states(n);
    ComplexMatrix v(1 << n, n + 1);
    for (int w = 0; w <= n; ++w) v.col(w) = dicke[static_cast<std::size_t>(w)];
    const ComplexMatrix w2 = kron(identity(2), v);
    const double reduced = min_eigenvalue((w2.adjoint() * gbar * w2).eval());
    row.reduced_check = (n == 1) ? reduced : std::min(reduced, 0.5);
    return row;
}

std::vector<MinErrorRow> min_error_table(int nmax) {
    if (nmax < 1 || nmax > kNMaxDefault)
        throw BadPhotonNumberError("min_error_table: nmax outside 1.." +
                                   std::to_string(kNMaxDefault));
    std::vector<MinErrorRow> rows;
    rows.reserve(static_cast<std::size_t>(nmax));
    for (int n = 1; n <= nmax; ++n) rows.push_back(min_bit_error(n));
    return rows;
}

}  // namespace sixstate
