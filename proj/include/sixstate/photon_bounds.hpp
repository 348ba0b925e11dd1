#pragma once

#include <vector>

#include "sixstate/states.hpp"

namespace sixstate {

struct MinErrorRow {
    int n = 0;
    double min_e_b = 0.0;
    double reduced_check = 0.0;  // same quantity on the compressed qubit(x)H space
};

/// Minimum basis-averaged bit error rate over all N-photon states:
/// lambda_min of the averaged error observable, computed both on the full
/// 2^{n+1}-dim space and on the 2(n+1)-dim qubit(x)H compression.
MinErrorRow min_bit_error(int n);

std::vector<MinErrorRow> min_error_table(int nmax);

}  // namespace sixstate
