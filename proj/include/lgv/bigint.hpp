#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lgv {

using Int = boost::multiprecision::cpp_int;

// C(n,k) with the extended convention: 0 whenever k < 0, n < 0 or k > n.
// Matrix entries routinely carry negative lower indices, and the zero
// convention is exactly what makes the closed form agree with path counts.
inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n - k < k) k = n - k;
    Int r = 1;
    for (long long t = 1; t <= k; ++t) {
        r *= n - k + t;
        r /= t; // exact: r is C(n-k+t, t) after this step
    }
    return r;
}

} // namespace lgv
