#pragma once

#include <cstdint>

namespace blockpath {

// g(m,0) = m, g(4,1) = 4, g(m,i) = g(m-1,i-1) + 2(m-3) for m >= 5, i >= 1.
// Domain: m >= 4, 0 <= i <= m/2 - 1 (so i <= floor((m-2)/2)).
bool g_in_domain(int m, int i);
long long g(int m, int i);

// g at the largest valid i used by the quadratic bound:
// g(m, m/2-1) for even m, g(m, (m-3)/2) for odd m.
long long g_extreme(int m);

// min(g_extreme(m), (m-1)^2), the better of the two published bounds.
long long f_upper_bound(int m);

}  // namespace blockpath
