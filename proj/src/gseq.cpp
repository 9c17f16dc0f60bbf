#include "blockpath/gseq.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace blockpath {

bool g_in_domain(int m, int i) {
    return m >= 4 && i >= 0 && 2 * i <= m - 2;
}

long long g(int m, int i) {
    if (!g_in_domain(m, i))
        throw std::domain_error("g(" + std::to_string(m) + "," + std::to_string(i) + ") out of domain");
    if (i == 0) return m;
    if (m == 4 && i == 1) return 4;
    return g(m - 1, i - 1) + 2LL * (m - 3);
}

long long g_extreme(int m) {
    if (m < 4)
        throw std::domain_error("g_extreme requires m >= 4");
    return m % 2 == 0 ? g(m, m / 2 - 1) : g(m, (m - 3) / 2);
}

long long f_upper_bound(int m) {
    if (m < 4)
        throw std::domain_error("f_upper_bound requires m >= 4");
    long long burr = 1LL * (m - 1) * (m - 1);
    long long ge = g_extreme(m);
    return ge < burr ? ge : burr;
}

}  // namespace blockpath
