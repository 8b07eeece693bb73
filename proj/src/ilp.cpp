#include "treecover/ilp.hpp"

#include <stdexcept>

#include "treecover/arith.hpp"

namespace treecover {

IlpSolution ilp_min_sum(long long A, long long B, int d) {
    if (A < 1 || B < 1 || d < 2) throw std::invalid_argument("need A, B >= 1 and d >= 2");
    if (A > B) throw std::invalid_argument("need A <= B");
    if ((d - 2) * B > (d - 1) * A) throw std::invalid_argument("need (d-2)B <= (d-1)A");
    IlpSolution s;
    s.x = ceil_div(B, d - 1);
    s.y1 = s.y2 = 0;
    s.z = ceil_div(A - (d - 2) * s.x, d);
    s.value = ceil_div(A + 2 * ceil_div(B, d - 1), d);
    if (s.z < 0) throw std::logic_error("ilp witness has negative z");
    if ((d - 2) * s.x + (d - 1) * (s.y1 + s.y2) + static_cast<long long>(d) * s.z < A ||
        (d - 1) * (s.x + s.y1) < B || (d - 1) * (s.x + s.y2) < B ||
        s.x + s.y1 + s.y2 + s.z != s.value)
        throw std::logic_error("ilp witness check failed");
    return s;
}

IlpSolution ilp2_min_sum(long long A, int d) {
    if (A < 1 || d < 2) throw std::invalid_argument("need A >= 1 and d >= 2");
    long long dd = static_cast<long long>(d) * (d - 1);
    long long r = A % dd;
    IlpSolution s;
    s.z = 0;
    if (d > 2 && r < static_cast<long long>(d - 1) * (d - 2)) {
        long long fl = floor_div(A, dd);
        s.x = ceil_div((d - 1) * A - (2 * d - 2) * fl, d - 2);
        s.y1 = s.y2 = fl;
        s.value = ceil_div((d - 1) * A - 2 * fl, d - 2);
    } else {
        // for d = 2 always this branch: r >= (d-1)(d-2) = 0
        long long cl = ceil_div(A, dd);
        s.x = ceil_div(d * A, d - 1) - cl;
        s.y1 = s.y2 = cl;
        s.value = ceil_div(d * A, d - 1) + cl;
    }
    if ((d - 2) * s.x + (d - 1) * (s.y1 + s.y2 + s.z) < (d - 1) * A ||
        (d - 1) * (s.x + s.y1) < static_cast<long long>(d) * A ||
        (d - 1) * (s.x + s.y2) < static_cast<long long>(d) * A ||
        s.x + s.y1 + s.y2 + s.z != s.value)
        throw std::logic_error("ilp2 witness check failed");
    return s;
}

} // namespace treecover
