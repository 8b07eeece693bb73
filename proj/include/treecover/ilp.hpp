#pragma once

namespace treecover {

struct IlpSolution {
    long long value;
    long long x, y1, y2, z;
};

/// Minimum of x+y1+y2+z over non-negative integers subject to
///   (d-2)x + (d-1)(y1+y2) + dz >= A,  (d-1)(x+y_i) >= B,
/// for 1 <= A <= B with (d-2)B <= (d-1)A:
/// value = ceil(A/d + (2/d)ceil(B/(d-1))), achieved by
/// x = ceil(B/(d-1)), y1 = y2 = 0, z = ceil((A-(d-2)x)/d).
IlpSolution ilp_min_sum(long long A, long long B, int d);

/// Minimum of x+y1+y2+z over integers subject to
///   (d-2)x + (d-1)(y1+y2+z) >= (d-1)A,  (d-1)(x+y_i) >= dA,
/// split on r = A mod d(d-1) against (d-1)(d-2).
IlpSolution ilp2_min_sum(long long A, int d);

} // namespace treecover
