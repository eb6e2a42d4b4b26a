#pragma once
// Fixed-width exact counting kernels for hyperplane slices of cubes.
// All arithmetic is 128-bit with documented input guards; callers must
// check kernel_fits() and fall back to arbitrary precision otherwise.

#include <cstdint>

namespace latext::detail {

using i64 = long long;
using i128 = __int128;

// guards under which every intermediate below stays well inside 128 bits
constexpr i64 kMaxCoeff = (1LL << 26);
constexpr i64 kMaxT = (1LL << 26);
constexpr i64 kMaxB = (1LL << 40);
constexpr int kMaxDims = 16;

i128 floor_div(i128 a, i128 b);
i128 ceil_div(i128 a, i128 b);
i128 gcd128(i128 a, i128 b);

// g = a*u + b*v with g = gcd(|a|,|b|)
struct Xgcd {
    i128 g, u, v;
};
Xgcd xgcd(i128 a, i128 b);

// sum_{i=0}^{n-1} floor((a*i + b)/m) for m >= 1, n >= 0, any-sign a and b
i128 floor_sum(i128 n, i128 m, i128 a, i128 b);

// #{(x,y) : a*x + b*y == r, xlo <= x <= xhi, ylo <= y <= yhi}
i128 count_pair(i128 a, i128 b, i128 r, i128 xlo, i128 xhi, i128 ylo, i128 yhi);

// #{(x,y,z) : c1*x + c2*y + c3*z == r, xlo <= x <= xhi, |y| <= t, |z| <= t}
i128 count_triple(i128 c1, i128 c2, i128 c3, i128 r, i128 t, i128 xlo, i128 xhi);

// #{x in [-t,t]^n : c.x == r, xlo <= x_1 <= xhi}; n == dims >= 1
i128 count_slice_fixed(const i64* c, int dims, i128 r, i64 t, i64 xlo, i64 xhi);

}  // namespace latext::detail
