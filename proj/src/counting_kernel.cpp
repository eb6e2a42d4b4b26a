#include "latext/counting_kernel.hpp"

#include <algorithm>

namespace latext::detail {

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Xgcd xgcd(i128 a, i128 b) {
    i128 old_r = a, r = b, old_u = 1, u = 0, old_v = 0, v = 1;
    while (r != 0) {
        i128 q = old_r / r;
        i128 t;
        t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_u - q * u;
        old_u = u;
        u = t;
        t = old_v - q * v;
        old_v = v;
        v = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    return {old_r, old_u, old_v};
}

i128 floor_sum(i128 n, i128 m, i128 a, i128 b) {
    if (n <= 0) return 0;
    i128 ans = 0;
    if (a < 0) {
        i128 a2 = a % m;
        if (a2 < 0) a2 += m;
        ans -= n * (n - 1) / 2 * ((a2 - a) / m);
        a = a2;
    }
    if (b < 0) {
        i128 b2 = b % m;
        if (b2 < 0) b2 += m;
        ans -= n * ((b2 - b) / m);
        b = b2;
    }
    for (;;) {
        if (a >= m) {
            ans += n * (n - 1) / 2 * (a / m);
            a %= m;
        }
        if (b >= m) {
            ans += n * (b / m);
            b %= m;
        }
        i128 ymax = a * n + b;
        if (ymax < m) break;
        n = ymax / m;
        b = ymax % m;
        std::swap(m, a);
    }
    return ans;
}

namespace {

i128 len_range(i128 lo, i128 hi) { return hi >= lo ? hi - lo + 1 : 0; }

// integer t with lo <= c + s*t <= hi; s != 0
void step_interval(i128 c, i128 s, i128 lo, i128 hi, i128& tlo, i128& thi) {
    if (s > 0) {
        tlo = ceil_div(lo - c, s);
        thi = floor_div(hi - c, s);
    } else {
        tlo = ceil_div(hi - c, s);
        thi = floor_div(lo - c, s);
    }
}

// (p*j + q) / m with m > 0
struct LinFrac {
    i128 p, q, m;
    i128 num(i128 j) const { return p * j + q; }
};

bool le_at(const LinFrac& f, const LinFrac& g, i128 j) { return f.num(j) * g.m <= g.num(j) * f.m; }

// last j in [jlo, jhi] with pred(j) == pred(jlo); pred flips at most once
template <class Pred>
i128 monotone_prefix_end(i128 jlo, i128 jhi, Pred pred) {
    bool first = pred(jlo);
    if (pred(jhi) == first) return jhi;
    i128 lo = jlo, hi = jhi;
    while (hi - lo > 1) {
        i128 mid = lo + (hi - lo) / 2;
        if (pred(mid) == first)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

i128 sum_floor_lin(const LinFrac& f, i128 jlo, i128 jhi) {
    return floor_sum(jhi - jlo + 1, f.m, f.p, f.p * jlo + f.q);
}

i128 sum_ceil_lin(const LinFrac& f, i128 jlo, i128 jhi) {
    return -floor_sum(jhi - jlo + 1, f.m, -f.p, -(f.p * jlo) - f.q);
}

// sum over j of (floor(B) - ceil(A) + 1) clamped at 0, for fixed bound fractions
i128 seg_fixed(const LinFrac& bb, const LinFrac& aa, i128 lo, i128 hi) {
    if (lo > hi) return 0;
    auto ge = [&](i128 j) { return bb.num(j) * aa.m >= aa.num(j) * bb.m; };  // B(j) >= A(j)
    i128 k = monotone_prefix_end(lo, hi, ge);
    i128 total = 0;
    if (ge(lo)) total += sum_floor_lin(bb, lo, k) - sum_ceil_lin(aa, lo, k) + (k - lo + 1);
    if (k < hi && ge(k + 1)) total += sum_floor_lin(bb, k + 1, hi) - sum_ceil_lin(aa, k + 1, hi) + (hi - k);
    return total;
}

i128 seg_with_b(const LinFrac& bb, const LinFrac& a1, const LinFrac& a2, i128 lo, i128 hi) {
    if (lo > hi) return 0;
    auto ale = [&](i128 j) { return le_at(a1, a2, j); };  // A = max(a1, a2)
    i128 k = monotone_prefix_end(lo, hi, ale);
    i128 total = seg_fixed(bb, ale(lo) ? a2 : a1, lo, k);
    if (k < hi) total += seg_fixed(bb, ale(k + 1) ? a2 : a1, k + 1, hi);
    return total;
}

// sum over j of max(0, floor(min(b1,b2)) - ceil(max(a1,a2)) + 1);
// relies on min of floors == floor of min (and dually for ceil/max)
i128 sum_interval_counts(const LinFrac& b1, const LinFrac& b2, const LinFrac& a1, const LinFrac& a2, i128 lo,
                         i128 hi) {
    if (lo > hi) return 0;
    auto ble = [&](i128 j) { return le_at(b1, b2, j); };  // B = min(b1, b2)
    i128 k = monotone_prefix_end(lo, hi, ble);
    i128 total = seg_with_b(ble(lo) ? b1 : b2, a1, a2, lo, k);
    if (k < hi) total += seg_with_b(ble(k + 1) ? b1 : b2, a1, a2, k + 1, hi);
    return total;
}

// bound fractions for lo <= (alpha*j + beta) + s*t <= hi as functions of j, s != 0;
// returns {A, B} with A <= t <= B the admissible parameter window
std::pair<LinFrac, LinFrac> window_fracs(i128 alpha, i128 beta, i128 s, i128 lo, i128 hi) {
    if (s > 0) return {LinFrac{-alpha, lo - beta, s}, LinFrac{-alpha, hi - beta, s}};
    return {LinFrac{alpha, beta - hi, -s}, LinFrac{alpha, beta - lo, -s}};
}

}  // namespace

i128 count_pair(i128 a, i128 b, i128 r, i128 xlo, i128 xhi, i128 ylo, i128 yhi) {
    if (xlo > xhi || ylo > yhi) return 0;
    if (a == 0 && b == 0) return r == 0 ? len_range(xlo, xhi) * len_range(ylo, yhi) : 0;
    if (a == 0) {
        if (r % b != 0) return 0;
        i128 y = r / b;
        return (ylo <= y && y <= yhi) ? len_range(xlo, xhi) : 0;
    }
    if (b == 0) {
        if (r % a != 0) return 0;
        i128 x = r / a;
        return (xlo <= x && x <= xhi) ? len_range(ylo, yhi) : 0;
    }
    i128 g = gcd128(a, b);
    if (r % g != 0) return 0;
    a /= g;
    b /= g;
    r /= g;
    auto e = xgcd(a, b);
    i128 x0 = e.u * r, y0 = e.v * r;
    // x = x0 + b*t, y = y0 - a*t
    i128 t1lo, t1hi, t2lo, t2hi;
    step_interval(x0, b, xlo, xhi, t1lo, t1hi);
    step_interval(y0, -a, ylo, yhi, t2lo, t2hi);
    return len_range(std::max(t1lo, t2lo), std::min(t1hi, t2hi));
}

i128 count_triple(i128 c1, i128 c2, i128 c3, i128 r, i128 t, i128 xlo, i128 xhi) {
    xlo = std::max(xlo, -t);
    xhi = std::min(xhi, t);
    if (xlo > xhi) return 0;
    i128 side = 2 * t + 1;
    if (c2 == 0 && c3 == 0) {
        i128 nx;
        if (c1 == 0)
            nx = (r == 0) ? len_range(xlo, xhi) : 0;
        else if (r % c1 == 0) {
            i128 x = r / c1;
            nx = (xlo <= x && x <= xhi) ? 1 : 0;
        } else
            nx = 0;
        return nx * side * side;
    }
    if (c2 == 0) return count_pair(c1, c3, r, xlo, xhi, -t, t) * side;
    if (c3 == 0) return count_pair(c1, c2, r, xlo, xhi, -t, t) * side;

    i128 g = gcd128(c2, c3);
    i128 c2g = c2 / g, c3g = c3 / g;
    // x runs over the residue class solving c1*x == r (mod g)
    i128 x_anchor, step, jlo, jhi;
    if (g == 1) {
        x_anchor = 0;
        step = 1;
        jlo = xlo;
        jhi = xhi;
    } else {
        i128 gam = gcd128(c1, g);
        if (r % gam != 0) return 0;
        i128 g1 = g / gam;
        if (g1 == 1) {
            x_anchor = 0;
        } else {
            i128 a1 = ((c1 / gam) % g1 + g1) % g1;
            i128 r1 = ((r / gam) % g1 + g1) % g1;
            i128 inv = ((xgcd(a1, g1).u % g1) + g1) % g1;
            x_anchor = (inv * r1) % g1;
        }
        step = g1;
        jlo = ceil_div(xlo - x_anchor, step);
        jhi = floor_div(xhi - x_anchor, step);
        if (jlo > jhi) return 0;
    }
    // s(j) = (r - c1*(x_anchor + step*j))/g = s0 - d*j, both divisions exact
    i128 s0 = (r - c1 * x_anchor) / g;
    i128 d = (c1 * step) / g;
    auto e = xgcd(c2g, c3g);  // c2g*u + c3g*v == 1
    // particular pair for target s: y0 = u*s, z0 = v*s; y = y0 + c3g*tt, z = z0 - c2g*tt
    auto [a1f, b1f] = window_fracs(-e.u * d, e.u * s0, c3g, -t, t);
    auto [a2f, b2f] = window_fracs(-e.v * d, e.v * s0, -c2g, -t, t);
    return sum_interval_counts(b1f, b2f, a1f, a2f, jlo, jhi);
}

i128 count_slice_fixed(const i64* c, int dims, i128 r, i64 t, i64 xlo, i64 xhi) {
    i128 lo = std::max<i128>(xlo, -t), hi = std::min<i128>(xhi, t);
    if (lo > hi) return 0;
    if (dims == 1) {
        if (c[0] == 0) return r == 0 ? len_range(lo, hi) : 0;
        if (r % c[0] != 0) return 0;
        i128 x = r / c[0];
        return (lo <= x && x <= hi) ? 1 : 0;
    }
    if (dims == 2) return count_pair(c[0], c[1], r, lo, hi, -t, t);
    if (dims == 3) return count_triple(c[0], c[1], c[2], r, t, lo, hi);
    if (c[0] == 0) return len_range(lo, hi) * count_slice_fixed(c + 1, dims - 1, r, t, -t, t);
    i128 wsuf = 0;
    for (int i = 1; i < dims; ++i) wsuf += c[i] < 0 ? -(i128)c[i] : (i128)c[i];
    i128 total = 0;
    for (i128 x = lo; x <= hi; ++x) {
        i128 rr = r - (i128)c[0] * x;
        if ((rr < 0 ? -rr : rr) > wsuf * t) continue;
        total += count_slice_fixed(c + 1, dims - 1, rr, t, -t, t);
    }
    return total;
}

}  // namespace latext::detail
