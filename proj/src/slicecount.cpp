#include "latext/slicecount.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "latext/counting_kernel.hpp"
#include "latext/exactalg.hpp"
#include "latext/int_matrix.hpp"

namespace latext {

LinearForm::LinearForm(std::vector<Int> c) : coeffs(std::move(c)) {
    if (coeffs.size() < 2) throw DimensionError("linear form needs at least 2 coefficients");
    Int content = gcd_all(coeffs);
    if (content != 1)
        throw DomainError("linear form must be primitive, coefficient gcd is " + content.get_str());
    norm = 0;
    for (const auto& x : coeffs) {
        Int a = abs_int(x);
        if (a > norm) norm = a;
    }
}

Int LinearForm::eval(const std::vector<Int>& z) const {
    if (z.size() != coeffs.size()) throw DimensionError("point dimension does not match form");
    Int s = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * z[i];
    return s;
}

SliceSpec::SliceSpec(LinearForm f, Int b_, Int t_) : form(std::move(f)), b(std::move(b_)), t(std::move(t_)) {
    if (t < 0) throw DomainError("cube radius must be nonnegative");
}

SliceBounds slice_bounds(const SliceSpec& spec) {
    int n = spec.form.n();
    const Int& nr = spec.form.norm;
    Int m = std::max(nr, abs_int(spec.b));
    Rat up = (Rat(2 * (spec.t + m)) / Rat(nr) + 1) * Rat(pow_int(2 * (spec.t + m) + 1, n - 2));
    SliceBounds out;
    out.upper = floor_rat(up);
    if (spec.t >= m) {
        Rat lo = (Rat(2 * (spec.t - m)) / Rat(nr) - 1) * Rat(pow_int(2 * (spec.t - m) - 1, n - 2));
        out.lower = ceil_rat(lo);
    }
    out.asymptotic = Rat(pow_int(2 * spec.t, n - 1)) / Rat(nr);
    return out;
}

namespace {

// x-interval with |rem - c*x| <= w, intersected with [lo, hi]
bool coord_window(const Int& c, const Int& rem, const Int& w, Int& lo, Int& hi) {
    if (c == 0) return abs_int(rem) <= w;
    Int a = rem - w, b = rem + w;
    Int xlo, xhi;
    if (c > 0) {
        xlo = cdiv(a, c);
        xhi = fdiv(b, c);
    } else {
        xlo = cdiv(b, c);
        xhi = fdiv(a, c);
    }
    if (xlo > lo) lo = xlo;
    if (xhi < hi) hi = xhi;
    return lo <= hi;
}

struct EnumCtx {
    const std::vector<Int>& c;
    const Int& t;
    std::vector<Int> wsuf;  // wsuf[k] = sum_{i >= k} |c_i|
    const std::function<bool(const std::vector<Int>&)>& sink;
    std::vector<Int> cur;
};

bool enum_rec(EnumCtx& ctx, size_t k, const Int& rem, const Int& lo0, const Int& hi0) {
    size_t n = ctx.c.size();
    if (k == n - 1) {
        const Int& cn = ctx.c[k];
        if (cn == 0) {
            if (rem != 0) return true;
            for (Int x = lo0; x <= hi0; ++x) {
                ctx.cur[k] = x;
                if (!ctx.sink(ctx.cur)) return false;
            }
            return true;
        }
        if (rem % cn != 0) return true;
        Int x = rem / cn;
        if (x < lo0 || x > hi0) return true;
        ctx.cur[k] = x;
        return ctx.sink(ctx.cur);
    }
    Int lo = lo0, hi = hi0;
    if (!coord_window(ctx.c[k], rem, ctx.wsuf[k + 1] * ctx.t, lo, hi)) return true;
    for (Int x = lo; x <= hi; ++x) {
        ctx.cur[k] = x;
        if (!enum_rec(ctx, k + 1, rem - ctx.c[k] * x, -ctx.t, ctx.t)) return false;
    }
    return true;
}

// reference count over coordinates k.., first restricted to [xlo, xhi]
Int generic_count(const std::vector<Int>& c, size_t k, const Int& b, const Int& t, Int xlo, Int xhi) {
    size_t dims = c.size() - k;
    if (xlo < -t) xlo = -t;
    if (xhi > t) xhi = t;
    if (xlo > xhi) return 0;
    if (dims == 1) {
        if (c[k] == 0) return b == 0 ? xhi - xlo + 1 : Int(0);
        if (b % c[k] != 0) return 0;
        Int x = b / c[k];
        return (xlo <= x && x <= xhi) ? Int(1) : Int(0);
    }
    if (dims == 2) {
        const Int &p = c[k], &q = c[k + 1];
        if (p == 0 && q == 0) return b == 0 ? (xhi - xlo + 1) * (2 * t + 1) : Int(0);
        if (p == 0) {
            if (b % q != 0) return 0;
            Int y = b / q;
            return abs_int(y) <= t ? xhi - xlo + 1 : Int(0);
        }
        if (q == 0) {
            if (b % p != 0) return 0;
            Int x = b / p;
            return (xlo <= x && x <= xhi) ? 2 * t + 1 : Int(0);
        }
        Int g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (b % g != 0) return 0;
        Int r = b / g, ps = p / g, qs = q / g;
        Int x0 = u * r, y0 = v * r;
        // x = x0 + qs*s, y = y0 - ps*s
        Int s1lo, s1hi, s2lo, s2hi;
        if (qs > 0) {
            s1lo = cdiv(xlo - x0, qs);
            s1hi = fdiv(xhi - x0, qs);
        } else {
            s1lo = cdiv(xhi - x0, qs);
            s1hi = fdiv(xlo - x0, qs);
        }
        Int mps = -ps;
        if (mps > 0) {
            s2lo = cdiv(-t - y0, mps);
            s2hi = fdiv(t - y0, mps);
        } else {
            s2lo = cdiv(t - y0, mps);
            s2hi = fdiv(-t - y0, mps);
        }
        Int lo = std::max(s1lo, s2lo), hi = std::min(s1hi, s2hi);
        return hi >= lo ? hi - lo + 1 : Int(0);
    }
    if (c[k] == 0) return (xhi - xlo + 1) * generic_count(c, k + 1, b, t, -t, t);
    Int wsuf = 0;
    for (size_t i = k + 1; i < c.size(); ++i) wsuf += abs_int(c[i]);
    Int lo = xlo, hi = xhi;
    if (!coord_window(c[k], b, wsuf * t, lo, hi)) return 0;
    Int total = 0;
    for (Int x = lo; x <= hi; ++x) total += generic_count(c, k + 1, b - c[k] * x, t, -t, t);
    return total;
}

bool kernel_fits(const SliceSpec& spec) {
    if (spec.form.n() > detail::kMaxDims) return false;
    if (spec.form.norm >= static_cast<long>(detail::kMaxCoeff)) return false;
    if (spec.t >= static_cast<long>(detail::kMaxT)) return false;
    if (abs_int(spec.b) >= static_cast<long>(detail::kMaxB)) return false;
    return true;
}

Int int_from_i128(detail::i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Int hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u));
    Int r = (hi << 64) + lo;
    return neg ? Int(-r) : r;
}

Int sup_of(const std::vector<Int>& v) {
    Int m = 0;
    for (const auto& x : v) {
        Int a = abs_int(x);
        if (a > m) m = a;
    }
    return m;
}

}  // namespace

void enumerate_slice(const SliceSpec& spec, const std::function<bool(const std::vector<Int>&)>& sink) {
    size_t n = spec.form.coeffs.size();
    EnumCtx ctx{spec.form.coeffs, spec.t, {}, sink, std::vector<Int>(n)};
    ctx.wsuf.assign(n + 1, Int(0));
    for (size_t i = n; i-- > 0;) ctx.wsuf[i] = ctx.wsuf[i + 1] + abs_int(spec.form.coeffs[i]);
    enum_rec(ctx, 0, spec.b, -spec.t, spec.t);
}

std::vector<std::vector<Int>> enumerate_slice(const SliceSpec& spec) {
    std::vector<std::vector<Int>> out;
    enumerate_slice(spec, [&](const std::vector<Int>& z) {
        out.push_back(z);
        return true;
    });
    return out;
}

Int count_slice_range(const SliceSpec& spec, const Int& x1lo, const Int& x1hi) {
    Int lo = std::max(x1lo, Int(-spec.t)), hi = std::min(x1hi, spec.t);
    if (lo > hi) return 0;
    if (kernel_fits(spec)) {
        std::vector<detail::i64> cs;
        cs.reserve(spec.form.coeffs.size());
        for (const auto& x : spec.form.coeffs) cs.push_back(x.get_si());
        return int_from_i128(detail::count_slice_fixed(cs.data(), static_cast<int>(cs.size()),
                                                       spec.b.get_si(), spec.t.get_si(), lo.get_si(),
                                                       hi.get_si()));
    }
    return generic_count(spec.form.coeffs, 0, spec.b, spec.t, lo, hi);
}

Int count_slice(const SliceSpec& spec) { return count_slice_range(spec, -spec.t, spec.t); }

Int count_slice_threaded(const SliceSpec& spec, int threads) {
    if (threads < 1) throw DomainError("thread count must be positive");
    Int width = 2 * spec.t + 1;
    if (threads == 1 || width <= 2 * threads) return count_slice(spec);
    std::vector<Int> parts(threads, Int(0));
    std::vector<std::thread> pool;
    Int chunk = cdiv(width, Int(threads));
    for (int i = 0; i < threads; ++i) {
        Int lo = -spec.t + chunk * i;
        Int hi = std::min(Int(lo + chunk - 1), spec.t);
        if (lo > hi) break;
        pool.emplace_back([&spec, &parts, i, lo, hi] { parts[i] = count_slice_range(spec, lo, hi); });
    }
    for (auto& th : pool) th.join();
    Int total = 0;
    for (const auto& p : parts) total += p;
    return total;
}

std::vector<Int> small_solution(const LinearForm& form, const Int& b) {
    size_t n = form.coeffs.size();
    const auto& c = form.coeffs;
    Int bound = std::max(form.norm, abs_int(b));

    // particular solution via the iterated Bezout chain, collecting kernel vectors
    std::vector<Int> z(n, 0);
    z[0] = 1;
    Int g = c[0];
    IntMatrix kern(static_cast<int>(n), static_cast<int>(n) - 1);
    for (size_t i = 1; i < n; ++i) {
        Int gi, u, v;
        mpz_gcdext(gi.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t(), c[i].get_mpz_t());
        Int f1 = c[i] / gi, f2 = g / gi;
        for (size_t j = 0; j < n; ++j)
            kern.at(static_cast<int>(j), static_cast<int>(i) - 1) = f1 * z[j];
        kern.at(static_cast<int>(i), static_cast<int>(i) - 1) -= f2;
        for (size_t j = 0; j < n; ++j) z[j] *= u;
        z[i] += v;
        g = gi;
    }
    for (size_t j = 0; j < n; ++j) z[j] *= b;

    // greedy sup-norm descent along size-reduced kernel directions
    size_reduce_columns(kern);
    bool improved = true;
    while (improved && sup_of(z) > bound) {
        improved = false;
        for (int col = 0; col < kern.cols(); ++col) {
            std::vector<Int> w = kern.col(col);
            std::set<Int> cands{Int(1), Int(-1)};
            for (size_t i = 0; i < n; ++i) {
                if (w[i] == 0) continue;
                Int q = fdiv(z[i], w[i]);
                cands.insert(q);
                cands.insert(Int(q + 1));
            }
            Int best = sup_of(z);
            Int bestk = 0;
            for (const auto& kk : cands) {
                if (kk == 0) continue;
                std::vector<Int> trial(n);
                for (size_t i = 0; i < n; ++i) trial[i] = z[i] - kk * w[i];
                Int s = sup_of(trial);
                if (s < best) {
                    best = s;
                    bestk = kk;
                }
            }
            if (bestk != 0) {
                for (size_t i = 0; i < n; ++i) z[i] -= bestk * w[i];
                improved = true;
            }
        }
    }
    if (sup_of(z) <= bound) return z;

    // exhaustive fallback inside the guaranteed box
    std::vector<Int> found;
    bool ok = false;
    enumerate_slice(SliceSpec(form, b, bound), [&](const std::vector<Int>& pt) {
        found = pt;
        ok = true;
        return false;
    });
    if (!ok) throw Error("no solution inside the guaranteed box");
    return found;
}

}  // namespace latext
