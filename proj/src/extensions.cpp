#include "latext/extensions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "latext/exactalg.hpp"
#include "latext/primitivity.hpp"

namespace latext {

namespace {

void check_primitive(const IntMatrix& a) {
    PrimitivityReport r = is_primitive(a);
    if (!r.primitive)
        throw PrimitivityError("collection is not primitive, minor gcd is " + r.gcd.get_str(), r.gcd);
}

// iterate z over [-t, t]^n in lexicographic order
template <class Fn>
bool cube_scan(int n, const Int& t, Fn&& fn) {
    std::vector<Int> z(n, -t);
    if (t < 0) return true;
    for (;;) {
        if (!fn(z)) return false;
        int k = n - 1;
        while (k >= 0 && z[k] == t) z[k--] = -t;
        if (k < 0) return true;
        ++z[k];
    }
}

Int minor_det(const IntMatrix& m, int skip_row, int skip_col) {
    IntMatrix sub(m.rows() - 1, m.cols() - 1);
    int ri = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (i == skip_row) continue;
        int cj = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (j == skip_col) continue;
            sub.at(ri, cj++) = m.at(i, j);
        }
        ++ri;
    }
    return det(sub);
}

IntMatrix adjugate(const IntMatrix& m) {
    int n = m.rows();
    IntMatrix adj(n, n);
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int c = minor_det(m, i, j);
            adj.at(j, i) = ((i + j) % 2 == 0) ? c : Int(-c);
        }
    return adj;
}

// all (m+1)-row minor forms of (A x) as linear forms in x, via cached m-minors of A
struct MinorForms {
    std::vector<std::vector<Int>> coeffs;  // one dense coefficient vector per (m+1)-subset
    Int max_abs;                           // largest |coefficient|
};

MinorForms minor_forms(const IntMatrix& a) {
    int n = a.rows(), m = a.cols();
    MinorForms out;
    out.max_abs = 0;
    std::vector<IndexSubset> msubs = index_subsets(n, m);
    std::vector<Int> mminors(msubs.size());
    for (size_t i = 0; i < msubs.size(); ++i) mminors[i] = det(a.select_rows(msubs[i].idx));
    auto minor_of = [&](const std::vector<int>& rows) {
        IndexSubset key(rows);
        auto it = std::lower_bound(msubs.begin(), msubs.end(), key);
        return mminors[static_cast<size_t>(it - msubs.begin())];
    };
    for (const IndexSubset& sub : index_subsets(n, m + 1)) {
        std::vector<Int> c(n, 0);
        for (size_t j = 0; j < sub.idx.size(); ++j) {
            std::vector<int> rest;
            for (size_t k = 0; k < sub.idx.size(); ++k)
                if (k != j) rest.push_back(sub.idx[k]);
            Int d = minor_of(rest);
            c[sub.idx[j] - 1] = ((j + 1 + m + 1) % 2 == 0) ? d : Int(-d);
            Int ad = abs_int(c[sub.idx[j] - 1]);
            if (ad > out.max_abs) out.max_abs = ad;
        }
        out.coeffs.push_back(std::move(c));
    }
    return out;
}

Int count_primext_range(const MinorForms& forms, int n, const Int& t, const Int& lo, const Int& hi,
                        bool fast) {
    Int total = 0;
    if (fast) {
        long tl = t.get_si(), lol = lo.get_si(), hil = hi.get_si();
        std::vector<std::vector<long>> fc;
        for (const auto& c : forms.coeffs) {
            std::vector<long> v(c.size());
            bool zero = true;
            for (size_t i = 0; i < c.size(); ++i) {
                v[i] = c[i].get_si();
                if (v[i] != 0) zero = false;
            }
            if (!zero) fc.push_back(std::move(v));
        }
        std::vector<long> z(static_cast<size_t>(n), -tl);
        z[0] = lol;
        if (lol > hil || tl < 0) return 0;
        long count = 0;
        for (;;) {
            long g = 0;
            for (const auto& c : fc) {
                long v = 0;
                for (int i = 0; i < n; ++i) v += c[i] * z[i];
                g = std::gcd(g, v);
                if (g == 1) break;
            }
            if (g == 1) ++count;
            int k = n - 1;
            while (k > 0 && z[k] == tl) z[k--] = -tl;
            if (k == 0) {
                if (z[0] == hil) break;
                ++z[0];
            } else
                ++z[k];
        }
        return count;
    }
    std::vector<Int> z(static_cast<size_t>(n), -t);
    z[0] = lo;
    if (lo > hi || t < 0) return 0;
    for (;;) {
        Int g = 0;
        for (const auto& c : forms.coeffs) {
            Int v = 0;
            for (int i = 0; i < n; ++i)
                if (c[i] != 0) v += c[i] * z[i];
            g = gcdz(g, v);
            if (g == 1) break;
        }
        if (g == 1) ++total;
        int k = n - 1;
        while (k > 0 && z[k] == t) z[k--] = -t;
        if (k == 0) {
            if (z[0] == hi) break;
            ++z[0];
        } else
            ++z[k];
    }
    return total;
}

}  // namespace

DetForm det_form(const IntMatrix& a) {
    int n = a.rows();
    if (a.cols() != n - 1) throw DimensionError("determinantal form needs an n x (n-1) matrix");
    check_primitive(a);
    std::vector<Int> c(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        std::vector<int> rows;
        for (int i = 1; i <= n; ++i)
            if (i != k + 1) rows.push_back(i);
        Int d = det(a.select_rows(rows));
        c[static_cast<size_t>(k)] = ((n + k + 1) % 2 == 0) ? d : Int(-d);
    }
    LinearForm form(std::move(c));
    Int delta = form.norm;
    return DetForm{a, std::move(form), std::move(delta)};
}

namespace {

ExtensionCount make_extension_count(const DetForm& f, const Int& t, int threads) {
    int n = f.base.rows();
    SliceSpec plus{f.coeffs, Int(1), t};
    SliceSpec minus{f.coeffs, Int(-1), t};
    ExtensionCount out;
    out.t = t;
    out.count = count_slice_threaded(plus, threads) + count_slice_threaded(minus, threads);
    const Int& d = f.delta;
    Rat up = 2 * (Rat(2 * t) / Rat(d) + 3) * Rat(pow_int(2 * (t + d) + 1, n - 2));
    out.upper = floor_rat(up);
    if (t >= d) {
        Rat lo = 2 * (Rat(2 * t) / Rat(d) - 3) * Rat(pow_int(2 * (t - d) - 1, n - 2));
        out.lower = ceil_rat(lo);
    }
    out.asymptotic = Rat(2 * pow_int(2 * t, n - 1)) / Rat(d);
    return out;
}

}  // namespace

void enumerate_basis_extensions(const IntMatrix& a, const Int& t,
                                const std::function<bool(const std::vector<Int>&)>& sink) {
    DetForm f = det_form(a);
    SliceSpec plus{f.coeffs, Int(1), t};
    SliceSpec minus{f.coeffs, Int(-1), t};
    auto p = enumerate_slice(plus);
    auto q = enumerate_slice(minus);
    std::vector<std::vector<Int>> merged;
    merged.reserve(p.size() + q.size());
    std::merge(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(merged));
    for (const auto& z : merged) {
        if (abs_int(det(a.with_col(z))) != 1)
            throw Error("internal: emitted extension failed determinant re-verification");
        if (!sink(z)) return;
    }
}

std::vector<std::vector<Int>> enumerate_basis_extensions(const IntMatrix& a, const Int& t) {
    std::vector<std::vector<Int>> out;
    enumerate_basis_extensions(a, t, [&](const std::vector<Int>& z) {
        out.push_back(z);
        return true;
    });
    return out;
}

ExtensionCount count_basis_extensions(const IntMatrix& a, const Int& t, int threads) {
    if (t < 0) throw DomainError("radius must be nonnegative");
    return make_extension_count(det_form(a), t, threads);
}

Int count_primitive_extensions(const IntMatrix& a, const Int& t, int threads) {
    if (t < 0) throw DomainError("radius must be nonnegative");
    check_primitive(a);
    int n = a.rows(), m = a.cols();
    if (m >= n - 1) throw DimensionError("requires m < n-1; use count_basis_extensions for m == n-1");
    MinorForms forms = minor_forms(a);
    bool fast = (m + 2) * forms.max_abs * std::max(t, Int(1)) < (Int(1) << 62) && t < (Int(1) << 30);
    if (threads < 1) throw DomainError("thread count must be positive");
    Int width = 2 * t + 1;
    if (threads == 1 || width <= 2 * threads) return count_primext_range(forms, n, t, -t, t, fast);
    std::vector<Int> parts(static_cast<size_t>(threads), Int(0));
    std::vector<std::thread> pool;
    Int chunk = cdiv(width, Int(threads));
    for (int i = 0; i < threads; ++i) {
        Int lo = -t + chunk * i;
        Int hi = std::min(Int(lo + chunk - 1), t);
        if (lo > hi) break;
        pool.emplace_back([&forms, &parts, n, &t, i, lo, hi, fast] {
            parts[static_cast<size_t>(i)] = count_primext_range(forms, n, t, lo, hi, fast);
        });
    }
    for (auto& th : pool) th.join();
    Int total = 0;
    for (const auto& p : parts) total += p;
    return total;
}

namespace {

Int full_completions_rec(const IntMatrix& a, const Int& t) {
    int n = a.rows(), m = a.cols();
    if (m == n) return 1;
    if (m == n - 1) return count_basis_extensions(a, t).count;
    Int total = 0;
    cube_scan(n, t, [&](const std::vector<Int>& z) {
        IntMatrix ext = a.with_col(z);
        if (is_primitive(ext).primitive) total += full_completions_rec(ext, t);
        return true;
    });
    return total;
}

}  // namespace

Int count_full_completions(const IntMatrix& a, const Int& t) {
    if (t < 0) throw DomainError("radius must be nonnegative");
    check_primitive(a);
    int n = a.rows(), m = a.cols();
    long levels = n - m - 1;
    if (levels > 0) {
        Int work = pow_int(2 * t + 1, static_cast<int>(levels) * n);
        if (work > 100000000)
            throw ResourceGuardError("refusing completion enumeration: (2T+1)^(n(n-m-1)) = " +
                                     work.get_str() + " exceeds 10^8");
    }
    return full_completions_rec(a, t);
}

LatticeCtx make_lattice(const IntMatrix& u) {
    if (u.rows() != u.cols()) throw DimensionError("lattice basis must be square");
    Int d = det(u);
    if (d == 0) throw DomainError("lattice basis must be invertible");
    IntMatrix adj = adjugate(u);
    Int max_adj = adj.sup_norm();
    LatticeCtx ctx{u, std::move(adj), d, u.sup_norm(), Rat(max_adj) / Rat(abs_int(d))};
    return ctx;
}

IntMatrix lattice_pullback(const LatticeCtx& ctx, const IntMatrix& a) {
    if (a.rows() != ctx.u.rows()) throw DimensionError("vector dimension does not match lattice");
    IntMatrix w = ctx.adj.mul(a);
    IntMatrix out(a.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) {
            if (w.at(i, j) % ctx.det != 0)
                throw LatticeMembershipError(
                    "column " + std::to_string(j + 1) + " is not a lattice member", j + 1);
            out.at(i, j) = w.at(i, j) / ctx.det;
        }
    return out;
}

Int count_extensions_in_lattice(const LatticeCtx& ctx, const IntMatrix& a, const Int& t) {
    if (t < 0) throw DomainError("radius must be nonnegative");
    int n = ctx.u.rows(), m = a.cols();
    if (m >= n) throw DimensionError("collection already has full rank, nothing to extend");
    IntMatrix ap = lattice_pullback(ctx, a);
    check_primitive(ap);
    Int box = ceil_rat(Rat(n) * ctx.norm_u_inv * Rat(t));
    Int volume = pow_int(2 * box + 1, n);
    if (volume > 2000000000)
        throw ResourceGuardError("refusing lattice enumeration: pullback box holds " + volume.get_str() +
                                 " points");
    Int total = 0;
    cube_scan(n, box, [&](const std::vector<Int>& bp) {
        std::vector<Int> b = ctx.u.apply(bp);
        for (const auto& x : b)
            if (abs_int(x) > t) return true;
        IntMatrix ext = ap.with_col(bp);
        if (is_primitive(ext).primitive) ++total;
        return true;
    });
    return total;
}

std::vector<SweepRow> asymptotic_sweep(const IntMatrix& a, const std::vector<Int>& ts, int threads) {
    int n = a.rows(), m = a.cols();
    std::vector<SweepRow> rows;
    std::optional<std::pair<Rat, Rat>> zeta;
    for (const Int& t : ts) {
        SweepRow row;
        row.t = t;
        if (m == n - 1) {
            ExtensionCount ec = count_basis_extensions(a, t, threads);
            row.count = ec.count;
            row.lower = ec.lower;
            row.upper = ec.upper;
            row.asymptotic = ec.asymptotic;
        } else {
            row.count = count_primitive_extensions(a, t, threads);
            if (!zeta) zeta = zeta_partial(n, 10000);
            const auto& [zlo, zhi] = *zeta;
            Rat side(pow_int(2 * t + 1, n));
            row.upper = floor_rat((1 / zlo + Rat(1, 20)) * side);
            Rat mid = (1 / zlo + 1 / zhi) / 2;
            row.asymptotic = mid * side;
        }
        if (*row.asymptotic != 0) row.ratio = Rat(Rat(row.count) / *row.asymptotic).get_d();
        rows.push_back(std::move(row));
    }
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i - 1].count <= 0 || rows[i].count <= 0) continue;
        if (rows[i - 1].t <= 0 || rows[i].t == rows[i - 1].t) continue;
        double dc = std::log(Rat(Rat(rows[i].count) / Rat(rows[i - 1].count)).get_d());
        double dt = std::log(Rat(Rat(rows[i].t) / Rat(rows[i - 1].t)).get_d());
        rows[i].fitted_exponent = dc / dt;
    }
    return rows;
}

std::pair<Rat, Rat> zeta_partial(int n, long terms) {
    if (n < 2) throw DomainError("zeta tail bound needs exponent >= 2");
    if (terms < 1) throw DomainError("need at least one term");
    Rat lo(0);
    for (long k = 1; k <= terms; ++k) lo += Rat(1) / Rat(pow_int(Int(k), n));
    Rat tail = Rat(1) / (Rat(n - 1) * Rat(pow_int(Int(terms), n - 1)));
    return {lo, lo + tail};
}

}  // namespace latext
