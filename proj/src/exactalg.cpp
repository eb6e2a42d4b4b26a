#include "latext/exactalg.hpp"

#include <algorithm>

namespace latext {

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant needs a square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        // pivot: smallest nonzero |entry| in column k at/below row k, lowest row on ties
        int piv = -1;
        Int best;
        for (int i = k; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            Int v = abs_int(a.at(i, k));
            if (piv < 0 || v < best) {
                piv = i;
                best = v;
            }
        }
        if (piv < 0) return 0;
        if (piv != k) {
            a.swap_rows(piv, k);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Int d = a.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

namespace {

// nearest-integer quotient, halves rounded up; keeps remainders within |p|/2
Int balanced_quot(const Int& s, const Int& p) {
    Int ap = abs_int(p);
    Int q = fdiv(2 * s + ap, 2 * ap);
    return p > 0 ? q : Int(-q);
}

struct SnfWork {
    IntMatrix s, u, v;

    void row_sub(int dst, int src, const Int& q) {  // row dst -= q * row src
        if (q == 0) return;
        for (int j = 0; j < s.cols(); ++j) s.at(dst, j) -= q * s.at(src, j);
        for (int j = 0; j < u.cols(); ++j) u.at(dst, j) -= q * u.at(src, j);
    }
    void col_sub(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < s.rows(); ++i) s.at(i, dst) -= q * s.at(i, src);
        for (int i = 0; i < v.rows(); ++i) v.at(i, dst) -= q * v.at(i, src);
    }
    void row_swap(int i, int j) {
        s.swap_rows(i, j);
        u.swap_rows(i, j);
    }
    void col_swap(int i, int j) {
        s.swap_cols(i, j);
        v.swap_cols(i, j);
    }
    void row_negate(int i) {
        for (int j = 0; j < s.cols(); ++j) s.at(i, j) = -s.at(i, j);
        for (int j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
    }
};

}  // namespace

SmithResult snf(const IntMatrix& m) {
    int r = m.rows(), c = m.cols();
    SnfWork w{m, IntMatrix::identity(r), IntMatrix::identity(c)};
    int steps = std::min(r, c);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // pivot selection: smallest |entry| != 0 in the trailing block,
            // ties broken by lowest row index, then lowest column index
            int pi = -1, pj = -1;
            Int best;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    if (w.s.at(i, j) == 0) continue;
                    Int v = abs_int(w.s.at(i, j));
                    if (pi < 0 || v < best) {
                        pi = i;
                        pj = j;
                        best = v;
                    }
                }
            if (pi < 0) {  // trailing block all zero: done
                t = steps;
                break;
            }
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (w.s.at(i, t) == 0) continue;
                Int q = balanced_quot(w.s.at(i, t), w.s.at(t, t));
                w.row_sub(i, t, q);
                if (w.s.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (w.s.at(t, j) == 0) continue;
                Int q = balanced_quot(w.s.at(t, j), w.s.at(t, t));
                w.col_sub(j, t, q);
                if (w.s.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller remainders exist, re-pick pivot

            // pivot must divide the whole trailing block for the chain property
            int bi = -1, bj = -1;
            for (int i = t + 1; i < r && bi < 0; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (w.s.at(i, j) % w.s.at(t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi >= 0) {
                w.row_sub(t, bi, Int(-1));  // fold offending row in, keep reducing
                continue;
            }
            break;
        }
        if (t >= steps) break;
    }
    for (int t = 0; t < steps; ++t)
        if (w.s.at(t, t) < 0) w.row_negate(t);
    return {w.s, w.u, w.v};
}

const Int& GrassmannCoords::at(const IndexSubset& s) const {
    auto it = std::lower_bound(coords.begin(), coords.end(), s,
                               [](const auto& p, const IndexSubset& k) { return p.first < k; });
    if (it == coords.end() || it->first != s) throw DomainError("no such subset in coordinate map");
    return it->second;
}

GrassmannCoords grassmann(const IntMatrix& a) {
    int n = a.rows(), m = a.cols();
    if (m < 1 || n < m) throw DimensionError("grassmann needs n >= m >= 1");
    GrassmannCoords g;
    g.n = n;
    g.m = m;
    for (const auto& s : index_subsets(n, m)) {
        Int d = det(a.select_rows(s.idx));
        g.coords.emplace_back(s, d);
    }
    std::vector<Int> vals;
    vals.reserve(g.coords.size());
    for (auto& p : g.coords) vals.push_back(p.second);
    g.gcd = gcd_all(vals);
    return g;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse needs a square matrix");
    int n = m.rows();
    Int d = det(m);
    if (d != 1 && d != -1) throw DomainError("matrix is not unimodular");
    IntMatrix inv(n, n);
    if (n == 0) return inv;
    // adjugate via cofactors; fine at the sizes this library targets
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> ri, cj;
            for (int k = 0; k < n; ++k) {
                if (k != i) ri.push_back(k + 1);
                if (k != j) cj.push_back(k + 1);
            }
            Int cof = det(m.select_rows(ri).select_cols(cj));
            if ((i + j) & 1) cof = -cof;
            inv.at(j, i) = cof * d;  // adj / det == adj * det for det == +-1
        }
    return inv;
}

void size_reduce_columns(IntMatrix& m) {
    int c = m.cols(), r = m.rows();
    auto norm1 = [&](int j) {
        Int s = 0;
        for (int i = 0; i < r; ++i) s += abs_int(m.at(i, j));
        return s;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = 0; j < c; ++j)
            for (int k = 0; k < c; ++k) {
                if (j == k) continue;
                Int base = norm1(j);
                for (int sgn : {1, -1}) {
                    Int trial = 0;
                    for (int i = 0; i < r; ++i) trial += abs_int(m.at(i, j) - sgn * m.at(i, k));
                    if (trial < base) {
                        for (int i = 0; i < r; ++i) m.at(i, j) -= sgn * m.at(i, k);
                        changed = true;
                        base = trial;
                    }
                }
            }
    }
    // deterministic column order: by norm, then entrywise
    std::vector<int> order(c);
    for (int j = 0; j < c; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        Int nx = norm1(x), ny = norm1(y);
        if (nx != ny) return nx < ny;
        for (int i = 0; i < r; ++i)
            if (m.at(i, x) != m.at(i, y)) return m.at(i, x) < m.at(i, y);
        return false;
    });
    IntMatrix out(r, c);
    for (int j = 0; j < c; ++j) out.set_col(j, m.col(order[j]));
    m = out;
}

}  // namespace latext
