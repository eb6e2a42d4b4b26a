#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "latext/int_matrix.hpp"
#include "latext/slicecount.hpp"

namespace latext {

// determinantal form of a primitive n x (n-1) collection:
// L_A(z) = det(A z) = sum_k (-1)^(n+k) det(A_k) z_k, A_k dropping row k
struct DetForm {
    IntMatrix base;
    LinearForm coeffs;
    Int delta;  // max_k |det(A_k)| == coeffs.norm
};

DetForm det_form(const IntMatrix& a);

struct ExtensionCount {
    Int t;
    Int count;
    Int upper;                 // floor of 2(2T/delta + 3)(2(T+delta)+1)^(n-2)
    std::optional<Int> lower;  // ceil of 2(2T/delta - 3)(2(T-delta)-1)^(n-2), when T >= delta
    Rat asymptotic;            // 2(2T)^(n-1)/delta
};

// z with |z| <= T completing A to a basis, i.e. det(A z) = +-1;
// emitted in lexicographic order, each re-verified by an independent determinant
void enumerate_basis_extensions(const IntMatrix& a, const Int& t,
                                const std::function<bool(const std::vector<Int>&)>& sink);
std::vector<std::vector<Int>> enumerate_basis_extensions(const IntMatrix& a, const Int& t);

ExtensionCount count_basis_extensions(const IntMatrix& a, const Int& t, int threads = 1);

// f(T): vectors x with |x| <= T such that the columns of A together with x
// stay primitive; requires m < n-1
Int count_primitive_extensions(const IntMatrix& a, const Int& t, int threads = 1);

// ordered tuples (b_1,...,b_{n-m}), all |b_i| <= T, completing A to a basis;
// guarded against combinatorial blowup
Int count_full_completions(const IntMatrix& a, const Int& t);

// lattice Lambda = U Z^n with exact rational inverse carried as adj(U)/det(U)
struct LatticeCtx {
    IntMatrix u;
    IntMatrix adj;  // adj(u), so u^{-1} = adj/det
    Int det;        // nonzero
    Int norm_u;
    Rat norm_u_inv;
};

LatticeCtx make_lattice(const IntMatrix& u);

// coordinates of lattice members: A' with A = U A'
IntMatrix lattice_pullback(const LatticeCtx& ctx, const IntMatrix& a);

// b in Lambda with |b| <= T (ambient sup-norm) extending the collection primitively
Int count_extensions_in_lattice(const LatticeCtx& ctx, const IntMatrix& a, const Int& t);

struct SweepRow {
    Int t;
    Int count;
    std::optional<Int> lower;
    std::optional<Int> upper;
    std::optional<Rat> asymptotic;
    std::optional<double> ratio;
    std::optional<double> fitted_exponent;
};

// one row per T in the given order; fitted exponent from consecutive rows
std::vector<SweepRow> asymptotic_sweep(const IntMatrix& a, const std::vector<Int>& ts, int threads = 1);

// exact rational interval [lo, hi] containing zeta(n): partial sum plus integral tail
std::pair<Rat, Rat> zeta_partial(int n, long terms);

}  // namespace latext
