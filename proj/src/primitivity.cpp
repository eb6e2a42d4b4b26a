#include "latext/primitivity.hpp"

namespace latext {

PrimitivityReport is_primitive(const IntMatrix& a) {
    if (a.cols() < 1 || a.cols() > a.rows())
        throw DimensionError("primitivity needs an n x m matrix with 1 <= m <= n");
    auto g = grassmann(a);
    return {g.gcd == 1, g.gcd};
}

CompletionReport complete_to_basis(const IntMatrix& a) {
    auto rep = is_primitive(a);
    if (!rep.primitive)
        throw PrimitivityError("collection is not primitive, maximal-minor gcd = " + rep.gcd.get_str(), rep.gcd);
    int n = a.rows(), m = a.cols();
    auto sm = snf(a);
    IntMatrix uinv = inverse_unimodular(sm.u);
    std::vector<int> tail;
    for (int j = m + 1; j <= n; ++j) tail.push_back(j);
    CompletionReport out;
    out.b = uinv.select_cols(tail);
    out.full = a;
    for (int j = 0; j < out.b.cols(); ++j) out.full = out.full.with_col(out.b.col(j));
    Int d = det(out.full);
    if (d != 1 && d != -1) throw DualityError("completion failed to be unimodular");  // unreachable for primitive input
    out.det_sign = (d == 1) ? 1 : -1;
    out.b_norm = out.b.sup_norm();
    return out;
}

IntMatrix relation_matrix(const IntMatrix& a) {
    auto rep = is_primitive(a);
    if (!rep.primitive)
        throw PrimitivityError("relation matrix needs a primitive collection, maximal-minor gcd = " + rep.gcd.get_str(),
                               rep.gcd);
    int n = a.rows(), m = a.cols();
    auto sm = snf(a);
    std::vector<int> tail;
    for (int i = m + 1; i <= n; ++i) tail.push_back(i);
    IntMatrix r = sm.u.select_rows(tail);
    // sign convention: first nonzero entry of each row positive
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < n; ++j) {
            if (r.at(i, j) == 0) continue;
            if (r.at(i, j) < 0)
                for (int k = j; k < n; ++k) r.at(i, k) = -r.at(i, k);
            break;
        }
    return r;
}

DualityReport duality_check(const IntMatrix& a) {
    int n = a.rows(), m = a.cols();
    if (m >= n) throw DimensionError("duality pairing needs m < n");
    IntMatrix r = relation_matrix(a);  // validates primitivity
    auto ga = grassmann(a);
    auto gb = grassmann(r.transpose());
    DualityReport out;
    out.gamma = 0;
    for (const auto& [subset, delta] : ga.coords) {
        IndexSubset comp = subset.complement(n);
        const Int& codelta = gb.at(comp);
        if (abs_int(delta) != abs_int(codelta))
            throw DualityError("minor pairing mismatch at I = " + format_subset(subset));
        out.pairs.emplace_back(subset, delta, codelta);
        if (delta != 0) {
            int sgn = (subset.sum() % 2 == 0) ? 1 : -1;
            Int g = (sgn > 0) ? Int(delta / codelta) : Int(-delta / codelta);
            if (out.gamma == 0)
                out.gamma = g;
            else if (out.gamma != g)
                throw DualityError("signed minor ratio is not constant");
        }
    }
    if (out.gamma != 1 && out.gamma != -1) throw DualityError("signed minor ratio is not a unit");
    return out;
}

}  // namespace latext
