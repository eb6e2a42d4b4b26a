#pragma once
// Exact linear algebra over Z: fraction-free determinants, Smith normal form,
// Grassmann (maximal-minor) coordinates. No floating point anywhere.

#include <vector>

#include "latext/int_matrix.hpp"

namespace latext {

// Bareiss fraction-free elimination
Int det(const IntMatrix& m);

struct SmithResult {
    IntMatrix s;  // diagonal, nonnegative, divisibility chain d1 | d2 | ...
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix v;  // unimodular, cols x cols;  u * m * v == s
};

SmithResult snf(const IntMatrix& m);

// maximal-minor coordinate map of an n x m matrix (n >= m >= 1):
// one determinant per m-subset of rows, subsets in lexicographic order
struct GrassmannCoords {
    int n = 0, m = 0;
    std::vector<std::pair<IndexSubset, Int>> coords;
    Int gcd;  // gcd of all coordinates, nonnegative

    const Int& at(const IndexSubset& s) const;
};

GrassmannCoords grassmann(const IntMatrix& a);

// exact inverse of a matrix with det == +-1
IntMatrix inverse_unimodular(const IntMatrix& m);

// greedy pairwise column size-reduction (sum-of-abs norm), order-stable result:
// columns sorted by (norm, entries) ascending afterwards
void size_reduce_columns(IntMatrix& m);

}  // namespace latext
