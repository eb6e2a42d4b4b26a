#pragma once
// Primitive collections in Z^n: detection via maximal-minor gcd, unimodular
// completion to a basis, relation matrices, Brill-Gordan duality pairing.

#include <tuple>
#include <vector>

#include "latext/exactalg.hpp"

namespace latext {

struct PrimitivityReport {
    bool primitive = false;
    Int gcd;  // gcd of maximal minors
};

// A is n x m with 1 <= m <= n; primitive iff the maximal-minor gcd is 1
PrimitivityReport is_primitive(const IntMatrix& a);

struct CompletionReport {
    IntMatrix b;     // n x (n-m) completion block
    IntMatrix full;  // (A | B), determinant +-1
    int det_sign = 0;
    Int b_norm;  // sup norm of B (not minimized, recorded for visibility)
};

// extend a primitive A to a basis of Z^n; throws PrimitivityError otherwise
CompletionReport complete_to_basis(const IntMatrix& a);

// (n-m) x n matrix R with R*A == 0 whose rows form a basis of the
// annihilator lattice; rows normalized so the first nonzero entry is positive.
// For primitive A:  x lies in the column lattice of A  iff  R*x == 0.
IntMatrix relation_matrix(const IntMatrix& a);

struct DualityReport {
    // one entry per m-subset I of rows: (I, maximal minor of A on I,
    // maximal minor of the relation matrix on the complementary columns)
    std::vector<std::tuple<IndexSubset, Int, Int>> pairs;
    Int gamma;  // the constant signed ratio, always +1 or -1
};

// checks the minor pairing between A and its relation matrix (needs 1 <= m < n)
DualityReport duality_check(const IntMatrix& a);

}  // namespace latext
