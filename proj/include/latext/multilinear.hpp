#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latext/errors.hpp"
#include "latext/int_matrix.hpp"
#include "latext/numeric.hpp"

namespace latext {

// coprime multilinear (n,d)-form F(x) = sum over d-subsets I of f_I * x_I
struct MultilinearForm {
    int n;
    int d;
    std::map<IndexSubset, Int> coeffs;
    Int norm;  // max |f_I|

    MultilinearForm(int n_, int d_, std::map<IndexSubset, Int> coeffs_);
};

MultilinearForm parse_mlform(const std::string& text);
std::string format_mlform(const MultilinearForm& f);
MultilinearForm read_mlform_file(const std::string& path);

Int evaluate(const MultilinearForm& f, const std::vector<Int>& a);

// nu_d = sum_{k=0}^{d} d!/k!
Int nu(int d);

struct SparseVector {
    std::vector<Int> entries;
    int sparsity;  // declared k, at least the number of nonzero entries

    SparseVector(std::vector<Int> e, int k);
    std::vector<int> support() const;  // 1-based indices of nonzero entries
};

// d-sparse witness built from a unit coefficient: one entry +-b, the rest of
// the support set to 1
SparseVector unit_coeff_representation(const MultilinearForm& f, const Int& b);

struct SparseSearchResult {
    bool found;
    bool definitive;  // a miss rules out every witness within the certificate bound
    std::optional<SparseVector> witness;
    Int bound;  // sup-norm radius actually searched
};

// exhaustive search for a k-sparse z with F(z) == b and |z| <= min(cap, certificate)
SparseSearchResult sparse_search(const MultilinearForm& f, const Int& b, int k, const Int& cap);

// all coefficients nonzero, pairwise coprime, none equal to +-1
bool pairwise_coprime_nonunit(const MultilinearForm& f);

// monomials killed by zeroing all variables outside a k-subset
Int annihilation_count(int n, int d, int k);

}  // namespace latext
