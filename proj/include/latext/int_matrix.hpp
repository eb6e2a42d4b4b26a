#pragma once
// Dense integer matrices (row-major, arbitrary precision) and 1-based index subsets.

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "latext/errors.hpp"
#include "latext/numeric.hpp"

namespace latext {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // 0-based element access
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& o) const;
    IntMatrix negated() const;

    std::vector<Int> col(int j) const;
    std::vector<Int> row(int i) const;
    void set_col(int j, const std::vector<Int>& v);

    // new matrix with an extra column appended on the right
    IntMatrix with_col(const std::vector<Int>& v) const;

    // submatrix given by 1-based row indices (all columns)
    IntMatrix select_rows(const std::vector<int>& idx1) const;
    // submatrix given by 1-based column indices (all rows)
    IntMatrix select_cols(const std::vector<int>& idx1) const;

    // mat-vec product
    std::vector<Int> apply(const std::vector<Int>& v) const;

    // max |entry|; 0 for empty
    Int sup_norm() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// text format: first line "rows cols", then one line per row,
// entries base-10, single spaces, newline-terminated
std::string format_matrix(const IntMatrix& m);
IntMatrix parse_matrix(const std::string& text);
IntMatrix read_matrix_file(const std::string& path);

// strictly increasing 1-based index tuple
struct IndexSubset {
    std::vector<int> idx;

    IndexSubset() = default;
    explicit IndexSubset(std::vector<int> v);

    int size() const { return static_cast<int>(idx.size()); }
    long sum() const;
    IndexSubset complement(int n) const;
    bool contains(int i) const;

    auto operator<=>(const IndexSubset&) const = default;
};

// all m-element subsets of {1..n} in lexicographic order
std::vector<IndexSubset> index_subsets(int n, int m);

Int binomial(int n, int k);

std::string format_subset(const IndexSubset& s);  // "i1,i2,...,im"

}  // namespace latext
