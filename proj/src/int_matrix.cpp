#include "latext/int_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace latext {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("matrix dimensions must be nonnegative");
    a_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw DimensionError("matrix dimensions must be nonnegative");
    if (a_.size() != static_cast<size_t>(rows) * cols)
        throw DimensionError("entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("inner dimensions do not match");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

std::vector<Int> IntMatrix::col(int j) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Int> IntMatrix::row(int i) const {
    std::vector<Int> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void IntMatrix::set_col(int j, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != rows_) throw DimensionError("column length mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::with_col(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != rows_) throw DimensionError("column length mismatch");
    IntMatrix r(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        r.at(i, cols_) = v[i];
    }
    return r;
}

IntMatrix IntMatrix::select_rows(const std::vector<int>& idx1) const {
    IntMatrix r(static_cast<int>(idx1.size()), cols_);
    for (size_t i = 0; i < idx1.size(); ++i) {
        if (idx1[i] < 1 || idx1[i] > rows_) throw DimensionError("row index out of range");
        for (int j = 0; j < cols_; ++j) r.at(static_cast<int>(i), j) = at(idx1[i] - 1, j);
    }
    return r;
}

IntMatrix IntMatrix::select_cols(const std::vector<int>& idx1) const {
    IntMatrix r(rows_, static_cast<int>(idx1.size()));
    for (size_t j = 0; j < idx1.size(); ++j) {
        if (idx1[j] < 1 || idx1[j] > cols_) throw DimensionError("column index out of range");
        for (int i = 0; i < rows_; ++i) r.at(i, static_cast<int>(j)) = at(i, idx1[j] - 1);
    }
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionError("vector length mismatch");
    std::vector<Int> r(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Int IntMatrix::sup_norm() const {
    Int m = 0;
    for (const auto& x : a_) {
        Int ax = abs_int(x);
        if (ax > m) m = ax;
    }
    return m;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

IntMatrix parse_matrix(const std::string& text) {
    std::istringstream is(text);
    long long r, c;
    if (!(is >> r >> c)) throw DomainError("matrix header must be \"rows cols\"");
    if (r < 1 || c < 1 || r > 100000 || c > 100000) throw DimensionError("unreasonable matrix dimensions");
    IntMatrix m(static_cast<int>(r), static_cast<int>(c));
    std::string tok;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!(is >> tok)) throw DomainError("matrix body ended early");
            try {
                m.at(i, j) = Int(tok);
            } catch (const std::invalid_argument&) {
                throw DomainError("bad integer token '" + tok + "' in matrix body");
            }
        }
    if (is >> tok) throw DomainError("trailing tokens after matrix body");
    return m;
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_matrix(buf.str());
}

IndexSubset::IndexSubset(std::vector<int> v) : idx(std::move(v)) {
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 1) throw DomainError("index subsets are 1-based");
        if (i && idx[i] <= idx[i - 1]) throw DomainError("index subset must be strictly increasing");
    }
}

long IndexSubset::sum() const {
    long s = 0;
    for (int i : idx) s += i;
    return s;
}

IndexSubset IndexSubset::complement(int n) const {
    std::vector<int> c;
    size_t p = 0;
    for (int i = 1; i <= n; ++i) {
        if (p < idx.size() && idx[p] == i) {
            ++p;
        } else {
            c.push_back(i);
        }
    }
    if (p != idx.size()) throw DomainError("subset exceeds ambient range");
    return IndexSubset(std::move(c));
}

bool IndexSubset::contains(int i) const { return std::binary_search(idx.begin(), idx.end(), i); }

std::vector<IndexSubset> index_subsets(int n, int m) {
    if (m < 0 || n < 0 || m > n) throw DimensionError("need 0 <= m <= n for index subsets");
    std::vector<IndexSubset> out;
    std::vector<int> cur(m);
    for (int i = 0; i < m; ++i) cur[i] = i + 1;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    while (true) {
        out.push_back(IndexSubset(cur));
        int k = m - 1;
        while (k >= 0 && cur[k] == n - (m - 1 - k)) --k;
        if (k < 0) break;
        ++cur[k];
        for (int j = k + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::string format_subset(const IndexSubset& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.idx.size(); ++i) {
        if (i) os << ',';
        os << s.idx[i];
    }
    return os.str();
}

}  // namespace latext
