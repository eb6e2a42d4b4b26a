#include "latext/multilinear.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace latext {

namespace {

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// positive divisors of v > 0, ascending
std::vector<Int> divisors(const Int& v) {
    std::vector<Int> small, large;
    for (Int i = 1; i * i <= v; ++i) {
        if (v % i != 0) continue;
        small.push_back(i);
        if (i * i != v) large.push_back(v / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// split |c| into d positive factors minimizing the largest one
std::vector<Int> balanced_factors(const Int& c, int d) {
    if (d == 1) return {c};
    std::vector<Int> best;
    Int best_max = c + 1;
    for (const Int& v : divisors(c)) {
        if (v >= best_max) break;
        auto rest = balanced_factors(c / v, d - 1);
        Int cur = v;
        for (const Int& r : rest) cur = std::max(cur, r);
        if (cur < best_max) {
            best_max = cur;
            best = rest;
            best.insert(best.begin(), v);
        }
    }
    return best;
}

}  // namespace

MultilinearForm::MultilinearForm(int n_, int d_, std::map<IndexSubset, Int> coeffs_)
    : n(n_), d(d_), coeffs(std::move(coeffs_)), norm(0) {
    if (d < 1 || d >= n) throw DimensionError("need 1 <= d < n");
    auto all = index_subsets(n, d);
    if (coeffs.size() != all.size()) throw DomainError("coefficient map must cover every d-subset");
    Int g = 0;
    for (const auto& sub : all) {
        auto it = coeffs.find(sub);
        if (it == coeffs.end()) throw DomainError("coefficient map must cover every d-subset");
        g = gcd_int(g, it->second);
        norm = std::max(norm, abs_int(it->second));
    }
    if (g != 1) throw DomainError("form is not coprime, coefficient gcd is " + g.get_str());
}

MultilinearForm parse_mlform(const std::string& text) {
    std::istringstream in(text);
    int n = 0, d = 0;
    if (!(in >> n >> d)) throw Error("form header must be \"n d\"");
    if (n < 2 || d < 1) throw Error("form header must be \"n d\" with n >= 2, d >= 1");
    std::map<IndexSubset, Int> coeffs;
    auto expected = index_subsets(n, d);
    for (const auto& sub : expected) {
        std::vector<int> idx(d);
        for (int j = 0; j < d; ++j)
            if (!(in >> idx[j])) throw Error("truncated form file");
        std::string colon;
        in >> colon;
        if (colon != ":") throw Error("expected \":\" between subset and coefficient");
        std::string num;
        if (!(in >> num)) throw Error("truncated form file");
        if (idx != sub.idx) throw Error("subsets must be complete and in lexicographic order");
        try {
            coeffs.emplace(sub, Int(num));
        } catch (const std::invalid_argument&) {
            throw Error("bad coefficient \"" + num + "\"");
        }
    }
    std::string extra;
    if (in >> extra) throw Error("trailing content after the last coefficient line");
    return MultilinearForm(n, d, std::move(coeffs));
}

std::string format_mlform(const MultilinearForm& f) {
    std::ostringstream out;
    out << f.n << " " << f.d << "\n";
    for (const auto& [sub, c] : f.coeffs) {
        for (size_t j = 0; j < sub.idx.size(); ++j) {
            if (j) out << " ";
            out << sub.idx[j];
        }
        out << " : " << c.get_str() << "\n";
    }
    return out.str();
}

MultilinearForm read_mlform_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_mlform(buf.str());
}

Int evaluate(const MultilinearForm& f, const std::vector<Int>& a) {
    if (static_cast<int>(a.size()) != f.n) throw DimensionError("point length must equal n");
    Int total = 0;
    for (const auto& [sub, c] : f.coeffs) {
        if (c == 0) continue;
        Int prod = c;
        for (int i : sub.idx) prod *= a[i - 1];
        total += prod;
    }
    return total;
}

Int nu(int d) {
    if (d < 1) throw DomainError("degree must be positive");
    Int total = 1, term = 1;  // k = d
    for (int k = d; k > 0; --k) {
        term *= k;
        total += term;
    }
    return total;
}

SparseVector::SparseVector(std::vector<Int> e, int k) : entries(std::move(e)), sparsity(k) {
    int nz = 0;
    for (const Int& v : entries)
        if (v != 0) ++nz;
    if (nz > sparsity) throw DomainError("vector has more nonzero entries than its declared sparsity");
}

std::vector<int> SparseVector::support() const {
    std::vector<int> s;
    for (size_t i = 0; i < entries.size(); ++i)
        if (entries[i] != 0) s.push_back(static_cast<int>(i) + 1);
    return s;
}

SparseVector unit_coeff_representation(const MultilinearForm& f, const Int& b) {
    for (const auto& [sub, c] : f.coeffs) {
        if (abs_int(c) != 1) continue;
        std::vector<Int> entries(f.n, Int(0));
        for (int i : sub.idx) entries[i - 1] = 1;
        entries[sub.idx[0] - 1] = (c == 1) ? b : Int(-b);
        if (evaluate(f, entries) != b) throw Error("internal: unit construction failed");
        return SparseVector(std::move(entries), f.d);
    }
    throw DomainError("form has no unit coefficient; use sparse_search");
}

bool pairwise_coprime_nonunit(const MultilinearForm& f) {
    std::vector<Int> cs;
    for (const auto& [sub, c] : f.coeffs) cs.push_back(c);
    for (const Int& c : cs)
        if (c == 0 || abs_int(c) == 1) return false;
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
            if (gcd_int(cs[i], cs[j]) != 1) return false;
    return true;
}

Int annihilation_count(int n, int d, int k) {
    if (d < 1 || d >= n) throw DimensionError("need 1 <= d < n");
    if (k < 0 || k > n) throw DomainError("need 0 <= k <= n");
    Int survivors = (k >= d) ? binomial(k, d) : Int(0);
    return binomial(n, d) - survivors;
}

namespace {

// monomials of f that survive when everything outside the support is zeroed,
// rewritten in support-local positions
struct Section {
    std::vector<std::pair<std::vector<int>, Int>> monos;  // (0-based positions, coeff)
};

Section make_section(const MultilinearForm& f, const IndexSubset& sup) {
    Section s;
    for (const auto& [sub, c] : f.coeffs) {
        if (c == 0) continue;
        bool inside = true;
        for (int i : sub.idx)
            if (!sup.contains(i)) {
                inside = false;
                break;
            }
        if (!inside) continue;
        std::vector<int> pos;
        for (int i : sub.idx) {
            auto it = std::lower_bound(sup.idx.begin(), sup.idx.end(), i);
            pos.push_back(static_cast<int>(it - sup.idx.begin()));
        }
        s.monos.emplace_back(std::move(pos), c);
    }
    return s;
}

Int eval_section(const Section& s, const std::vector<Int>& z) {
    Int total = 0;
    for (const auto& [pos, c] : s.monos) {
        Int prod = c;
        for (int p : pos) prod *= z[p];
        total += prod;
    }
    return total;
}

// lex scan of the sup-norm shell |z| == s in [-s, s]^k; sink returns true to stop
bool scan_shell(int k, const Int& s, std::vector<Int>& z,
                const std::function<bool(const std::vector<Int>&)>& sink, int pos, bool tight) {
    if (pos == k) return tight && sink(z);
    if (pos == k - 1 && !tight) {
        z[pos] = -s;
        if (sink(z)) return true;
        if (s != 0) {
            z[pos] = s;
            if (sink(z)) return true;
        }
        return false;
    }
    for (Int v = -s; v <= s; ++v) {
        z[pos] = v;
        if (scan_shell(k, s, z, sink, pos + 1, tight || abs_int(v) == s)) return true;
    }
    return false;
}

}  // namespace

SparseSearchResult sparse_search(const MultilinearForm& f, const Int& b, int k, const Int& cap) {
    if (k < 1 || k > f.n) throw DomainError("sparsity must satisfy 1 <= k <= n");
    if (cap < 0) throw DomainError("cap must be nonnegative");
    Int certificate = abs_int(b) * pow_int(2 * f.norm, nu(f.d).get_ui());
    Int bound = std::min(cap, certificate);
    bool covered = cap >= certificate;

    bool all_resolved = true;  // every support ruled out exactly, not just scanned to the cap
    for (const auto& sup : index_subsets(f.n, k)) {
        Section sec = make_section(f, sup);
        if (sec.monos.empty()) {
            if (b == 0) {
                std::vector<Int> zero(f.n, Int(0));
                return {true, true, SparseVector(std::move(zero), k), bound};
            }
            continue;  // the section is identically zero, no witness here at any radius
        }
        if (sec.monos.size() == 1) {
            const auto& [pos, c] = sec.monos[0];
            if (b % c != 0) continue;  // exact divisibility obstruction
            Int q = b / c;
            std::vector<Int> vals(k, Int(0));
            if (q != 0) {
                auto parts = balanced_factors(abs_int(q), static_cast<int>(pos.size()));
                for (size_t j = 0; j < pos.size(); ++j) vals[pos[j]] = parts[j];
                if (q < 0) vals[pos[0]] = -vals[pos[0]];
            }  // q == 0: the all-zero assignment already evaluates to 0
            Int sup_norm = 0;
            for (const Int& v : vals) sup_norm = std::max(sup_norm, abs_int(v));
            if (sup_norm > bound) {
                all_resolved = false;  // a witness exists but sits beyond the cap
                continue;
            }
            std::vector<Int> entries(f.n, Int(0));
            for (int j = 0; j < k; ++j) entries[sup.idx[j] - 1] = vals[j];
            if (evaluate(f, entries) != b) throw Error("internal: single monomial construction failed");
            return {true, true, SparseVector(std::move(entries), k), bound};
        }
        // general section: increasing shells, lex inside each shell
        std::vector<Int> z(k, Int(0));
        std::optional<std::vector<Int>> hit;
        for (Int s = 0; s <= bound && !hit; ++s) {
            scan_shell(k, s, z, [&](const std::vector<Int>& cand) {
                if (eval_section(sec, cand) != b) return false;
                hit = cand;
                return true;
            }, 0, false);
        }
        if (hit) {
            std::vector<Int> entries(f.n, Int(0));
            for (int j = 0; j < k; ++j) entries[sup.idx[j] - 1] = (*hit)[j];
            if (evaluate(f, entries) != b) throw Error("internal: section witness failed");
            return {true, true, SparseVector(std::move(entries), k), bound};
        }
        if (!covered) all_resolved = false;
    }
    return {false, covered || all_resolved, std::nullopt, bound};
}

}  // namespace latext
