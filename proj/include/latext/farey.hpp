#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latext/errors.hpp"
#include "latext/numeric.hpp"

namespace latext {

// reduced fraction in [0,1]
struct FareyFraction {
    Int num;
    Int den;

    FareyFraction(Int n, Int d);
    std::string str() const { return num.get_str() + "/" + den.get_str(); }

    friend bool operator==(const FareyFraction& a, const FareyFraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const FareyFraction& a, const FareyFraction& b) {
        return a.num * b.den < b.num * a.den;
    }
};

FareyFraction parse_fraction(const std::string& s);

// continued fraction prefix [0; a_1, a_2, ...] standing in for an irrational
// in (0,1): the number is only pinned down to the open interval swept by all
// continuations, and comparisons are exact as long as the query cannot land
// inside that interval
class CFNumber {
  public:
    explicit CFNumber(std::vector<Int> quots);

    const std::vector<Int>& quotients() const { return quots_; }
    // all convergents p_1/q_1 .. p_m/q_m
    const std::vector<FareyFraction>& convergent_list() const { return conv_; }
    // largest N such that every fraction with denominator <= N^2 compares exactly
    Int working_order() const { return order_; }
    // sign of alpha - p/q; throws when the query falls inside the ambiguity interval
    int cmp(const Int& p, const Int& q) const;
    int cmp(const FareyFraction& f) const { return cmp(f.num, f.den); }

  private:
    std::vector<Int> quots_;
    std::vector<FareyFraction> conv_;
    Rat lo_, hi_;  // open interval containing alpha
    Int order_;
};

std::vector<FareyFraction> farey_series(const Int& n);

std::pair<std::optional<FareyFraction>, std::optional<FareyFraction>> farey_neighbors(
    const FareyFraction& f, const Int& n);

struct BridgeReport {
    bool is_neighbor_at;  // consecutive in F_max(b,d)
    bool is_basis;        // |ad - bc| == 1
    Int order;
};

BridgeReport neighbor_basis_bridge(const FareyFraction& f, const FareyFraction& g);

// distinct fractions that are a neighbor of f in some F_n with f.den <= n <= t
Int neighbor_count_up_to(const FareyFraction& f, const Int& t);

std::vector<FareyFraction> farey_approximations(const CFNumber& alpha, const Int& n);
std::vector<FareyFraction> dirichlet_approximations(const CFNumber& alpha, const Int& n);

double density_ratio(const CFNumber& alpha, const Int& n);

std::vector<FareyFraction> convergents(const CFNumber& alpha, int k);

}  // namespace latext
