#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "latext/errors.hpp"
#include "latext/numeric.hpp"

namespace latext {

// primitive integer linear form L(z) = sum c_i z_i on Z^n, n >= 2
struct LinearForm {
    std::vector<Int> coeffs;
    Int norm;  // max |c_i|

    explicit LinearForm(std::vector<Int> c);
    int n() const { return static_cast<int>(coeffs.size()); }
    Int eval(const std::vector<Int>& z) const;
};

// the slice {z : L(z) == b} intersected with the cube |z|_sup <= t
struct SliceSpec {
    LinearForm form;
    Int b;
    Int t;

    SliceSpec(LinearForm f, Int b_, Int t_);
};

struct SliceBounds {
    Int upper;                 // floor of the rational upper bound
    std::optional<Int> lower;  // ceil of the rational lower bound; absent when t < max{norm, |b|}
    Rat asymptotic;            // (2t)^(n-1) / norm
};

SliceBounds slice_bounds(const SliceSpec& spec);

// a solution of L(z) == b with |z|_sup <= max{norm, |b|}
std::vector<Int> small_solution(const LinearForm& form, const Int& b);

// lexicographic emission of all slice points; sink returns false to stop early
void enumerate_slice(const SliceSpec& spec, const std::function<bool(const std::vector<Int>&)>& sink);
std::vector<std::vector<Int>> enumerate_slice(const SliceSpec& spec);

Int count_slice(const SliceSpec& spec);
// solutions whose first coordinate lies in [x1lo, x1hi]
Int count_slice_range(const SliceSpec& spec, const Int& x1lo, const Int& x1hi);
Int count_slice_threaded(const SliceSpec& spec, int threads);

}  // namespace latext
