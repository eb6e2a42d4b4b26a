#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "latext/extensions.hpp"
#include "latext/farey.hpp"
#include "latext/multilinear.hpp"
#include "latext/primitivity.hpp"
#include "latext/slicecount.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// exact big-integer bridge: Python int <-> mpz via decimal strings
template <>
struct type_caster<latext::Int> {
    PYBIND11_TYPE_CASTER(latext::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        PyObject* s = PyObject_Str(src.ptr());
        if (!s) return false;
        const char* text = PyUnicode_AsUTF8(s);
        bool ok = text != nullptr;
        if (ok) value = latext::Int(text);
        Py_DECREF(s);
        return ok;
    }

    static handle cast(const latext::Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using latext::Int;
using latext::IntMatrix;
using latext::Rat;

IntMatrix matrix_from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty() || rows[0].empty()) throw latext::DimensionError("matrix needs at least one entry");
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    std::vector<Int> flat;
    flat.reserve(static_cast<size_t>(r) * c);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw latext::DimensionError("ragged matrix rows");
        for (const auto& x : row) flat.push_back(x);
    }
    return IntMatrix(r, c, std::move(flat));
}

std::vector<std::vector<Int>> rows_from_matrix(const IntMatrix& m) {
    std::vector<std::vector<Int>> out;
    out.reserve(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

py::tuple frac(const latext::FareyFraction& f) { return py::make_tuple(f.num, f.den); }

py::object opt_frac(const std::optional<latext::FareyFraction>& f) {
    if (!f) return py::none();
    return frac(*f);
}

py::list frac_list(const std::vector<latext::FareyFraction>& fs) {
    py::list out;
    for (const auto& f : fs) out.append(frac(f));
    return out;
}

py::dict extension_dict(const latext::ExtensionCount& r) {
    py::dict d;
    d["t"] = py::cast(r.t);
    d["count"] = py::cast(r.count);
    d["lower"] = r.lower ? py::cast(*r.lower) : py::object(py::none());
    d["upper"] = py::cast(r.upper);
    d["asym"] = py::make_tuple(Int(r.asymptotic.get_num()), Int(r.asymptotic.get_den()));
    return d;
}

}  // namespace

PYBIND11_MODULE(_latext, m) {
    m.doc() = "exact primitivity, basis extension counting, Farey and multilinear operations";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const latext::ResourceGuardError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const latext::Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("is_primitive", [](const std::vector<std::vector<Int>>& rows) {
        auto r = latext::is_primitive(matrix_from_rows(rows));
        return py::make_tuple(r.primitive, r.gcd);
    }, py::arg("rows"), "primitivity flag and the gcd of the maximal minors");

    m.def("complete_to_basis", [](const std::vector<std::vector<Int>>& rows) {
        return rows_from_matrix(latext::complete_to_basis(matrix_from_rows(rows)).full);
    }, py::arg("rows"), "square unimodular completion of a primitive collection");

    m.def("relation_matrix", [](const std::vector<std::vector<Int>>& rows) {
        return rows_from_matrix(latext::relation_matrix(matrix_from_rows(rows)));
    }, py::arg("rows"));

    m.def("count_slice", [](const std::vector<Int>& coeffs, const Int& b, const Int& t, int threads) {
        latext::SliceSpec spec(latext::LinearForm(coeffs), b, t);
        return latext::count_slice_threaded(spec, threads);
    }, py::arg("coeffs"), py::arg("b"), py::arg("t"), py::arg("threads") = 1);

    m.def("enumerate_slice", [](const std::vector<Int>& coeffs, const Int& b, const Int& t) {
        latext::SliceSpec spec(latext::LinearForm(coeffs), b, t);
        return latext::enumerate_slice(spec);
    }, py::arg("coeffs"), py::arg("b"), py::arg("t"));

    m.def("slice_bounds", [](const std::vector<Int>& coeffs, const Int& b, const Int& t) {
        latext::SliceSpec spec(latext::LinearForm(coeffs), b, t);
        auto bd = latext::slice_bounds(spec);
        py::dict d;
        d["lower"] = bd.lower ? py::cast(*bd.lower) : py::object(py::none());
        d["upper"] = py::cast(bd.upper);
        d["asym"] = py::make_tuple(Int(bd.asymptotic.get_num()), Int(bd.asymptotic.get_den()));
        return d;
    }, py::arg("coeffs"), py::arg("b"), py::arg("t"));

    m.def("small_solution", [](const std::vector<Int>& coeffs, const Int& b) {
        return latext::small_solution(latext::LinearForm(coeffs), b);
    }, py::arg("coeffs"), py::arg("b"), "solution with sup-norm at most max{|L|, |b|}");

    m.def("count_basis_extensions", [](const std::vector<std::vector<Int>>& rows, const Int& t, int threads) {
        return extension_dict(latext::count_basis_extensions(matrix_from_rows(rows), t, threads));
    }, py::arg("rows"), py::arg("t"), py::arg("threads") = 1);

    m.def("enumerate_basis_extensions", [](const std::vector<std::vector<Int>>& rows, const Int& t) {
        return latext::enumerate_basis_extensions(matrix_from_rows(rows), t);
    }, py::arg("rows"), py::arg("t"));

    m.def("count_primitive_extensions", [](const std::vector<std::vector<Int>>& rows, const Int& t, int threads) {
        return latext::count_primitive_extensions(matrix_from_rows(rows), t, threads);
    }, py::arg("rows"), py::arg("t"), py::arg("threads") = 1);

    m.def("count_full_completions", [](const std::vector<std::vector<Int>>& rows, const Int& t) {
        return latext::count_full_completions(matrix_from_rows(rows), t);
    }, py::arg("rows"), py::arg("t"));

    m.def("lattice_count_extensions",
          [](const std::vector<std::vector<Int>>& basis, const std::vector<std::vector<Int>>& rows,
             const Int& t) {
              auto ctx = latext::make_lattice(matrix_from_rows(basis));
              return latext::count_extensions_in_lattice(ctx, matrix_from_rows(rows), t);
          }, py::arg("basis"), py::arg("rows"), py::arg("t"));

    m.def("zeta_partial", [](int n, long terms) {
        auto [lo, hi] = latext::zeta_partial(n, terms);
        return py::make_tuple(py::make_tuple(Int(lo.get_num()), Int(lo.get_den())),
                              py::make_tuple(Int(hi.get_num()), Int(hi.get_den())));
    }, py::arg("n"), py::arg("terms"));

    m.def("farey_series", [](const Int& n) { return frac_list(latext::farey_series(n)); }, py::arg("n"));

    m.def("farey_neighbors", [](const Int& num, const Int& den, const Int& n) {
        auto [l, r] = latext::farey_neighbors(latext::FareyFraction(num, den), n);
        return py::make_tuple(opt_frac(l), opt_frac(r));
    }, py::arg("num"), py::arg("den"), py::arg("n"));

    m.def("neighbor_count_up_to", [](const Int& num, const Int& den, const Int& t) {
        return latext::neighbor_count_up_to(latext::FareyFraction(num, den), t);
    }, py::arg("num"), py::arg("den"), py::arg("t"));

    m.def("farey_approximations", [](const std::vector<Int>& quotients, const Int& n) {
        return frac_list(latext::farey_approximations(latext::CFNumber(quotients), n));
    }, py::arg("quotients"), py::arg("n"));

    m.def("dirichlet_approximations", [](const std::vector<Int>& quotients, const Int& n) {
        return frac_list(latext::dirichlet_approximations(latext::CFNumber(quotients), n));
    }, py::arg("quotients"), py::arg("n"));

    m.def("density_ratio", [](const std::vector<Int>& quotients, const Int& n) {
        return latext::density_ratio(latext::CFNumber(quotients), n);
    }, py::arg("quotients"), py::arg("n"));

    m.def("mlform_eval", [](const std::string& text, const std::vector<Int>& point) {
        return latext::evaluate(latext::parse_mlform(text), point);
    }, py::arg("form"), py::arg("point"));

    m.def("unit_coeff_representation", [](const std::string& text, const Int& b) {
        return latext::unit_coeff_representation(latext::parse_mlform(text), b).entries;
    }, py::arg("form"), py::arg("b"));

    m.def("sparse_search", [](const std::string& text, const Int& b, int k, const Int& cap) {
        auto r = latext::sparse_search(latext::parse_mlform(text), b, k, cap);
        py::dict d;
        d["found"] = r.found;
        d["definitive"] = r.definitive;
        d["bound"] = py::cast(r.bound);
        d["witness"] = r.witness ? py::cast(r.witness->entries) : py::object(py::none());
        return d;
    }, py::arg("form"), py::arg("b"), py::arg("k"), py::arg("cap"));

    m.def("nu", &latext::nu, py::arg("d"));
}
