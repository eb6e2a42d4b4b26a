#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "latext/exactalg.hpp"
#include "latext/extensions.hpp"
#include "latext/farey.hpp"
#include "latext/multilinear.hpp"
#include "latext/primitivity.hpp"
#include "latext/slicecount.hpp"

using namespace latext;

namespace {

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw DomainError("empty entry in list \"" + s + "\"");
        try {
            out.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw DomainError("bad integer \"" + item + "\"");
        }
    }
    if (out.empty()) throw DomainError("empty list");
    return out;
}

int thread_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("LATEXT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw Error("cannot open output file " + path);
    return file;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void print_count_block(std::ostream& os, const Int& count, const Int& upper,
                       const std::optional<Int>& lower, const Rat& asym) {
    os << "count=" << count.get_str() << "\n";
    os << "lower=";
    if (lower)
        os << lower->get_str();
    else
        os << "undefined";
    os << " upper=" << upper.get_str() << " asym_num=" << asym.get_num().get_str()
       << " asym_den=" << asym.get_den().get_str() << "\n";
}

std::string join_point(const std::vector<Int>& z) {
    std::string s;
    for (const auto& v : z) {
        if (!s.empty()) s += " ";
        s += v.get_str();
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting of basis extensions, hyperplane slices, Farey neighbors and sparse multilinear representations"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads_flag = 0;
    app.add_option("--threads", threads_flag, "worker threads for counting (env LATEXT_THREADS)");

    // slice-count
    auto* sc = app.add_subcommand("slice-count", "count or list lattice points on a hyperplane slice");
    std::string sc_coeffs, sc_b = "0", sc_t;
    bool sc_enum = false;
    sc->add_option("--coeffs", sc_coeffs, "form coefficients c1,...,cn")->required();
    sc->add_option("--b", sc_b, "right-hand side");
    sc->add_option("--t", sc_t, "sup-norm radius")->required();
    sc->add_flag("--enumerate", sc_enum, "list the points instead of counting");

    // check-primitive
    auto* cp = app.add_subcommand("check-primitive", "test a collection for primitivity");
    std::string cp_matrix;
    cp->add_option("--matrix", cp_matrix, "matrix file")->required();

    // complete-basis
    auto* cb = app.add_subcommand("complete-basis", "extend a primitive collection to a basis");
    std::string cb_matrix;
    cb->add_option("--matrix", cb_matrix, "matrix file")->required();

    // count-ext
    auto* ce = app.add_subcommand("count-ext", "count basis extensions of an n x (n-1) collection");
    std::string ce_matrix, ce_t;
    bool ce_enum = false;
    ce->add_option("--matrix", ce_matrix, "matrix file")->required();
    ce->add_option("--t", ce_t, "sup-norm radius")->required();
    ce->add_flag("--enumerate", ce_enum, "list the extension vectors");

    // count-primext
    auto* cpe = app.add_subcommand("count-primext", "count primitive extensions of a deficient collection");
    std::string cpe_matrix, cpe_t;
    cpe->add_option("--matrix", cpe_matrix, "matrix file")->required();
    cpe->add_option("--t", cpe_t, "sup-norm radius")->required();

    // sweep
    auto* sw = app.add_subcommand("sweep", "asymptotic verification sweep over a list of radii");
    std::string sw_matrix, sw_tlist, sw_out;
    sw->add_option("--matrix", sw_matrix, "matrix file")->required();
    sw->add_option("--t-list", sw_tlist, "comma-separated radii")->required();
    sw->add_option("--out", sw_out, "CSV output path (stdout when omitted)");

    // lattice count-ext
    auto* lat = app.add_subcommand("lattice", "operations inside a sublattice U*Z^n");
    lat->require_subcommand(1);
    auto* lce = lat->add_subcommand("count-ext", "count basis extensions inside the lattice");
    std::string lce_basis, lce_matrix, lce_t;
    lce->add_option("--basis", lce_basis, "lattice basis file U")->required();
    lce->add_option("--matrix", lce_matrix, "collection file A (columns in the lattice)")->required();
    lce->add_option("--t", lce_t, "ambient sup-norm radius")->required();

    // farey
    auto* fa = app.add_subcommand("farey", "Farey series, neighbors and approximations");
    fa->require_subcommand(1);
    auto* fs = fa->add_subcommand("series", "print F_n");
    std::string fs_n;
    fs->add_option("--n", fs_n, "series order")->required();
    auto* fn = fa->add_subcommand("neighbors", "immediate neighbors of a fraction in F_n");
    std::string fn_frac, fn_n;
    fn->add_option("--frac", fn_frac, "fraction p/q")->required();
    fn->add_option("--n", fn_n, "series order")->required();
    auto* fap = fa->add_subcommand("approx", "Farey or Dirichlet approximations of a continued fraction");
    std::string fap_cf, fap_n, fap_kind = "farey";
    fap->add_option("--cf", fap_cf, "partial quotients 0,a1,a2,...")->required();
    fap->add_option("--n", fap_n, "denominator bound")->required();
    fap->add_option("--kind", fap_kind, "farey or dirichlet")->check(CLI::IsMember({"farey", "dirichlet"}));
    auto* fd = fa->add_subcommand("density", "approximation density sweep");
    std::string fd_cf, fd_nlist, fd_out;
    fd->add_option("--cf", fd_cf, "partial quotients 0,a1,a2,...")->required();
    fd->add_option("--n-list", fd_nlist, "comma-separated orders")->required();
    fd->add_option("--out", fd_out, "CSV output path (stdout when omitted)");

    // mlform
    auto* ml = app.add_subcommand("mlform", "multilinear form evaluation and sparse representation");
    ml->require_subcommand(1);
    auto* mev = ml->add_subcommand("eval", "evaluate a form at a point");
    std::string mev_form, mev_point;
    mev->add_option("--form", mev_form, "form file")->required();
    mev->add_option("--point", mev_point, "coordinates a1,...,an")->required();
    auto* mrep = ml->add_subcommand("rep", "search for a k-sparse representation");
    std::string mrep_form, mrep_b, mrep_cap = "100000";
    int mrep_k = 0;
    mrep->add_option("--form", mrep_form, "form file")->required();
    mrep->add_option("--b", mrep_b, "target integer")->required();
    mrep->add_option("--k", mrep_k, "sparsity")->required();
    mrep->add_option("--cap", mrep_cap, "search radius cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 64;
    }

    try {
        int threads = thread_count(threads_flag);

        if (*sc) {
            LinearForm form(parse_int_list(sc_coeffs));
            SliceSpec spec(form, Int(sc_b), Int(sc_t));
            if (sc_enum) {
                for (const auto& z : enumerate_slice(spec)) std::cout << join_point(z) << "\n";
            } else {
                Int count = count_slice_threaded(spec, threads);
                SliceBounds b = slice_bounds(spec);
                print_count_block(std::cout, count, b.upper, b.lower, b.asymptotic);
            }
        } else if (*cp) {
            PrimitivityReport r = is_primitive(read_matrix_file(cp_matrix));
            std::cout << "primitive=" << (r.primitive ? "true" : "false");
            if (!r.primitive) std::cout << " gcd=" << r.gcd.get_str();
            std::cout << "\n";
        } else if (*cb) {
            CompletionReport r = complete_to_basis(read_matrix_file(cb_matrix));
            std::cout << format_matrix(r.full);
        } else if (*ce) {
            IntMatrix a = read_matrix_file(ce_matrix);
            if (ce_enum) {
                for (const auto& z : enumerate_basis_extensions(a, Int(ce_t)))
                    std::cout << join_point(z) << "\n";
            } else {
                ExtensionCount r = count_basis_extensions(a, Int(ce_t), threads);
                print_count_block(std::cout, r.count, r.upper, r.lower, r.asymptotic);
            }
        } else if (*cpe) {
            Int count = count_primitive_extensions(read_matrix_file(cpe_matrix), Int(cpe_t), threads);
            std::cout << "count=" << count.get_str() << "\n";
        } else if (*sw) {
            IntMatrix a = read_matrix_file(sw_matrix);
            auto rows = asymptotic_sweep(a, parse_int_list(sw_tlist), threads);
            std::ofstream file;
            std::ostream& os = open_out(file, sw_out);
            os << "T,count,lower,upper,asym_num,asym_den,ratio,fitted_exponent\n";
            for (const auto& row : rows) {
                os << row.t.get_str() << "," << row.count.get_str() << ",";
                if (row.lower) os << row.lower->get_str();
                os << ",";
                if (row.upper) os << row.upper->get_str();
                os << ",";
                if (row.asymptotic)
                    os << row.asymptotic->get_num().get_str() << ","
                       << row.asymptotic->get_den().get_str();
                else
                    os << ",";
                os << ",";
                if (row.ratio) os << fmt_double(*row.ratio);
                os << ",";
                if (row.fitted_exponent) os << fmt_double(*row.fitted_exponent);
                os << "\n";
            }
        } else if (*lce) {
            LatticeCtx ctx = make_lattice(read_matrix_file(lce_basis));
            Int count = count_extensions_in_lattice(ctx, read_matrix_file(lce_matrix), Int(lce_t));
            std::cout << "count=" << count.get_str() << "\n";
        } else if (*fs) {
            for (const auto& f : farey_series(Int(fs_n))) std::cout << f.str() << "\n";
        } else if (*fn) {
            auto [l, r] = farey_neighbors(parse_fraction(fn_frac), Int(fn_n));
            std::cout << "left=" << (l ? l->str() : "none") << " right=" << (r ? r->str() : "none")
                      << "\n";
        } else if (*fap) {
            CFNumber alpha(parse_int_list(fap_cf));
            auto list = (fap_kind == "dirichlet") ? dirichlet_approximations(alpha, Int(fap_n))
                                                  : farey_approximations(alpha, Int(fap_n));
            for (const auto& f : list) std::cout << f.str() << "\n";
        } else if (*fd) {
            CFNumber alpha(parse_int_list(fd_cf));
            std::ofstream file;
            std::ostream& os = open_out(file, fd_out);
            os << "n,count,ratio\n";
            for (const Int& n : parse_int_list(fd_nlist)) {
                auto fa_list = farey_approximations(alpha, n);
                double ratio = static_cast<double>(fa_list.size()) / n.get_d();
                os << n.get_str() << "," << fa_list.size() << "," << fmt_double(ratio) << "\n";
            }
        } else if (*mev) {
            MultilinearForm f = read_mlform_file(mev_form);
            std::cout << "value=" << evaluate(f, parse_int_list(mev_point)).get_str() << "\n";
        } else if (*mrep) {
            MultilinearForm f = read_mlform_file(mrep_form);
            SparseSearchResult r = sparse_search(f, Int(mrep_b), mrep_k, Int(mrep_cap));
            std::cout << "found=" << (r.found ? "true" : "false")
                      << " definitive=" << (r.definitive ? "true" : "false")
                      << " bound=" << r.bound.get_str();
            if (r.witness) {
                std::cout << " z=";
                const auto& e = r.witness->entries;
                for (size_t i = 0; i < e.size(); ++i) {
                    if (i) std::cout << ",";
                    std::cout << e[i].get_str();
                }
            }
            std::cout << "\n";
        }
        return 0;
    } catch (const ResourceGuardError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: bad numeric argument\n";
        return 64;
    }
}
