// Command-line surface: build the catalogue algebras, verify their structural
// properties, print multiplication tables, decide simplicity, compute ideal
// closures, search for degree maps, and check generator isomorphisms.
//
// Exit codes: 0 pass, 1 property violated / not simple, 2 usage or parse
// error, 3 indeterminate.

#include "gca/analysis.hpp"
#include "gca/cocycle.hpp"
#include "gca/constructions.hpp"
#include "gca/json_io.hpp"
#include "gca/table.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

constexpr int exit_pass = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_indeterminate = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + *path + "'");
    out << text;
}

gca::AlgebraDocument load(const std::string& path) { return gca::parse_document(read_file(path)); }

// Linear-combination grammar for ideal generators: terms joined by + or -,
// each term "label", "coeff*label" or a bare rational coefficient (meaning a
// multiple of the unit), e.g. "eps+a1" or "1/2*e1-e2".
template <class K>
gca::AlgebraElement<K> parse_element(const gca::GradedAlgebra<K>& alg, const std::string& text) {
    gca::Vec<K> coords(alg.dim(), K(0));
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&]() -> void { throw std::runtime_error("cannot parse element expression '" + text + "'"); };
    bool any = false;
    skip_ws();
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        } else if (any) {
            fail();
        }
        gca::Rational coeff(1);
        bool have_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            gca::BigInt num(text.substr(start, pos - start));
            gca::BigInt den(1);
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                std::size_t dstart = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (dstart == pos) fail();
                den = gca::BigInt(text.substr(dstart, pos - dstart));
                if (den == 0) fail();
            }
            coeff = gca::Rational(num, den);
            have_coeff = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        std::size_t lstart = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        K scalar = K(sign) * K(coeff);
        if (lstart == pos) {
            if (!have_coeff) fail();
            for (std::size_t s = 0; s < alg.dim(); ++s)
                coords[s] = coords[s] + scalar * alg.unit()[s];
        } else {
            std::size_t idx = alg.index_of(text.substr(lstart, pos - lstart));
            coords[idx] = coords[idx] + scalar;
        }
        any = true;
        skip_ws();
    }
    if (!any) fail();
    return alg.element(std::move(coords));
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// --- build -------------------------------------------------------------------

struct BuildOptions {
    std::string kind;
    int p = -1, q = -1, n = -1, n_plus_1 = -1, m = -1;
    std::string basis = "units";
    std::string field = "rational";
    std::optional<std::string> out;
};

int cmd_build(const BuildOptions& opt) {
    using namespace gca;
    auto need = [](bool cond, const std::string& msg) {
        if (!cond) throw std::runtime_error(msg);
    };
    AlgebraDocument doc = [&]() -> AlgebraDocument {
        if (opt.kind == "quaternions") return {AnyAlgebra(quaternions()), std::nullopt};
        if (opt.kind == "clifford") {
            need(opt.p >= 0 && opt.q >= 0, "clifford needs --p and --q");
            return {AnyAlgebra(clifford<Rational>(static_cast<unsigned>(opt.p), static_cast<unsigned>(opt.q))),
                    std::nullopt};
        }
        if (opt.kind == "clifford-complex") {
            need(opt.n >= 0, "clifford-complex needs --n");
            return {AnyAlgebra(clifford_complex(static_cast<unsigned>(opt.n))), std::nullopt};
        }
        if (opt.kind == "twisted") {
            need(opt.n >= 1, "twisted needs --n");
            auto F = standard_cocycle(static_cast<unsigned>(opt.n));
            if (opt.field == "gaussian")
                return {AnyAlgebra(twisted_group_algebra<GaussianRational>(static_cast<unsigned>(opt.n), F)),
                        F.form()};
            need(opt.field == "rational", "unknown field '" + opt.field + "'");
            return {AnyAlgebra(twisted_group_algebra<Rational>(static_cast<unsigned>(opt.n), F)), F.form()};
        }
        if (opt.kind == "even-twisted") {
            need(opt.n_plus_1 >= 2, "even-twisted needs --n-plus-1");
            auto F = standard_cocycle(static_cast<unsigned>(opt.n_plus_1));
            if (opt.field == "gaussian")
                return {AnyAlgebra(even_twisted_subalgebra<GaussianRational>(
                            static_cast<unsigned>(opt.n_plus_1), F)),
                        F.form()};
            need(opt.field == "rational", "unknown field '" + opt.field + "'");
            return {AnyAlgebra(even_twisted_subalgebra<Rational>(static_cast<unsigned>(opt.n_plus_1), F)),
                    F.form()};
        }
        if (opt.kind == "matrix") {
            need(opt.m >= 1, "matrix needs --m");
            NamedMatrixBasis nb;
            if (opt.basis == "units") nb = matrix_units_basis(static_cast<unsigned>(opt.m));
            else if (opt.basis == "clifford-image" && opt.m == 2) nb = clifford_image_basis_m2();
            else if (opt.basis == "clifford-image" && opt.m == 4) nb = clifford_image_basis_m4();
            else if (opt.basis == "clock-shift" && opt.m == 3) nb = clock_shift_basis_m3();
            else throw std::runtime_error("unsupported matrix basis '" + opt.basis + "' for m=" +
                                          std::to_string(opt.m));
            return {AnyAlgebra(matrix_algebra<Rational>(nb.m, nb.mats, nb.labels)), std::nullopt};
        }
        throw std::runtime_error("unknown build kind '" + opt.kind + "'");
    }();
    write_output(opt.out, serialize(doc));
    return exit_pass;
}

// --- verify ------------------------------------------------------------------

int cmd_verify(const std::string& file, std::vector<std::string> checks) {
    using namespace gca;
    AlgebraDocument doc = load(file);
    bool graded = std::visit([](const auto& a) { return a.graded(); }, doc.algebra);
    if (checks.empty()) {
        checks = {"assoc"};
        if (graded) {
            checks.push_back("grading");
            checks.push_back("gamma-comm");
        }
        if (doc.cocycle) checks.push_back("cocycle");
    }
    bool all_ok = true;
    for (const auto& check : checks) {
        if (check == "assoc") {
            auto r = std::visit([](const auto& a) { return check_associativity(a); }, doc.algebra);
            if (r.ok) {
                std::cout << "check assoc: pass\n";
            } else {
                all_ok = false;
                std::visit(
                    [&](const auto& a) {
                        std::cout << "check assoc: FAIL at triple (" << a.label(r.i) << ", " << a.label(r.j)
                                  << ", " << a.label(r.k) << ")\n";
                    },
                    doc.algebra);
            }
        } else if (check == "grading") {
            auto r = std::visit([](const auto& a) { return check_grading(a); }, doc.algebra);
            if (r.ok) {
                std::cout << "check grading: pass\n";
            } else {
                all_ok = false;
                std::visit(
                    [&](const auto& a) {
                        std::cout << "check grading: FAIL at triple (" << a.label(r.i) << ", " << a.label(r.j)
                                  << ", " << a.label(r.k) << ")\n";
                    },
                    doc.algebra);
            }
        } else if (check == "gamma-comm") {
            try {
                auto r = std::visit([](const auto& a) { return check_gamma_commutativity(a); }, doc.algebra);
                if (r.ok) {
                    std::cout << "check gamma-comm: pass\n";
                } else {
                    all_ok = false;
                    std::visit(
                        [&](const auto& a) {
                            std::cout << "check gamma-comm: FAIL at pair (" << a.label(r.i) << ", "
                                      << a.label(r.j) << ")\n";
                        },
                        doc.algebra);
                }
            } catch (const std::invalid_argument& e) {
                all_ok = false;
                std::cout << "check gamma-comm: rejected (" << e.what() << ")\n";
            }
        } else if (check == "cocycle") {
            if (!doc.cocycle) throw std::runtime_error("document carries no cocycle matrix");
            auto r = is_cocycle(SignCocycle(*doc.cocycle));
            if (r.ok) {
                std::cout << "check cocycle: pass\n";
            } else {
                all_ok = false;
                const auto& w = *r.witness;
                std::cout << "check cocycle: FAIL at triple " << to_string(w[0]) << " " << to_string(w[1])
                          << " " << to_string(w[2]) << "\n";
            }
        } else {
            throw std::runtime_error("unknown check '" + check + "'");
        }
    }
    return all_ok ? exit_pass : exit_violation;
}

// --- table / simple / ideal / search / iso ------------------------------------

int cmd_table(const std::string& file) {
    auto doc = load(file);
    std::visit([](const auto& a) { std::cout << gca::format_table(a); }, doc.algebra);
    return exit_pass;
}

template <class K>
void print_subspace(const gca::GradedAlgebra<K>& a, const gca::Subspace<K>& s) {
    for (const auto& row : s.rows()) {
        std::cout << "  [";
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << gca::scalar_str(row[i]);
        }
        std::cout << "]  " << gca::element_str(a, row) << "\n";
    }
}

int cmd_simple(const std::string& file) {
    using namespace gca;
    auto doc = load(file);
    return std::visit(
        [](const auto& a) {
            auto report = is_simple(a);
            switch (report.verdict) {
            case SimplicityVerdict::simple:
                std::cout << "simple (" << report.detail << ")\n";
                break;
            case SimplicityVerdict::not_simple:
                std::cout << "not_simple (" << report.detail << ")\n";
                std::cout << "witness ideal, dim " << report.witness->dim() << ":\n";
                print_subspace(a, *report.witness);
                break;
            case SimplicityVerdict::indeterminate:
                std::cout << "indeterminate (" << report.detail << ")\n";
                break;
            }
            if (a.graded()) {
                switch (is_graded_simple(a)) {
                case GradedSimplicity::graded_simple: std::cout << "graded_simple: yes\n"; break;
                case GradedSimplicity::not_graded_simple: std::cout << "graded_simple: no\n"; break;
                case GradedSimplicity::unsupported: std::cout << "graded_simple: unsupported\n"; break;
                }
            }
            if (report.verdict == SimplicityVerdict::simple) return exit_pass;
            if (report.verdict == SimplicityVerdict::not_simple) return exit_violation;
            return exit_indeterminate;
        },
        doc.algebra);
}

int cmd_ideal(const std::string& file, const std::string& gens) {
    using namespace gca;
    auto doc = load(file);
    return std::visit(
        [&gens](const auto& a) {
            using K = std::decay_t<decltype(a.unit()[0])>;
            std::vector<AlgebraElement<K>> elems;
            for (const auto& expr : split_list(gens, ','))
                elems.push_back(parse_element(a, expr));
            auto ideal = ideal_closure(a, elems);
            std::cout << "ideal closure dim " << ideal.dim() << " of " << a.dim() << "\n";
            print_subspace(a, ideal);
            return exit_pass;
        },
        doc.algebra);
}

int cmd_search(const std::string& file, unsigned max_n, std::size_t budget) {
    using namespace gca;
    auto doc = load(file);
    return std::visit(
        [max_n, budget](const auto& a) {
            auto r = grading_search(a, max_n, budget);
            switch (r.outcome) {
            case GradingSearchOutcome::found:
                std::cout << "found: m=" << r.m << "\n";
                for (std::size_t i = 0; i < a.dim(); ++i)
                    std::cout << "  deg(" << a.label(i) << ") = " << to_string(r.degrees[i]) << "\n";
                return exit_pass;
            case GradingSearchOutcome::basis_obstruction:
                std::cout << "basis obstruction: (" << a.label(r.obstruction_i) << ", "
                          << a.label(r.obstruction_j) << ") do not sign-commute\n";
                return exit_violation;
            case GradingSearchOutcome::none_within_bound:
                std::cout << "none within bound (max_n=" << max_n << ")\n";
                return exit_violation;
            case GradingSearchOutcome::bound_exhausted:
                std::cout << "bound exhausted\n";
                return exit_indeterminate;
            }
            return exit_usage;
        },
        doc.algebra);
}

int cmd_iso(const std::string& file_a, const std::string& file_b, const std::string& map) {
    using namespace gca;
    auto doc_a = load(file_a);
    auto doc_b = load(file_b);
    if (doc_a.algebra.index() != doc_b.algebra.index())
        throw std::runtime_error("iso: the two documents use different scalar fields");
    return std::visit(
        [&](const auto& a) {
            using K = std::decay_t<decltype(a.unit()[0])>;
            const auto& b = std::get<GradedAlgebra<K>>(doc_b.algebra);
            std::vector<std::pair<std::string, AlgebraElement<K>>> gen_map;
            for (const auto& pair : split_list(map, ',')) {
                auto eq = pair.find('=');
                if (eq == std::string::npos)
                    throw std::runtime_error("iso: map entries look like generatorA=basisB");
                std::string lhs = pair.substr(0, eq), rhs = pair.substr(eq + 1);
                gen_map.emplace_back(lhs, b.basis_element(b.index_of(rhs)));
            }
            auto r = check_generator_iso(a, b, gen_map);
            if (r.ok) {
                std::cout << "isomorphism verified (" << a.dim() << " basis monomials)\n";
                return exit_pass;
            }
            std::cout << "not isomorphic: " << r.reason;
            if (r.reason.find("basis pair") != std::string::npos)
                std::cout << " (" << a.label(r.i) << ", " << a.label(r.j) << ")";
            std::cout << "\n";
            return exit_violation;
        },
        doc_a.algebra);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for (Z2)^n-graded commutative algebras"};
    app.require_subcommand(1);

    BuildOptions build_opt;
    auto* build = app.add_subcommand("build", "construct an algebra and write it as JSON");
    build->add_option("kind", build_opt.kind,
                      "one of: clifford, clifford-complex, twisted, even-twisted, quaternions, matrix")
        ->required();
    build->add_option("--p", build_opt.p, "positive generator count (clifford)");
    build->add_option("--q", build_opt.q, "negative generator count (clifford)");
    build->add_option("--n", build_opt.n, "group dimension (twisted, clifford-complex)");
    build->add_option("--n-plus-1", build_opt.n_plus_1, "ambient group dimension (even-twisted)");
    build->add_option("--m", build_opt.m, "matrix size (matrix)");
    build->add_option("--basis", build_opt.basis, "matrix basis: units, clifford-image, clock-shift");
    build->add_option("--field", build_opt.field, "scalar field: rational or gaussian");
    std::string out_path;
    auto* out_opt = build->add_option("--out", out_path, "output path (default: stdout)");

    std::string verify_file;
    std::vector<std::string> verify_checks;
    auto* verify = app.add_subcommand("verify", "run structural checks on an algebra document");
    verify->add_option("file", verify_file)->required();
    verify->add_option("--check", verify_checks, "subset of: assoc, grading, gamma-comm, cocycle")
        ->delimiter(',');

    std::string table_file;
    auto* table = app.add_subcommand("table", "print the multiplication table");
    table->add_option("file", table_file)->required();

    std::string simple_file;
    auto* simple = app.add_subcommand("simple", "decide simplicity and graded-simplicity");
    simple->add_option("file", simple_file)->required();

    std::string ideal_file, ideal_gens;
    auto* ideal = app.add_subcommand("ideal", "two-sided ideal closure of given generators");
    ideal->add_option("file", ideal_file)->required();
    ideal->add_option("--gen", ideal_gens, "comma-separated generator expressions, e.g. eps+a1")->required();

    std::string search_file;
    unsigned search_max_n = 0;
    std::size_t search_budget = gca::grading_search_default_budget;
    auto* search = app.add_subcommand("search", "bounded search for a commutative degree map");
    search->add_option("file", search_file)->required();
    search->add_option("--max-n", search_max_n, "largest grading dimension to try")->required();
    search->add_option("--budget", search_budget, "search node budget");

    std::string iso_a, iso_b, iso_map;
    auto* iso = app.add_subcommand("iso", "check a generator-map isomorphism between two documents");
    iso->add_option("fileA", iso_a)->required();
    iso->add_option("fileB", iso_b)->required();
    iso->add_option("--map", iso_map, "generator assignments, e.g. a1=e1,a2=e2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (build->parsed()) {
            if (out_opt->count()) build_opt.out = out_path;
            return cmd_build(build_opt);
        }
        if (verify->parsed()) return cmd_verify(verify_file, verify_checks);
        if (table->parsed()) return cmd_table(table_file);
        if (simple->parsed()) return cmd_simple(simple_file);
        if (ideal->parsed()) return cmd_ideal(ideal_file, ideal_gens);
        if (search->parsed()) return cmd_search(search_file, search_max_n, search_budget);
        if (iso->parsed()) return cmd_iso(iso_a, iso_b, iso_map);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
