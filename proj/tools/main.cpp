// c2ring: exact arithmetic in the reduced ring of the RO(C2)-graded
// C2-equivariant stable stems, plus its tables and verification suites.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "c2ring/checks.hpp"
#include "c2ring/expr.hpp"
#include "c2ring/rational.hpp"
#include "c2ring/ring.hpp"
#include "c2ring/spectral_names.hpp"

namespace {

using namespace c2ring;

std::int64_t default_window() {
    if (const char* env = std::getenv("C2RING_WINDOW")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return v;
        } catch (...) {
            // unusable value: fall through to the built-in default
        }
    }
    return 24;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

// Rows of strings rendered either as aligned text or CSV (header first).
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void print(bool csv) const {
        if (csv) {
            print_csv_row(header);
            for (const auto& r : rows) print_csv_row(r);
            return;
        }
        std::vector<std::size_t> width(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
        for (const auto& r : rows)
            for (std::size_t c = 0; c < r.size(); ++c)
                width[c] = std::max(width[c], r[c].size());
        print_aligned_row(header, width);
        for (const auto& r : rows) print_aligned_row(r, width);
    }

private:
    static void print_csv_row(const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c)
            std::cout << (c ? "," : "") << csv_field(row[c]);
        std::cout << "\n";
    }
    static void print_aligned_row(const std::vector<std::string>& row,
                                  const std::vector<std::size_t>& width) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line.append(width[c] - row[c].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
};

std::string degree_or_dash(const std::optional<Bidegree>& d) {
    return d ? to_string(*d) : "-";
}

int cmd_eval(const std::string& text, bool rational_mode, bool csv) {
    const ExprPtr ast = parse(text);
    std::string canonical, phi_e, phi_fix;
    std::optional<Bidegree> degree;
    if (rational_mode) {
        const RationalElement v = eval_rational(*ast);
        canonical = to_string(v);
        degree = v.degree();
        phi_e = char_underlying(v).str();
        phi_fix = char_fixed(v).str();
    } else {
        const RingElement v = eval(*ast);
        canonical = to_string(v);
        degree = v.degree();
        phi_e = char_underlying(v).str();
        phi_fix = char_fixed(v).str();
    }
    if (csv) {
        Table t;
        t.header = {"canonical", "stem", "weight", "phi_e", "phi_fix"};
        t.rows.push_back({canonical, degree ? std::to_string(degree->stem) : "",
                          degree ? std::to_string(degree->weight) : "", phi_e, phi_fix});
        t.print(true);
    } else {
        std::cout << canonical << "  degree " << degree_or_dash(degree) << "  phi_e=" << phi_e
                  << "  phi_fix=" << phi_fix << "\n";
    }
    return 0;
}

int cmd_basis(std::int64_t smin, std::int64_t smax, std::int64_t wmin, std::int64_t wmax,
              bool csv) {
    Table t;
    t.header = csv ? std::vector<std::string>{"name", "stem", "weight", "adams"}
                   : std::vector<std::string>{"name", "degree", "adams"};
    for (const auto& b : basis_in_box(smin, smax, wmin, wmax)) {
        const auto name = adams_name(b);
        const std::string adams = name ? name->str() : (csv ? "" : "-");
        if (csv)
            t.rows.push_back({b.name(), std::to_string(b.degree().stem),
                              std::to_string(b.degree().weight), adams});
        else
            t.rows.push_back({b.name(), to_string(b.degree()), adams});
    }
    t.print(csv);
    return 0;
}

int cmd_multable(std::int64_t window, bool csv) {
    Table t;
    t.header = {"a", "b", "product"};
    const auto box = basis_in_window(window);
    for (const auto& a : box)
        for (const auto& b : box)
            t.rows.push_back({a.name(), b.name(), to_string(mul_basis(a, b))});
    t.print(csv);
    return 0;
}

int cmd_divtable(std::int64_t i_max, bool csv) {
    Table t;
    t.header = {"i", "n", "m", "b"};
    for (std::int64_t i = 1; i <= i_max; ++i) {
        const auto p = divisibility_profile(i);
        t.rows.push_back({std::to_string(p.i), std::to_string(p.n), std::to_string(p.m),
                          std::to_string(p.b)});
    }
    t.print(csv);
    return 0;
}

int cmd_name(const std::string& text, bool csv) {
    const RingElement v = eval(*parse(text));
    if (v.terms().size() != 1 || v.terms().begin()->second != 1)
        throw std::domain_error("expression is not a single basis element: " + to_string(v));
    const BasisElement b = v.terms().begin()->first;
    const auto name = adams_name(b);
    Table t;
    t.header = {"element", "adams"};
    t.rows.push_back({b.name(), name ? name->str() : "undefined"});
    if (csv)
        t.print(true);
    else
        std::cout << b.name() << "  " << (name ? name->str() : "undefined") << "\n";
    return 0;
}

int cmd_e1(const std::string& catalog_path, const TriWindow& window, bool csv) {
    const std::vector<ExtCGenerator> catalog =
        catalog_path.empty() ? bundled_catalog() : load_catalog(catalog_path);
    const auto classes = enumerate_e1_minus(catalog, window);
    Table t;
    if (csv) {
        t.header = {"kind", "a", "b", "base", "stem", "filtration", "weight"};
        for (const auto& c : classes)
            t.rows.push_back({c.kind == E1MinusClass::Kind::Gamma ? "gamma" : "Q",
                              std::to_string(c.a), std::to_string(c.b), c.base,
                              std::to_string(c.degree.stem), std::to_string(c.degree.filtration),
                              std::to_string(c.degree.weight)});
    } else {
        t.header = {"class", "degree"};
        for (const auto& c : classes) t.rows.push_back({c.name(), to_string(c.degree)});
    }
    t.print(csv);
    return 0;
}

int cmd_check(std::int64_t window, const std::vector<std::string>& suites,
              const std::vector<std::string>& corruptions, bool csv) {
    if (!corruptions.empty()) {
        // Test hook: n(i) overridden at the listed points, closed form elsewhere.
        auto table = std::make_shared<std::map<std::int64_t, std::int64_t>>();
        for (const auto& entry : corruptions) {
            const auto eq = entry.find('=');
            if (eq == std::string::npos)
                throw CLI::ValidationError("--corrupt-n", "expected I=V, got '" + entry + "'");
            (*table)[std::stoll(entry.substr(0, eq))] = std::stoll(entry.substr(eq + 1));
        }
        set_n_override([table](std::int64_t i) {
            const auto it = table->find(i);
            return it != table->end() ? it->second : n_closed_form(i);
        });
    }

    SuiteSelection sel;
    if (suites.empty()) {
        sel = SuiteSelection::all();
    } else {
        for (const auto& s : suites) {
            const SuiteSelection one = select_suite(s);
            sel.axioms |= one.axioms;
            sel.presentation |= one.presentation;
            sel.rational |= one.rational;
            sel.divisibility |= one.divisibility;
            sel.characters |= one.characters;
            sel.oracle |= one.oracle;
        }
    }

    const CheckReport report = run_suites(sel, window);
    set_n_override({});
    if (csv) {
        Table t;
        t.header = {"check", "passed", "detail"};
        for (const auto& r : report.results)
            t.rows.push_back({r.name, r.passed ? "1" : "0", r.detail});
        t.print(true);
    } else {
        for (const auto& r : report.results) {
            if (r.passed)
                std::cout << "PASS " << r.name << "\n";
            else
                std::cout << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail)
                          << "\n";
        }
        std::cout << report.results.size() << " checks, " << report.failure_count()
                  << " failures\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact arithmetic in the reduced ring of the RO(C2)-graded C2-equivariant "
        "stable stems"};
    app.require_subcommand(1);
    const std::int64_t W = default_window();

    std::string format = "text";
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "csv"}))
            ->capture_default_str();
    };

    std::string expr_text;
    std::string mode = "integral";
    auto* eval_cmd = app.add_subcommand(
        "eval", "evaluate an expression; print canonical form, degree, characters");
    eval_cmd->add_option("expr", expr_text, "expression, e.g. \"2 - rho*eta\"")->required();
    eval_cmd->add_option("--mode", mode, "coefficient ring")
        ->check(CLI::IsMember({"integral", "rational"}))
        ->capture_default_str();
    add_format(eval_cmd);

    std::int64_t smin = -W, smax = W, wmin = -W, wmax = W;
    auto* basis_cmd = app.add_subcommand("basis", "list basis elements in a degree box");
    basis_cmd->add_option("--smin", smin, "stem lower bound")->capture_default_str();
    basis_cmd->add_option("--smax", smax, "stem upper bound")->capture_default_str();
    basis_cmd->add_option("--wmin", wmin, "weight lower bound")->capture_default_str();
    basis_cmd->add_option("--wmax", wmax, "weight upper bound")->capture_default_str();
    add_format(basis_cmd);

    std::int64_t window = W;
    auto* multable_cmd =
        app.add_subcommand("multable", "products of all basis pairs in a window");
    multable_cmd->add_option("--window", window, "box half-width")->capture_default_str();
    add_format(multable_cmd);

    std::int64_t i_max = W;
    auto* divtable_cmd = app.add_subcommand("divtable", "table of i, n(i), m(i), b(i)");
    divtable_cmd->add_option("--imax", i_max, "table extent")->capture_default_str();
    add_format(divtable_cmd);

    std::string name_text;
    auto* name_cmd = app.add_subcommand("name", "Adams name of a basis element");
    name_cmd->add_option("expr", name_text, "expression evaluating to a basis element")
        ->required();
    add_format(name_cmd);

    std::string catalog_path;
    TriWindow tri{0, W, -W, W, -W, W};
    auto* e1_cmd =
        app.add_subcommand("e1", "enumerate E1^- generators over an Ext_C catalog");
    e1_cmd->add_option("--catalog", catalog_path, "catalog file (default: bundled)")
        ->check(CLI::ExistingFile);
    e1_cmd->add_option("--smin", tri.smin, "stem lower bound")->capture_default_str();
    e1_cmd->add_option("--smax", tri.smax, "stem upper bound")->capture_default_str();
    e1_cmd->add_option("--fmin", tri.fmin, "filtration lower bound")->capture_default_str();
    e1_cmd->add_option("--fmax", tri.fmax, "filtration upper bound")->capture_default_str();
    e1_cmd->add_option("--wmin", tri.wmin, "weight lower bound")->capture_default_str();
    e1_cmd->add_option("--wmax", tri.wmax, "weight upper bound")->capture_default_str();
    add_format(e1_cmd);

    std::string rational_text;
    auto* rational_cmd =
        app.add_subcommand("rational", "evaluate an expression over the rationals");
    rational_cmd->add_option("expr", rational_text, "expression")->required();
    add_format(rational_cmd);

    std::int64_t check_window = W;
    std::vector<std::string> suites;
    std::vector<std::string> corruptions;
    auto* check_cmd = app.add_subcommand("check", "run verification suites");
    check_cmd->add_option("--window", check_window, "verification window")
        ->capture_default_str();
    check_cmd->add_option("suites", suites,
                          "suites to run (default all): divisibility axioms presentation "
                          "characters rational oracle");
    check_cmd->add_option("--corrupt-n", corruptions, "test hook: override n(I)=V")
        ->allow_extra_args(false)  // one I=V per occurrence, repeatable
        ->group("");               // hidden
    add_format(check_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const bool csv = format == "csv";
    try {
        if (eval_cmd->parsed()) return cmd_eval(expr_text, mode == "rational", csv);
        if (basis_cmd->parsed()) return cmd_basis(smin, smax, wmin, wmax, csv);
        if (multable_cmd->parsed()) return cmd_multable(window, csv);
        if (divtable_cmd->parsed()) return cmd_divtable(i_max, csv);
        if (name_cmd->parsed()) return cmd_name(name_text, csv);
        if (e1_cmd->parsed()) return cmd_e1(catalog_path, tri, csv);
        if (rational_cmd->parsed()) return cmd_eval(rational_text, true, csv);
        if (check_cmd->parsed()) return cmd_check(check_window, suites, corruptions, csv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
