#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fcc/census.hpp"
#include "fcc/complex.hpp"
#include "fcc/geometry.hpp"
#include "fcc/numeric.hpp"
#include "fcc/series.hpp"
#include "fcc/tree.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fcc::Error("cannot open output file: " + path);
    out << text;
}

// ---- verify checks ------------------------------------------------------

struct CheckResult {
    json report;
    bool ok = false;
};

CheckResult residual_check(const std::string& name, int trunc) {
    fcc::MultiSeries residual = name == "alg-d2"  ? fcc::check_alg_d2(trunc)
                                : name == "y"     ? fcc::check_Y(trunc)
                                                  : fcc::check_Z(trunc);
    CheckResult result;
    result.ok = residual.is_zero();
    result.report["check"] = name;
    result.report["d"] = 2;
    result.report["truncation"] = trunc;
    result.report["residual_zero"] = result.ok;
    result.report["max_degree_certified"] = trunc;
    return result;
}

CheckResult g0_check(int d, int max_degree) {
    bool ok = true;
    long long tested = 0;

    const std::vector<fcc::MultiSeries> g = fcc::solve_g(d, max_degree);
    for (int total = 0; total <= max_degree; ++total) {
        fcc::for_each_composition(total, d + 1, [&](const std::vector<int>& gamma) {
            ok = ok && fcc::Rational(g[0].coeff(gamma)) == fcc::g0_closed_form(gamma);
            ++tested;
        });
    }

    const fcc::MultiSeries c = fcc::series_C(d, max_degree);
    for (int total = 0; total <= max_degree + d; ++total) {
        fcc::for_each_composition(total, d + 1, [&](const std::vector<int>& gamma) {
            ok = ok && c.coeff(gamma) == fcc::count_full(fcc::ColourVector{gamma});
            ++tested;
        });
    }

    CheckResult result;
    result.ok = ok;
    result.report["check"] = "g0";
    result.report["d"] = d;
    result.report["max_degree_certified"] = max_degree;
    result.report["points_tested"] = tested;
    result.report["residual_zero"] = ok;
    return result;
}

CheckResult jacobian_check_cmd(std::optional<int> d_opt, int trials, std::uint64_t seed) {
    bool ok = true;
    long long tested = 0;
    std::uint64_t state = seed;

    std::vector<int> dims;
    if (d_opt) {
        dims.push_back(*d_opt);
    } else {
        for (int d = 0; d <= 6; ++d) dims.push_back(d);
    }
    for (int d : dims) {
        if (d <= 2) ok = ok && fcc::jacobian_symbolic(d);
        for (int trial = 0; trial < trials; ++trial) {
            const std::vector<fcc::Rational> point = fcc::random_rational_point(state, d + 1);
            ok = ok && fcc::jacobian_check(d, point).matches();
            ok = ok && fcc::esym_checks(point);
            ++tested;
        }
    }

    CheckResult result;
    result.ok = ok;
    result.report["check"] = "jacobian";
    if (d_opt) {
        result.report["d"] = *d_opt;
    } else {
        result.report["d"] = dims;
    }
    result.report["points_tested"] = tested;
    result.report["seed"] = seed;
    result.report["residual_zero"] = ok;
    return result;
}

CheckResult rothe_check(const std::string& name) {
    bool ok = true;
    long long tested = 0;
    for (int b1 = 1; b1 <= 4; ++b1) {
        for (int b2 = 1; b2 <= 4; ++b2) {
            for (int s = 0; s <= 8; ++s) {
                for (int g = 0; g <= 12; ++g) {
                    const fcc::IdentityPair pair = name == "rothe1"
                                                       ? fcc::rothe_first(b1, b2, s, g)
                                                       : fcc::rothe_second(b1, b2, s, g);
                    ok = ok && pair.matches();
                    ++tested;
                }
            }
        }
    }
    CheckResult result;
    result.ok = ok;
    result.report["check"] = name;
    result.report["points_tested"] = tested;
    result.report["residual_zero"] = ok;
    return result;
}

// ---- subcommands --------------------------------------------------------

struct EnumerateOpts {
    int d = 2;
    int n = 0;
    bool count_only = false;
    std::string out;
};

int run_enumerate(const EnumerateOpts& opts) {
    std::string text;
    if (opts.count_only) {
        text = fcc::fuss_catalan(opts.d, opts.n).str() + "\n";
    } else {
        fcc::for_each_tree(opts.d, opts.n, fcc::default_work_cap(),
                           [&](const fcc::DecompositionTree& tree) {
                               text += fcc::tree_encode(tree);
                               text += '\n';
                           });
    }
    write_output(opts.out, text);
    return kExitOk;
}

struct CensusOpts {
    int d = 2;
    int n = 0;
    std::vector<int> beta;
    bool compare = false;
    std::string out;
};

int run_census(const CensusOpts& opts) {
    std::optional<fcc::Composition> beta;
    if (!opts.beta.empty()) beta = fcc::Composition{opts.beta};

    fcc::CensusTable table = beta ? fcc::census_formula(opts.d, opts.n, *beta)
                                  : fcc::census_formula(opts.d, opts.n);
    int code = kExitOk;
    if (opts.compare) {
        const fcc::CensusTable oracle =
            beta ? fcc::census_enumerated(opts.d, opts.n, *beta, fcc::default_work_cap())
                 : fcc::census_enumerated(opts.d, opts.n, fcc::default_work_cap());
        if (oracle.entries != table.entries || oracle.total != table.total) {
            std::cerr << "census mismatch between closed formula and enumeration\n";
            code = kExitMismatch;
        }
    }
    write_output(opts.out, fcc::census_to_json(table) + "\n");
    return code;
}

struct VerifyOpts {
    std::string check;
    std::optional<int> d;
    int trunc = 10;
    int max_degree = 8;
    int trials = 100;
    std::uint64_t seed = 42;
    std::string out;
};

int run_verify(const VerifyOpts& opts) {
    std::vector<CheckResult> results;
    const int g0_d = opts.d.value_or(2);

    if (opts.check == "alg-d2" || opts.check == "all") results.push_back(residual_check("alg-d2", opts.trunc));
    if (opts.check == "y" || opts.check == "all") results.push_back(residual_check("y", opts.trunc));
    if (opts.check == "z" || opts.check == "all") results.push_back(residual_check("z", opts.trunc));
    if (opts.check == "g0" || opts.check == "all") results.push_back(g0_check(g0_d, opts.max_degree));
    if (opts.check == "jacobian" || opts.check == "all") {
        results.push_back(jacobian_check_cmd(opts.d, opts.trials, opts.seed));
    }
    if (opts.check == "rothe1" || opts.check == "all") results.push_back(rothe_check("rothe1"));
    if (opts.check == "rothe2" || opts.check == "all") results.push_back(rothe_check("rothe2"));

    bool ok = true;
    std::string text;
    if (opts.check == "all") {
        json doc = json::array();
        for (const CheckResult& r : results) {
            doc.push_back(r.report);
            ok = ok && r.ok;
        }
        text = doc.dump(2) + "\n";
    } else {
        ok = results.front().ok;
        text = results.front().report.dump(2) + "\n";
    }
    write_output(opts.out, text);
    return ok ? kExitOk : kExitMismatch;
}

struct GeometryOpts {
    std::string tree;
    int d = 2;
    std::string format = "json";
    bool lifted = false;
    std::string out;
};

int run_geometry(const GeometryOpts& opts) {
    const fcc::DecompositionTree tree = fcc::tree_decode(opts.tree, opts.d);
    std::string text;
    if (opts.format == "svg") {
        if (opts.lifted) throw fcc::Error("--lift is not available for svg output");
        text = fcc::render_svg(tree);
    } else {
        const fcc::SchlegelDiagram diagram = fcc::schlegel(tree);
        if (opts.format == "off") {
            text = opts.lifted ? fcc::export_off(fcc::lift(diagram)) : fcc::export_off(diagram);
        } else {
            text = opts.lifted ? fcc::export_json(fcc::lift(diagram)) + "\n"
                               : fcc::export_json(diagram) + "\n";
        }
    }
    write_output(opts.out, text);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration, colour census, series identities and diagrams\n"
                 "for marked simplicial ball complexes"};
    app.require_subcommand(1);

    EnumerateOpts enumerate_opts;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list all complexes as tree text");
    enumerate->add_option("--d", enumerate_opts.d, "dimension, at least 2")->required();
    enumerate->add_option("--n", enumerate_opts.n, "number of maximal cells")->required();
    enumerate->add_flag("--count", enumerate_opts.count_only, "print only the number of complexes");
    enumerate->add_option("--out", enumerate_opts.out, "output file (default stdout)");

    CensusOpts census_opts;
    CLI::App* census = app.add_subcommand("census", "colour census as JSON");
    census->add_option("--d", census_opts.d, "dimension, at least 2")->required();
    census->add_option("--n", census_opts.n, "number of maximal cells")->required();
    census->add_option("--beta", census_opts.beta, "colour blocks, e.g. 1,2")->delimiter(',');
    census->add_flag("--compare", census_opts.compare, "cross-check against full enumeration");
    census->add_option("--out", census_opts.out, "output file (default stdout)");

    VerifyOpts verify_opts;
    int verify_d = -1;
    CLI::App* verify = app.add_subcommand("verify", "verify the algebraic identities");
    verify
        ->add_option("check", verify_opts.check,
                     "one of: alg-d2, y, z, g0, jacobian, rothe1, rothe2, all")
        ->required()
        ->check(CLI::IsMember({"alg-d2", "y", "z", "g0", "jacobian", "rothe1", "rothe2", "all"}));
    verify->add_option("--d", verify_d, "dimension (g0, jacobian; default 2 / sweep 0..6)");
    verify->add_option("--trunc", verify_opts.trunc, "truncation degree for residuals")
        ->check(CLI::Range(2, 255));
    verify->add_option("--max-degree", verify_opts.max_degree, "certified degree for g0")
        ->check(CLI::Range(0, 64));
    verify->add_option("--trials", verify_opts.trials, "random points per dimension")
        ->check(CLI::Range(1, 100000));
    verify->add_option("--seed", verify_opts.seed, "seed for the random points");
    verify->add_option("--out", verify_opts.out, "output file (default stdout)");

    GeometryOpts geometry_opts;
    CLI::App* geometry = app.add_subcommand("geometry", "diagram exports (off, json, svg)");
    geometry->add_option("--tree", geometry_opts.tree, "tree text, e.g. ((EE)E)")->required();
    geometry->add_option("--d", geometry_opts.d, "dimension, at least 2")->required();
    geometry->add_option("--format", geometry_opts.format, "off, json or svg")
        ->check(CLI::IsMember({"off", "json", "svg"}));
    geometry->add_flag("--lift", geometry_opts.lifted, "export the convex lift");
    geometry->add_option("--out", geometry_opts.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*enumerate) return run_enumerate(enumerate_opts);
        if (*census) return run_census(census_opts);
        if (*verify) {
            if (verify->count("--d") > 0) verify_opts.d = verify_d;
            return run_verify(verify_opts);
        }
        if (*geometry) return run_geometry(geometry_opts);
    } catch (const fcc::ResourceCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const fcc::ParseError& e) {
        std::cerr << "error: " << e.what() << " at position " << e.position << "\n";
        return kExitUsage;
    } catch (const fcc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
