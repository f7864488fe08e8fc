// Command-line front end: enumeration of the curve/root/ruling combinatorics,
// the full verification pipeline with JSON certificates, and JSON exports of
// the equation systems and solved rescalings.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "torsor/json_io.hpp"

using namespace torsor;

namespace {

std::vector<Rational> parse_params_flag(int r, const std::string& flag) {
    std::map<std::string, Rational> given;
    std::size_t pos = 0;
    while (pos < flag.size()) {
        std::size_t comma = flag.find(',', pos);
        std::string item = flag.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? flag.size() : comma + 1;
        std::size_t eq = item.find('=');
        require(eq != std::string::npos, "--params expects name=value pairs, got: " + item);
        given[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    }
    std::vector<Rational> out;
    for (const auto& name : parameter_names(r)) {
        auto it = given.find(name);
        require(it != given.end(), "--params is missing " + name);
        out.push_back(it->second);
        given.erase(it);
    }
    require(given.empty(), "--params has unknown entries");
    return out;
}

void write_output(const json& doc, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream os(path);
    require(static_cast<bool>(os), "cannot open output file " + path);
    os << doc.dump(2) << "\n";
    std::cerr << "wrote " << path << "\n";
}

int cmd_enumerate(int r, const std::string& what) {
    if (what == "curves") {
        auto curves = enumerate_minus_one_curves(r);
        for (const auto& l : curves) {
            auto c = class_of(l, r);
            std::cout << l.str() << "\t" << coordinate_name(l, r) << "\t" << c.str() << "\n";
        }
        std::cout << "# " << curves.size() << " (-1)-curves for r=" << r << "\n";
    } else if (what == "roots") {
        auto roots = enumerate_roots(r);
        for (const auto& a : roots) std::cout << a.str() << "\n";
        std::cout << "# " << roots.size() << " roots for r=" << r << "\n";
    } else if (what == "rulings") {
        auto rulings = enumerate_rulings(r, 1);
        if (r == 7) {
            auto k2 = enumerate_rulings(7, 2);
            rulings.insert(rulings.end(), k2.begin(), k2.end());
        }
        for (const auto& rl : rulings) {
            std::cout << rl.symbol << "\t" << rl.cls.str() << "\t(" << rl.k << ")-ruling\t";
            for (std::size_t i = 0; i < rl.pairs.size(); ++i)
                std::cout << (i ? " " : "") << rl.pairs[i].first.str() << "+"
                          << rl.pairs[i].second.str();
            std::cout << "\n";
        }
        std::cout << "# " << rulings.size() << " rulings for r=" << r << "\n";
    } else {
        throw InvalidInput("--what must be curves, roots or rulings");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact universal-torsor embeddings for degree 2 and 3 del Pezzo surfaces"};
    app.require_subcommand(1);

    int r = 6;
    std::string what = "curves";
    auto* enumerate = app.add_subcommand("enumerate", "list curves, roots or rulings");
    enumerate->add_option("--r", r, "number of blown-up points (3..7)")->required();
    enumerate->add_option("--what", what, "curves | roots | rulings");

    std::string mode, params_flag, scope_flag = "all", out_path;
    std::uint64_t seed = 1;
    int samples = 10;
    bool force_symbolic = false;
    auto* verify = app.add_subcommand("verify", "run the full embedding verification");
    verify->add_option("--r", r, "6 or 7")->required();
    verify->add_option("--mode", mode, "symbolic | specialized (default: symbolic for r=6)");
    verify->add_option("--params", params_flag, "explicit parameter values, e.g. a=2,b=3,c=5,d=7");
    verify->add_option("--seed", seed, "seed for sampled parameters, factors and points");
    verify->add_option("--samples", samples, "number of torsor sample points");
    verify->add_option("--scope", scope_flag, "all | m (membership rulings only)");
    verify->add_option("--out", out_path, "certificate path (default certificate-r<r>.json)");
    verify->add_flag("--force-symbolic", force_symbolic, "allow symbolic mode for r=7");

    std::string target;
    auto* exp = app.add_subcommand("export", "emit equation systems or solved rescalings as JSON");
    exp->add_option("--r", r, "6 or 7")->required();
    exp->add_option("--target", target,
                    "h6-equations | h7-equations | g-conditions | solutions")
        ->required();
    exp->add_option("--mode", mode, "symbolic | specialized");
    exp->add_option("--params", params_flag, "explicit parameter values");
    exp->add_option("--seed", seed, "seed when parameters are sampled");
    exp->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);

        if (enumerate->parsed()) return cmd_enumerate(r, what);

        if (verify->parsed()) {
            require(r == 6 || r == 7, "--r must be 6 or 7");
            PipelineOptions opts;
            opts.r = r;
            if (mode.empty()) mode = (r == 6) ? "symbolic" : "specialized";
            require(mode == "symbolic" || mode == "specialized",
                    "--mode must be symbolic or specialized");
            opts.symbolic = (mode == "symbolic");
            require(!(opts.symbolic && r == 7) || force_symbolic,
                    "symbolic mode for r=7 is expensive; pass --force-symbolic to confirm");
            if (!params_flag.empty()) {
                opts.symbolic = false;
                opts.params = parse_params_flag(r, params_flag);
            }
            opts.seed = seed;
            opts.samples = samples;
            require(scope_flag == "all" || scope_flag == "m", "--scope must be all or m");
            opts.scope =
                scope_flag == "all" ? CertifyScope::all_equations : CertifyScope::membership_only;

            auto res = run_pipeline(opts);
            json doc = certificate_to_json(res, opts);
            write_output(doc, out_path.empty() ? "certificate-r" + std::to_string(r) + ".json"
                                               : out_path);
            std::size_t zero = 0;
            for (const auto& st : res.certificate.equations) zero += st.zero;
            std::cout << (res.certificate.pass ? "PASS" : "FAIL") << ": " << zero << "/"
                      << res.certificate.equations.size() << " equations exactly zero on "
                      << res.sample_points.size() << " samples";
            if (res.certificate.negative_control_ran)
                std::cout << "; identity rescaling "
                          << (res.negative_control_failed ? "fails (as expected)"
                                                          : "unexpectedly passes");
            std::cout << "\n";
            return res.certificate.pass ? 0 : 1;
        }

        if (exp->parsed()) {
            require(r == 6 || r == 7, "--r must be 6 or 7");
            if (target == "h6-equations") {
                require(r == 6, "h6-equations requires --r 6");
                write_output(equations_to_json(6, h6_equations()), out_path);
                return 0;
            }
            if (target == "h7-equations") {
                require(r == 7, "h7-equations requires --r 7");
                write_output(equations_to_json(7, h7_equations()), out_path);
                return 0;
            }
            require(target == "g-conditions" || target == "solutions",
                    "--target must be h6-equations, h7-equations, g-conditions or solutions");
            PointConfig cfg;
            if (!params_flag.empty()) {
                cfg = numeric_config(r, parse_params_flag(r, params_flag));
                auto gp = general_position(cfg);
                require(gp.ok, "configuration is not in general position: " + gp.witness);
            } else if (mode == "specialized") {
                SplitMix64 rng(seed);
                cfg = sample_config(r, rng);
            } else {
                cfg = symbolic_config(r);
            }
            auto sections = realize_all_sections(cfg, SectionScaling::classical);
            auto equations = cone_equations(r);
            auto conds = membership_conditions(r, sections, equations);
            if (target == "g-conditions") {
                write_output(conditions_to_json(r, conds), out_path);
                return 0;
            }
            auto asg = solve_system(r, conds);
            write_output(solutions_to_json(asg), out_path);
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const DegeneracyError& e) {
        std::cerr << "degeneracy: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
