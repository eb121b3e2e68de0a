// matfun: functions of square complex matrices via interpolation at the
// spectrum. JSON in, JSON out; see README.md for the file formats.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "matfun/errors.hpp"
#include "matfun/json_io.hpp"
#include "matfun/tolerances.hpp"

namespace {

using matfun::Json;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

matfun::FunctionSpec parse_function_name(const std::string& name) {
    if (name == "exp") return matfun::FunctionSpec::exp();
    if (name == "sin") return matfun::FunctionSpec::sin();
    if (name == "cos") return matfun::FunctionSpec::cos();
    if (name == "reciprocal") return matfun::FunctionSpec::reciprocal();
    if (name.rfind("power:", 0) == 0) {
        try {
            return matfun::FunctionSpec::power(std::stoi(name.substr(6)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad power exponent in '" + name + "'");
        }
    }
    throw std::invalid_argument("unknown function '" + name +
                                "' (expected exp, sin, cos, reciprocal or power:K)");
}

std::optional<matfun::SpectrumEstimate> load_spectrum(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return matfun::spectrum_from_json(load_json(path));
}

void emit(const Json& result, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << result.dump() << "\n";
    } else {
        std::ofstream out(output_path);
        if (!out) throw std::invalid_argument("cannot write '" + output_path + "'");
        out << result.dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix functions via interpolation at the spectrum"};
    app.require_subcommand(1);

    std::string output_path;
    double tol_factor = 0.0;
    app.add_option("--output", output_path, "write result JSON to a file instead of stdout");
    app.add_option("--tol", tol_factor, "scale all internal tolerances by this factor");

    std::string matrix_path, spec_path, spectrum_path, ode_path, function_name;
    std::vector<std::string> rational_paths, y0_strings;
    double t_value = 1.0, x0 = 0.0, deriv_sup = -1.0;

    auto* cmd_interp = app.add_subcommand("interp", "Hermite interpolation polynomial from a spec");
    cmd_interp->add_option("--spec", spec_path, "interpolation spec JSON")->required();

    auto* cmd_apply = app.add_subcommand("apply", "evaluate a function at a matrix");
    cmd_apply->add_option("--matrix", matrix_path, "matrix JSON")->required();
    cmd_apply->add_option("--function", function_name, "exp|sin|cos|reciprocal|power:K");
    cmd_apply->add_option("--rational", rational_paths, "numerator,denominator polynomial JSON files")
        ->delimiter(',')
        ->expected(1, 2);
    cmd_apply->add_option("--spectrum", spectrum_path, "spectrum JSON (bypass root finding)");

    auto* cmd_inverse = app.add_subcommand("inverse", "matrix inverse via interpolation of 1/x");
    cmd_inverse->add_option("--matrix", matrix_path, "matrix JSON")->required();
    cmd_inverse->add_option("--spectrum", spectrum_path, "spectrum JSON (bypass root finding)");

    auto* cmd_exp = app.add_subcommand("exp", "matrix exponential exp(tA)");
    cmd_exp->add_option("--matrix", matrix_path, "matrix JSON")->required();
    cmd_exp->add_option("--t", t_value, "time parameter (default 1)");
    cmd_exp->add_option("--spectrum", spectrum_path, "spectrum JSON (bypass root finding)");

    auto* cmd_resolvents = app.add_subcommand("resolvents", "principal Lagrange resolvents of A");
    cmd_resolvents->add_option("--matrix", matrix_path, "matrix JSON")->required();
    cmd_resolvents->add_option("--spectrum", spectrum_path, "spectrum JSON (bypass root finding)");

    auto* cmd_ode = app.add_subcommand("solve-ode", "solution basis or IVP for y' = Ay");
    cmd_ode->add_option("--ode", ode_path, "ODE JSON")->required();
    cmd_ode->add_option("--y0", y0_strings, "initial state, highest derivative first")
        ->delimiter(',');
    cmd_ode->add_option("--t", t_value, "evaluation time (default 1)");

    auto* cmd_jordan = app.add_subcommand("jordan", "Jordan normal form A = P J P^-1");
    cmd_jordan->add_option("--matrix", matrix_path, "matrix JSON")->required();

    auto* cmd_spectrum = app.add_subcommand("spectrum", "eigenvalues with multiplicities");
    cmd_spectrum->add_option("--matrix", matrix_path, "matrix JSON")->required();

    auto* cmd_remainder = app.add_subcommand("remainder-check", "Lagrange remainder bound at x0");
    cmd_remainder->add_option("--spec", spec_path, "JSON with \"function\" and \"nodes\"")->required();
    cmd_remainder->add_option("--x0", x0, "evaluation point")->required();
    cmd_remainder->add_option("--deriv-sup", deriv_sup,
                              "sup of |f^(n)| over the hull (sampled when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (const char* env = std::getenv("MATFUN_TOL"); env && tol_factor == 0.0) {
            try {
                tol_factor = std::stod(env);
            } catch (const std::exception&) {
                throw std::invalid_argument("MATFUN_TOL is not a number");
            }
        }
        if (tol_factor < 0.0) throw std::invalid_argument("tolerance factor must be positive");
        if (tol_factor > 0.0) matfun::scale_tolerances(tol_factor);

        Json result;
        if (app.got_subcommand(cmd_interp)) {
            const auto spec = matfun::interpolation_spec_from_json(load_json(spec_path));
            result = Json{{"coefficients", matfun::to_json(matfun::hermite_solve(spec))}};
        } else if (app.got_subcommand(cmd_apply)) {
            const auto a = matfun::matrix_from_json(load_json(matrix_path));
            std::optional<matfun::FunctionSpec> f;
            if (!function_name.empty()) f = parse_function_name(function_name);
            if (!rational_paths.empty()) {
                if (f) throw std::invalid_argument("give either --function or --rational, not both");
                if (rational_paths.size() != 2)
                    throw std::invalid_argument("--rational needs NUM,DEN (two files)");
                f = matfun::FunctionSpec::rational(
                    matfun::polynomial_from_json(load_json(rational_paths[0])),
                    matfun::polynomial_from_json(load_json(rational_paths[1])));
            }
            if (!f) throw std::invalid_argument("apply needs --function or --rational");
            result = Json{{"result", matfun::to_json(matfun::apply_function(
                                         *f, a, load_spectrum(spectrum_path)))}};
        } else if (app.got_subcommand(cmd_inverse)) {
            const auto a = matfun::matrix_from_json(load_json(matrix_path));
            const auto inv = matfun::inverse_via_interp(a, load_spectrum(spectrum_path));
            result = Json{{"inverse", matfun::to_json(inv.inverse)}, {"residual", inv.residual}};
        } else if (app.got_subcommand(cmd_exp)) {
            const auto a = matfun::matrix_from_json(load_json(matrix_path));
            result = Json{{"exp", matfun::to_json(matfun::matrix_exp(
                                      a, matfun::Complex{t_value}, load_spectrum(spectrum_path)))}};
        } else if (app.got_subcommand(cmd_resolvents)) {
            const auto a = matfun::matrix_from_json(load_json(matrix_path));
            const auto decomp = matfun::resolvents_at_matrix(a, load_spectrum(spectrum_path));
            result = matfun::to_json(decomp, matfun::verify_resolvent_identities(decomp, a));
        } else if (app.got_subcommand(cmd_ode)) {
            const auto ode = matfun::ode_from_json(load_json(ode_path));
            if (y0_strings.empty()) {
                result = matfun::to_json(matfun::general_solution_basis(ode));
            } else {
                std::vector<matfun::Complex> y0;
                for (const auto& s : y0_strings) y0.push_back(matfun::parse_complex(s));
                result = Json{{"y", matfun::complex_vector_to_json(
                                        matfun::ivp_solve(ode, y0, t_value))},
                              {"t", t_value}};
            }
        } else if (app.got_subcommand(cmd_jordan)) {
            result = matfun::to_json(
                matfun::jordan_form(matfun::matrix_from_json(load_json(matrix_path))));
        } else if (app.got_subcommand(cmd_spectrum)) {
            result = matfun::to_json(
                matfun::spectrum_of(matfun::matrix_from_json(load_json(matrix_path))));
        } else if (app.got_subcommand(cmd_remainder)) {
            const Json j = load_json(spec_path);
            const auto f = matfun::function_spec_from_json(j.at("function"));
            matfun::NodeList nodes;
            for (const auto& entry : j.at("nodes"))
                nodes.push_back({matfun::parse_complex(entry.at("lambda").get<std::string>()),
                                 entry.at("multiplicity").get<unsigned>()});
            const double sup = deriv_sup >= 0.0
                                   ? deriv_sup
                                   : matfun::remainder_derivative_sup(f, nodes, x0);
            result = matfun::to_json(
                matfun::remainder_bound_check(f, nodes, matfun::Complex{x0}, sup));
        }

        emit(result, output_path);
        return 0;
    } catch (const matfun::Error& e) {
        std::cout << Json{{"error", {{"kind", matfun::to_string(e.kind())},
                                     {"detail", e.detail()}}}}
                         .dump()
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << Json{{"error", {{"kind", "MalformedInput"}, {"detail", e.what()}}}}.dump()
                  << "\n";
        return 1;
    }
}
