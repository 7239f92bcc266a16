// iasph: synthesize, classify, verify and convert improper affine spheres
// given by polynomial curve pairs.
//
// Exit codes: 0 ok, 1 verification failure, 2 input parse error, 3 invalid arguments.

#include "ias/ias.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParseError = 2, kInvalidArgs = 3 };

class ArgError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_numbers(const std::string& text, std::size_t count, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double x = 0;
        const char* b = item.data();
        const char* e = b + item.size();
        while (b < e && *b == ' ') ++b;
        auto [ptr, ec] = std::from_chars(b, e, x);
        if (ec != std::errc{} || ptr != e) throw ArgError(std::string("bad number in ") + what + ": '" + item + "'");
        out.push_back(x);
    }
    if (out.size() != count)
        throw ArgError(std::string(what) + " needs " + std::to_string(count) + " comma-separated numbers");
    return out;
}

ias::Domain parse_domain(const std::string& text) {
    const auto v = parse_numbers(text, 4, "--domain");
    ias::Domain d{v[0], v[1], v[2], v[3]};
    d.validate();
    return d;
}

std::pair<int, int> parse_res(const std::string& text) {
    const auto v = parse_numbers(text, 2, "--res");
    for (double x : v)
        if (x != static_cast<int>(x) || x < 2 || x > 4096) throw ArgError("--res values must be integers in [2, 4096]");
    return {static_cast<int>(v[0]), static_cast<int>(v[1])};
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-")
        std::cout << text;
    else
        ias::write_text_file(out, text);
}

struct Common {
    std::string curve, domain = "-1,1,-1,1", res = "256,256", out;
};

int cmd_synth(const Common& c, std::string format) {
    const auto file = ias::read_curve_file(c.curve);
    const auto d = parse_domain(c.domain);
    const auto [nu, nv] = parse_res(c.res);
    if (format.empty()) format = c.out.size() > 4 && c.out.substr(c.out.size() - 4) == ".csv" ? "csv" : "obj";
    if (format != "obj" && format != "csv") throw ArgError("synth --format must be obj or csv");
    const auto grid = ias::sample_grid(ias::surface_of(file), d, nu, nv);
    std::ostringstream os;
    if (format == "obj")
        ias::write_obj(os, grid);
    else
        ias::write_csv(os, grid);
    emit(c.out, os.str());
    return kOk;
}

int cmd_classify(const Common& c, const std::vector<std::string>& probe_args) {
    const auto file = ias::read_curve_file(c.curve);
    const auto d = parse_domain(c.domain);
    const auto [nu, nv] = parse_res(c.res);
    std::vector<ias::Point2> probes;
    for (const auto& p : probe_args) {
        const auto v = parse_numbers(p, 2, "--probe");
        probes.push_back({v[0], v[1]});
    }
    const auto m = ias::surface_of(file);
    const auto tol = ias::Tolerances::for_scale(ias::curve_scale(file.curve, d));
    auto report = ias::run_classification(m, d, nu, nv, tol, probes);
    report.curve = ias::curve_to_json(file.curve);
    emit(c.out, ias::report_to_json(report).dump(2) + "\n");
    return kOk;
}

int cmd_verify(const Common& c, const std::string& suites_arg) {
    const auto file = ias::read_curve_file(c.curve);
    const auto d = parse_domain(c.domain);
    const auto [nu, nv] = parse_res(c.res);
    const auto suites = suites_arg.empty() ? ias::suite_names() : split(suites_arg);
    for (const auto& s : suites)
        if (std::find(ias::suite_names().begin(), ias::suite_names().end(), s) == ias::suite_names().end())
            throw ArgError("unknown suite '" + s + "'");
    const auto m = ias::surface_of(file);
    const auto tol = ias::Tolerances::for_scale(ias::curve_scale(file.curve, d));
    const auto reports = ias::run_suites(m, d, tol, suites, nu, nv);
    ias::json arr = ias::json::array();
    bool ok = true;
    for (const auto& r : reports) {
        arr.push_back(ias::residual_to_json(r));
        if (!r.pass) {
            ok = false;
            std::cerr << "suite " << r.name << " failed: max residual " << r.max_abs << " > " << r.tolerance << "\n";
        }
    }
    emit(c.out, arr.dump(2) + "\n");
    return ok ? kOk : kVerifyFailed;
}

ias::ParaPoly<ias::Rational> para_poly_field(const ias::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ias::ParseError(std::string("input is missing \"") + key + "\"");
    return ias::poly_from_json<ias::ParaComplex<ias::Rational>>(j[key]);
}

int cmd_convert(const std::string& mode, const std::string& in, const std::string& out) {
    const ias::json j = ias::read_json_file(in);
    ias::json result;
    try {
        if (mode == "cls") {
            result = ias::curve_to_json(ias::cls_to_curve(para_poly_field(j, "f")));
        } else if (mode == "cortes") {
            if (!j.is_object() || !j.contains("f")) throw ias::ParseError("input is missing \"f\"");
            result = ias::curve_to_json(ias::cortes_to_holo(ias::poly_from_json<ias::Complex<ias::Rational>>(j["f"])));
        } else if (mode == "blaschke") {
            const auto file = ias::curve_file_from_json(j);
            const auto* c = std::get_if<ias::ParaCurve<ias::Rational>>(&file.curve);
            if (!c) throw ias::ParseError("blaschke conversion needs an indefinite curve");
            const auto b = ias::curve_to_blaschke(*c);
            result = {{"U1", ias::real_poly_to_json(b.U1)},
                      {"V1", ias::real_poly_to_json(b.V1)},
                      {"U2", ias::real_poly_to_json(b.U2)},
                      {"V2", ias::real_poly_to_json(b.V2)}};
        } else if (mode == "blaschke-inverse") {
            ias::BlaschkeData<ias::Rational> b;
            for (auto [key, dst] : {std::pair{"U1", &b.U1}, {"V1", &b.V1}, {"U2", &b.U2}, {"V2", &b.V2}}) {
                if (!j.is_object() || !j.contains(key)) throw ias::ParseError(std::string("input is missing \"") + key + "\"");
                *dst = ias::real_poly_from_json(j[key]);
            }
            result = ias::curve_to_json(ias::blaschke_to_curve(b));
        } else {
            throw ArgError("unknown --mode '" + mode + "'");
        }
    } catch (const ias::json::exception& e) {
        throw ias::ParseError(in + ": " + e.what());
    }
    emit(out, result.dump(2) + "\n");
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Improper affine spheres from polynomial curve pairs"};
    app.require_subcommand(1);

    Common common;
    std::string format, suites, mode, in;
    std::vector<std::string> probes;

    auto add_common = [&](CLI::App* sub, bool with_res) {
        sub->add_option("--curve", common.curve, "Curve file (JSON)")->required();
        sub->add_option("--domain", common.domain, "u0,u1,v0,v1");
        if (with_res) sub->add_option("--res", common.res, "NU,NV grid resolution");
        sub->add_option("--out", common.out, "Output file (default stdout)");
    };

    auto* synth = app.add_subcommand("synth", "Sample the surface to OBJ or CSV");
    add_common(synth, true);
    synth->add_option("--format", format, "obj|csv");

    auto* classify = app.add_subcommand("classify", "Trace and classify the singular set");
    add_common(classify, true);
    classify->add_option("--probe", probes, "Extra point u,v (repeatable)");

    auto* verify = app.add_subcommand("verify", "Run residual suites");
    add_common(verify, true);
    verify->add_option("--suites", suites, "Comma list from duality,two_form,conformal,monge_ampere,lift,ccr");
    verify->add_option("--format", format, "json");

    auto* convert = app.add_subcommand("convert", "Convert between parametrizations");
    convert->add_option("--mode", mode, "cls|cortes|blaschke|blaschke-inverse")->required();
    convert->add_option("--in", in, "Input JSON")->required();
    convert->add_option("--out", common.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalidArgs;
    }

    try {
        if (*synth) return cmd_synth(common, format);
        if (*classify) return cmd_classify(common, probes);
        if (*verify) {
            if (!format.empty() && format != "json") throw ArgError("verify --format must be json");
            return cmd_verify(common, suites);
        }
        return cmd_convert(mode, in, common.out);
    } catch (const ias::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const ias::DegreeOverflow& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const ias::ClosednessViolation& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const ias::InvalidDomain& e) {
        std::cerr << "invalid domain: " << e.what() << "\n";
        return kInvalidArgs;
    } catch (const ArgError& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kInvalidArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidArgs;
    }
}
