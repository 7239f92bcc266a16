#pragma once

// Text formats: JSON polynomials and curve files, OBJ/CSV meshes,
// classification reports.

#include "convert.hpp"
#include "singular.hpp"
#include "verify.hpp"

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ias {

using json = nlohmann::json;

namespace io_detail {

inline Rational scalar_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
    if (j.is_number_float()) {
        const std::string text = j.dump();
        if (text.find_first_of("eE") != std::string::npos) return Rational(j.get<double>());
        return parse_rational(text);
    }
    throw ParseError("expected a number or \"p/q\" string, got " + j.dump());
}

inline json scalar_to_json(const Rational& x) { return format_rational(x); }
inline json scalar_to_json(double x) { return x; }

} // namespace io_detail

/// [[re, im], ...] with index = power of z.
template <typename T, int S>
json poly_to_json(const Poly<PlaneNumber<T, S>>& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back({io_detail::scalar_to_json(c.re), io_detail::scalar_to_json(c.im)});
    return out;
}

template <typename N>
Poly<N> poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a JSON array of [re, im] pairs");
    std::vector<N> c;
    for (const json& pair : j) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("coefficient must be a [re, im] pair");
        c.push_back(N(io_detail::scalar_from_json(pair[0]), io_detail::scalar_from_json(pair[1])));
    }
    Poly<N> p(std::move(c));
    p.check_degree();
    return p;
}

/// Real univariate polynomial as a plain coefficient array.
inline json real_poly_to_json(const UniPoly<Rational>& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(format_rational(c));
    return out;
}

inline UniPoly<Rational> real_poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("real polynomial must be a JSON array");
    std::vector<Rational> c;
    for (const json& x : j) c.push_back(io_detail::scalar_from_json(x));
    UniPoly<Rational> p(std::move(c));
    p.check_degree();
    return p;
}

/// Curve file contents. `perturb` names surface components to negate
/// (negative controls).
struct CurveFile {
    AnyCurve curve;
    std::vector<std::string> perturb;
};

inline json curve_to_json(const AnyCurve& c) {
    return std::visit(
        [](const auto& x) {
            return json{{"signature", to_string(x.signature)}, {"F", poly_to_json(x.F)}, {"G", poly_to_json(x.G)}};
        },
        c);
}

inline CurveFile curve_file_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("curve file must be a JSON object");
    for (const char* key : {"signature", "F", "G"})
        if (!j.contains(key)) throw ParseError(std::string("curve file is missing \"") + key + "\"");
    if (!j["signature"].is_string()) throw ParseError("\"signature\" must be a string");
    const std::string sig = j["signature"].get<std::string>();
    CurveFile out;
    if (sig == "indefinite")
        out.curve = ParaCurve<Rational>{poly_from_json<ParaComplex<Rational>>(j["F"]),
                                        poly_from_json<ParaComplex<Rational>>(j["G"])};
    else if (sig == "lsc")
        out.curve =
            HoloCurve<Rational>{poly_from_json<Complex<Rational>>(j["F"]), poly_from_json<Complex<Rational>>(j["G"])};
    else
        throw ParseError("signature must be \"indefinite\" or \"lsc\"");
    if (j.contains("perturb")) {
        if (!j["perturb"].is_array()) throw ParseError("\"perturb\" must be an array of component names");
        for (const json& n : j["perturb"]) {
            if (!n.is_string()) throw ParseError("\"perturb\" entries must be strings");
            const std::string name = n.get<std::string>();
            if (std::find(std::begin(kComponentNames), std::end(kComponentNames), name) == std::end(kComponentNames))
                throw ParseError("unknown component \"" + name + "\" in \"perturb\"");
            out.perturb.push_back(name);
        }
    }
    return out;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

inline CurveFile read_curve_file(const std::string& path) {
    try {
        return curve_file_from_json(read_json_file(path));
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

/// Exact surface components for a curve file, with perturbations applied.
inline SurfaceComponents<Rational> components_of(const CurveFile& f) {
    auto s = std::visit([](const auto& c) { return surface_components(c); }, f.curve);
    for (const auto& name : f.perturb) negate_component(s, name);
    return s;
}

inline PolySurface surface_of(const CurveFile& f) { return PolySurface::generated(components_of(f)); }

/// Wavefront OBJ: one vertex per grid node, quads between neighbours.
inline void write_obj(std::ostream& os, const SurfaceGrid& g) {
    for (const auto& s : g.samples)
        os << "v " << format_double(s.position[0]) << ' ' << format_double(s.position[1]) << ' '
           << format_double(s.position[2]) << '\n';
    for (int j = 0; j + 1 < g.nv; ++j)
        for (int i = 0; i + 1 < g.nu; ++i) {
            const int a = j * g.nu + i + 1; // OBJ indices are 1-based
            os << "f " << a << ' ' << a + 1 << ' ' << a + 1 + g.nu << ' ' << a + g.nu << '\n';
        }
}

inline void write_csv(std::ostream& os, const SurfaceGrid& g) {
    os << "u,v,x1,x2,phi,n1,n2,lambda\n";
    for (std::size_t k = 0; k < g.samples.size(); ++k) {
        const auto& s = g.samples[k];
        os << format_double(s.domain_point.u) << ',' << format_double(s.domain_point.v) << ','
           << format_double(s.position[0]) << ',' << format_double(s.position[1]) << ','
           << format_double(s.position[2]) << ',' << format_double(s.conormal[0]) << ','
           << format_double(s.conormal[1]) << ',' << format_double(g.density[k]) << '\n';
    }
}

inline json domain_to_json(const Domain& d) { return json::array({d.u0, d.u1, d.v0, d.v1}); }

inline json evidence_to_json(const Evidence& e) {
    auto opt = [](const std::optional<double>& x) { return x ? json(*x) : json(nullptr); };
    return {{"lambda", e.lambda},      {"grad_norm", e.grad_norm}, {"det_ge", opt(e.det_ge)},
            {"ddet_ge", opt(e.ddet_ge)}, {"psi0", opt(e.psi0)},    {"dpsi0", opt(e.dpsi0)},
            {"lift_rank", e.lift_rank}, {"degenerate", e.degenerate}};
}

struct ClassifiedPoint {
    Point2 point;
    SingularClass cls;
    std::optional<std::string> error; // TraceRequired or similar
    std::optional<Point2> requested;  // probe location before snapping
};

struct ClassificationReport {
    json curve;
    Domain domain;
    std::vector<SingularCurve> curves;
    std::vector<ClassifiedPoint> points;
    std::vector<ClassifiedPoint> probes;
    std::vector<Point2> swallowtails;
};

inline json classified_to_json(const ClassifiedPoint& c) {
    json j{{"u", c.point.u}, {"v", c.point.v}};
    if (c.error) {
        j["class"] = nullptr;
        j["error"] = *c.error;
    } else {
        j["class"] = to_string(c.cls.tag);
    }
    j["evidence"] = evidence_to_json(c.cls.evidence);
    if (c.requested) j["requested"] = {c.requested->u, c.requested->v};
    return j;
}

inline json report_to_json(const ClassificationReport& r) {
    json curves = json::array();
    for (const auto& c : r.curves) {
        json pts = json::array();
        for (const auto& p : c.points) pts.push_back({p.u, p.v});
        curves.push_back(std::move(pts));
    }
    json points = json::array(), probes = json::array(), st = json::array();
    for (const auto& p : r.points) points.push_back(classified_to_json(p));
    for (const auto& p : r.probes) probes.push_back(classified_to_json(p));
    for (const auto& p : r.swallowtails) st.push_back({p.u, p.v});
    return {{"curve", r.curve}, {"domain", domain_to_json(r.domain)}, {"singular_curves", std::move(curves)},
            {"points", std::move(points)}, {"probes", std::move(probes)}, {"swallowtails", std::move(st)}};
}

inline json residual_to_json(const ResidualReport& r) {
    return {{"name", r.name},         {"max_abs", r.max_abs},     {"mean_abs", r.mean_abs},
            {"points_checked", r.points_checked}, {"tolerance", r.tolerance}, {"pass", r.pass}};
}

} // namespace ias
