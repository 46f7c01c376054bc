// Command-line front end: load a gauge description file, run one operation,
// print text/CSV/JSON with 12 significant digits. Exit codes: 0 success,
// 1 usage error, 2 validation error, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minkspace/approximation.hpp"
#include "minkspace/gauge_io.hpp"
#include "minkspace/geometry.hpp"

using namespace minkspace;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_vec(const Vec& v, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += fmt(v[i]);
    }
    return out;
}

std::string json_vec(const Vec& v) { return "[" + fmt_vec(v, ",") + "]"; }

Vec parse_vec(const std::string& text) {
    Vec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError("vector entries must be comma-separated numbers: " + text);
        }
    }
    if (out.empty()) throw ValidationError("vector must be non-empty: " + text);
    return out;
}

Mat parse_vec_list(const std::string& text) {
    Mat out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(parse_vec(item));
    if (out.empty()) throw ValidationError("vector list must be non-empty: " + text);
    return out;
}

struct Output {
    std::string path;  // empty = stdout
    std::ostringstream body;
    void flush() {
        if (path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream f(path);
            if (!f) throw ValidationError("cannot open output file " + path);
            f << body.str();
        }
    }
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

void emit_interval(Output& out, const std::string& format, const AlphaInterval& iv) {
    if (format == "csv") {
        out.body << "alpha_lo,alpha_hi\n" << fmt(iv.lo) << "," << fmt(iv.hi) << "\n";
    } else if (format == "json") {
        out.body << "{\"alpha_lo\":" << fmt(iv.lo) << ",\"alpha_hi\":" << fmt(iv.hi);
        if (iv.cert_lo) out.body << ",\"certificate_lo\":" << json_vec(*iv.cert_lo);
        if (iv.cert_hi) out.body << ",\"certificate_hi\":" << json_vec(*iv.cert_hi);
        out.body << "}\n";
    } else {
        out.body << "[" << fmt(iv.lo) << ", " << fmt(iv.hi) << "]\n";
    }
}

std::vector<Vec> direction_fan(std::size_t dim, int samples) {
    if (dim != 2)
        throw ValidationError(
            "the automatic direction fan requires dimension 2; pass --dirs explicitly");
    if (samples < 1) throw ValidationError("samples must be positive");
    std::vector<Vec> dirs;
    for (int i = 0; i < samples; ++i) {
        const double th = 2.0 * std::numbers::pi * i / samples;
        dirs.push_back({std::cos(th), std::sin(th)});
    }
    return dirs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computations in generalized Minkowski spaces (gauges)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string gauge_path, out_path, format = "text";
    std::string xs, ys, vs, us, ps, basis_s, dirs_s;
    double eps = 0.0, tol = 1e-9, bound = 8.0;
    int samples = 0;
    std::uint64_t seed = 20240817ULL;
    bool full_section = false, sufficient = false;

    app.add_option("--gauge", gauge_path, "gauge description file (JSON)");
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--eps", eps, "relaxation parameter (default 0)");
    app.add_option("--tol", tol, "decision tolerance (default 1e-9)");
    app.add_option("--samples", samples, "sample count for sampled operations");
    app.add_option("--seed", seed, "seed for randomized sampling (reserved; all current sampling is deterministic)");

    auto* c_info = app.add_subcommand("info", "describe the gauge file");
    auto* c_eval = app.add_subcommand("eval", "gauge value at a point");
    c_eval->add_option("-v", vs, "point")->required();
    auto* c_polar = app.add_subcommand("polar", "polar gauge value at a functional");
    c_polar->add_option("-v", vs, "functional")->required();
    auto* c_dd = app.add_subcommand("dd", "eps-directional derivative at x toward y");
    c_dd->add_option("-x", xs)->required();
    c_dd->add_option("-y", ys)->required();
    auto* c_supp = app.add_subcommand("subdiff-support",
                                      "support value of the eps-subdifferential at x toward u");
    c_supp->add_option("-x", xs)->required();
    c_supp->add_option("-u", us)->required();
    auto* c_birk = app.add_subcommand("birkhoff", "is x eps-Birkhoff orthogonal to y");
    c_birk->add_option("-x", xs)->required();
    c_birk->add_option("-y", ys)->required();
    auto* c_right = app.add_subcommand("right-interval",
                                       "alphas with x eps-Birkhoff orthogonal to alpha x + y");
    c_right->add_option("-x", xs)->required();
    c_right->add_option("-y", ys)->required();
    auto* c_left = app.add_subcommand("left-interval",
                                      "alphas with alpha x + y eps-Birkhoff orthogonal to x");
    c_left->add_option("-x", xs)->required();
    c_left->add_option("-y", ys)->required();
    auto* c_iso = app.add_subcommand("isosceles", "is y isosceles orthogonal to x");
    c_iso->add_option("-y", ys)->required();
    c_iso->add_option("-x", xs)->required();
    auto* c_isiv = app.add_subcommand("isosceles-interval",
                                      "alphas with alpha x + y isosceles orthogonal to x");
    c_isiv->add_option("-x", xs)->required();
    c_isiv->add_option("-y", ys)->required();
    auto* c_best = app.add_subcommand("bestapprox", "eps-best approximation of y in span(basis)");
    c_best->add_option("--basis", basis_s, "semicolon-separated basis vectors")->required();
    c_best->add_option("-y", ys)->required();
    auto* c_coap = app.add_subcommand("coapprox", "eps-best co-approximation membership of p");
    c_coap->add_option("--basis", basis_s)->required();
    c_coap->add_option("-y", ys)->required();
    c_coap->add_option("-p", ps, "candidate point in the subspace")->required();
    c_coap->add_flag("--sufficient", sufficient,
                     "run the Birkhoff sufficient condition instead of sampled membership");
    auto* c_bise = app.add_subcommand("bisector", "sample the bisector of -x and x");
    c_bise->add_option("-x", xs)->required();
    c_bise->add_option("--dirs", dirs_s, "semicolon-separated directions (default: uniform fan)");
    auto* c_sect = app.add_subcommand("section", "unit-sphere cross section in span{x,y}");
    c_sect->add_option("-x", xs)->required();
    c_sect->add_option("-y", ys)->required();
    c_sect->add_flag("--full", full_section, "do not clip to the half-flat t >= 0");
    auto* c_mrat = app.add_subcommand("m-ratio",
                                      "longest x-parallel boundary segment vs 2 gamma(x)/gamma(y)");
    c_mrat->add_option("-x", xs)->required();
    c_mrat->add_option("-y", ys)->required();
    auto* c_smoo = app.add_subcommand("check-smooth", "smoothness diagnostic");
    auto* c_rotu = app.add_subcommand("check-rotund", "rotundity diagnostic");
    auto* c_reve = app.add_subcommand("reversal-2d", "2D partial orthogonality reversal check");
    auto* c_isrs = app.add_subcommand("isosceles-right-search",
                                      "scan for alphas with x isosceles orthogonal to alpha x + y");
    c_isrs->add_option("-x", xs)->required();
    c_isrs->add_option("-y", ys)->required();
    c_isrs->add_option("--bound", bound, "scan half-width (default 8)");

    for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 1;
    }

    (void)seed;  // reserved: every sampling path below is deterministic

    try {
        if (gauge_path.empty()) throw ValidationError("--gauge FILE is required");
        const Gauge g = load_gauge_file(gauge_path);
        Output out;
        out.path = out_path;

        if (c_info->parsed()) {
            std::string type, count_field;
            std::size_t count = 0;
            switch (g.kind()) {
                case GaugeKind::PolytopeH:
                    type = "polytope_h";
                    count_field = "facets";
                    count = g.normals().size();
                    break;
                case GaugeKind::PolytopeV:
                    type = "polytope_v";
                    count_field = "vertices";
                    count = g.vertices().size();
                    break;
                case GaugeKind::Ellipsoid:
                    type = "ellipsoid";
                    count_field = "axes";
                    count = g.dim();
                    break;
            }
            if (format == "json") {
                out.body << "{\"type\":\"" << type << "\",\"dimension\":" << g.dim()
                         << ",\"scale\":" << fmt(g.scale()) << ",\"" << count_field
                         << "\":" << count << ",\"valid\":true}\n";
            } else {
                out.body << "type: " << type << "\ndimension: " << g.dim()
                         << "\nscale: " << fmt(g.scale()) << "\n"
                         << count_field << ": " << count << "\nvalid: true\n";
            }
        } else if (c_eval->parsed()) {
            out.body << fmt(g.eval(parse_vec(vs))) << "\n";
        } else if (c_polar->parsed()) {
            out.body << fmt(g.polar(parse_vec(vs))) << "\n";
        } else if (c_dd->parsed()) {
            out.body << fmt(directional_derivative(g, parse_vec(xs), parse_vec(ys), eps)) << "\n";
        } else if (c_supp->parsed()) {
            out.body << fmt(subdifferential(g, parse_vec(xs), eps).support(parse_vec(us)))
                     << "\n";
        } else if (c_birk->parsed()) {
            out.body << bool_str(birkhoff_test(g, parse_vec(xs), parse_vec(ys), eps, tol)) << "\n";
        } else if (c_right->parsed()) {
            emit_interval(out, format, right_alpha_interval(g, parse_vec(xs), parse_vec(ys), eps));
        } else if (c_left->parsed()) {
            emit_interval(out, format,
                          left_alpha_interval(g, parse_vec(xs), parse_vec(ys), eps, tol));
        } else if (c_iso->parsed()) {
            out.body << bool_str(isosceles_test(g, parse_vec(ys), parse_vec(xs), tol)) << "\n";
        } else if (c_isiv->parsed()) {
            emit_interval(out, format, isosceles_alpha_interval(g, parse_vec(xs), parse_vec(ys)));
        } else if (c_best->parsed()) {
            const Subspace u(parse_vec_list(basis_s));
            const BestApproxResult r = best_approximation(g, u, parse_vec(ys), eps);
            if (format == "json") {
                out.body << "{\"point\":" << json_vec(r.point) << ",\"value\":" << fmt(r.value)
                         << ",\"certificate\":" << json_vec(r.certificate) << "}\n";
            } else if (format == "csv") {
                for (std::size_t i = 0; i < r.point.size(); ++i) out.body << "point_" << i << ",";
                out.body << "value";
                for (std::size_t i = 0; i < r.certificate.size(); ++i)
                    out.body << ",cert_" << i;
                out.body << "\n" << fmt_vec(r.point, ",") << "," << fmt(r.value) << ","
                         << fmt_vec(r.certificate, ",") << "\n";
            } else {
                out.body << "point: " << fmt_vec(r.point) << "\nvalue: " << fmt(r.value)
                         << "\ncertificate: " << fmt_vec(r.certificate) << "\n";
            }
        } else if (c_coap->parsed()) {
            const Subspace u(parse_vec_list(basis_s));
            const int n = samples > 0 ? samples : 33;
            const bool res =
                sufficient
                    ? coapprox_sufficient_test(g, u, parse_vec(ys), parse_vec(ps), eps,
                                               n, tol)
                    : coapprox_membership_sampled(g, u, parse_vec(ys), eps, parse_vec(ps), n, tol);
            out.body << bool_str(res) << "\n";
        } else if (c_bise->parsed()) {
            const Vec x = parse_vec(xs);
            const std::vector<Vec> dirs = dirs_s.empty()
                                              ? direction_fan(g.dim(), samples > 0 ? samples : 16)
                                              : [&] {
                                                    const Mat m = parse_vec_list(dirs_s);
                                                    return std::vector<Vec>(m.begin(), m.end());
                                                }();
            const auto rows = bisector_sample(g, x, dirs);
            if (format == "json") {
                out.body << "[";
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (i) out.body << ",";
                    const Vec mid = axpy(0.5 * (rows[i].interval.lo + rows[i].interval.hi), x,
                                         rows[i].direction);
                    out.body << "{\"dir\":" << json_vec(rows[i].direction)
                             << ",\"alpha_lo\":" << fmt(rows[i].interval.lo)
                             << ",\"alpha_hi\":" << fmt(rows[i].interval.hi)
                             << ",\"point\":" << json_vec(mid) << "}";
                }
                out.body << "]\n";
            } else {
                for (std::size_t i = 0; i < g.dim(); ++i) out.body << "dir_" << i << ",";
                out.body << "alpha_lo,alpha_hi";
                for (std::size_t i = 0; i < g.dim(); ++i) out.body << ",point_" << i;
                out.body << "\n";
                for (const auto& row : rows) {
                    const Vec mid =
                        axpy(0.5 * (row.interval.lo + row.interval.hi), x, row.direction);
                    out.body << fmt_vec(row.direction, ",") << "," << fmt(row.interval.lo) << ","
                             << fmt(row.interval.hi) << "," << fmt_vec(mid, ",") << "\n";
                }
            }
        } else if (c_sect->parsed()) {
            const Vec x = parse_vec(xs);
            const Vec y = parse_vec(ys);
            const Section2D sec = section2d(g, x, y, !full_section, samples > 0 ? samples : 720);
            out.body << "s,t";
            for (std::size_t i = 0; i < g.dim(); ++i) out.body << ",point_" << i;
            out.body << "\n";
            for (const auto& p : sec.boundary) {
                const Vec v = add(scaled(x, p[0]), scaled(y, p[1]));
                out.body << fmt(p[0]) << "," << fmt(p[1]) << "," << fmt_vec(v, ",") << "\n";
            }
        } else if (c_mrat->parsed()) {
            const Vec x = parse_vec(xs);
            const Vec y = parse_vec(ys);
            const Section2D sec = section2d(g, x, y, true);
            const double m = max_parallel_segment(sec, g, x);
            const double threshold = 2.0 * g.eval(x) / g.eval(y);
            const bool guarantee = unique_bisector_guarantee(g, x, y, tol);
            if (format == "json") {
                out.body << "{\"m\":" << fmt(m) << ",\"threshold\":" << fmt(threshold)
                         << ",\"unique_bisector_point\":" << bool_str(guarantee) << "}\n";
            } else {
                out.body << "M: " << fmt(m) << "\nthreshold: " << fmt(threshold)
                         << "\nunique_bisector_point: " << bool_str(guarantee) << "\n";
            }
        } else if (c_smoo->parsed()) {
            const SmoothnessReport rep = smoothness_check(g);
            out.body << "smooth: " << bool_str(rep.smooth) << "\n";
            if (rep.witness) {
                out.body << "witness_direction: " << fmt_vec(rep.witness->direction) << "\n"
                         << "subgradient_a: " << fmt_vec(rep.witness->subgradient_a) << "\n"
                         << "subgradient_b: " << fmt_vec(rep.witness->subgradient_b) << "\n";
            }
        } else if (c_rotu->parsed()) {
            const RotundityReport rep = rotundity_check(g);
            out.body << "rotund: " << bool_str(rep.rotund) << "\n";
            if (rep.witness) {
                out.body << "witness_p: " << fmt_vec(rep.witness->p) << "\n"
                         << "witness_q: " << fmt_vec(rep.witness->q) << "\n";
            }
        } else if (c_reve->parsed()) {
            const ReversalReport rep = boundary_reversal_check_2d(g, samples > 0 ? samples : 720);
            out.body << "samples: " << rep.samples << "\n"
                     << "max_slack_forward: " << fmt(rep.max_slack_forward) << "\n"
                     << "max_slack_rotated: " << fmt(rep.max_slack_rotated) << "\n"
                     << "max_slack: " << fmt(rep.max_slack()) << "\n";
        } else if (c_isrs->parsed()) {
            const auto roots = isosceles_right_existence_search(
                g, parse_vec(xs), parse_vec(ys), bound, samples > 0 ? samples : 512);
            out.body << "roots: " << roots.size() << "\n";
            for (double r : roots) out.body << fmt(r) << "\n";
        }

        out.flush();
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
