#include "symdiff/cli.hpp"

#include "symdiff/boolean_ops.hpp"
#include "symdiff/bounds.hpp"
#include "symdiff/covariogram.hpp"
#include "symdiff/grid_oracle.hpp"
#include "symdiff/matcher.hpp"
#include "symdiff/render.hpp"
#include "symdiff/shape_io.hpp"
#include "symdiff/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace symdiff {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double to_radians(double v, bool deg) { return deg ? v * kPi / 180.0 : v; }

double parse_number(const std::string& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw validation_error("expected a number, got \"" + text + "\"");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) {
        throw validation_error("expected a number, got \"" + text + "\"");
    }
    return v;
}

Point2 parse_pair(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw validation_error("expected \"x,y\", got \"" + text + "\"");
    }
    return {parse_number(text.substr(0, comma)), parse_number(text.substr(comma + 1))};
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void emit(std::ostream& out, const std::string& line) { out << line << "\n"; }

ConvexPolygon require_convex(const PolygonShape& shape, const char* what) {
    ConvexPolygon hull = convex_hull(shape);
    double ha = area(hull);
    if (ha - area(shape) > 1e-9 * std::max(1.0, ha)) {
        throw validation_error(std::string(what) + " requires a convex shape");
    }
    return hull;
}

std::string comb_json(const CombReport& rep) {
    nlohmann::ordered_json j;
    j["teeth"] = rep.k;
    j["shift"] = {rep.shift.x, rep.shift.y};
    j["symdiff"] = rep.symdiff;
    j["projection_quantity"] = rep.projection_quantity;
    j["translation_rhs"] = rep.translation_rhs;
    j["perimeter"] = rep.perimeter;
    return j.dump();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw validation_error("cannot open output file: " + path);
    file << content;
    if (!file) throw validation_error("failed writing output file: " + path);
}

struct VerifyPrinter {
    std::ostream& out;
    int failed_suites = 0;

    void print(const SuiteResult& result) {
        if (result.failures == 0) {
            out << result.name << ": pass (" << result.checks << " checks)\n";
            return;
        }
        ++failed_suites;
        out << result.name << ": FAIL (" << result.failures << "/" << result.checks
            << "): " << result.detail << "\n";
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"planar symmetric-difference bounds, covariograms, and overlap matching"};
    app.set_version_flag("--version", "symdiff 0.1.0");
    app.require_subcommand(1);

    // bound -------------------------------------------------------------
    auto* bound = app.add_subcommand("bound", "certified symmetric-difference bounds");
    bound->require_subcommand(1);

    std::string bt_shape, bt_t;
    auto* bound_translate =
        bound->add_subcommand("translate", "bound for a translated copy");
    bound_translate->add_option("--shape", bt_shape, "shape file")->required();
    bound_translate->add_option("--t", bt_t, "translation x,y")->required();

    std::string br_shape, br_center = "0,0", br_variant = "general";
    double br_theta = 0.0;
    bool br_deg = false;
    auto* bound_rotate = bound->add_subcommand("rotate", "bound for a rotated copy");
    bound_rotate->add_option("--shape", br_shape, "shape file")->required();
    bound_rotate->add_option("--theta", br_theta, "rotation angle")->required();
    bound_rotate->add_flag("--deg", br_deg, "interpret angles in degrees");
    bound_rotate->add_option("--center", br_center, "rotation center x,y");
    bound_rotate->add_option("--variant", br_variant, "general or rectifiable")
        ->check(CLI::IsMember({"general", "rectifiable"}));

    std::string bg_shape, bg_t;
    double bg_theta = 0.0;
    bool bg_deg = false;
    auto* bound_rigid = bound->add_subcommand("rigid", "bound for a rigidly moved copy");
    bound_rigid->add_option("--shape", bg_shape, "shape file")->required();
    bound_rigid->add_option("--theta", bg_theta, "rotation angle about the origin")->required();
    bound_rigid->add_flag("--deg", bg_deg, "interpret angles in degrees");
    bound_rigid->add_option("--t", bg_t, "translation x,y")->required();

    std::string bc_shape, bc_t;
    auto* bound_cavalieri =
        bound->add_subcommand("cavalieri", "swept-area identity for a convex shape");
    bound_cavalieri->add_option("--shape", bc_shape, "convex shape file")->required();
    bound_cavalieri->add_option("--t", bc_t, "translation x,y")->required();

    // symdiff -------------------------------------------------------------
    std::string sd_a, sd_b, sd_origin_a = "0,0", sd_origin_b = "0,0";
    double sd_h = 0.0;
    auto* symdiff_cmd =
        app.add_subcommand("symdiff", "areas of two shapes or two bitmaps");
    // the long-only help flag frees the "h" name for the cell size option
    symdiff_cmd->set_help_flag("--help", "print help");
    symdiff_cmd->add_option("--a", sd_a, "first shape file (.json) or bitmap (.pgm)")
        ->required();
    symdiff_cmd->add_option("--b", sd_b, "second shape file (.json) or bitmap (.pgm)")
        ->required();
    symdiff_cmd->add_option("--h", sd_h, "cell size for bitmap inputs");
    symdiff_cmd->add_option("--origin-a", sd_origin_a, "lattice origin of the first bitmap");
    symdiff_cmd->add_option("--origin-b", sd_origin_b, "lattice origin of the second bitmap");

    // covariogram ----------------------------------------------------------
    std::string cv_shape, cv_t, cv_tmax, cv_u;
    int cv_grid = -1;
    double cv_lambda = 0.0;
    bool cv_derivative = false;
    auto* covariogram_cmd =
        app.add_subcommand("covariogram", "self-overlap under translations");
    covariogram_cmd->add_option("--shape", cv_shape, "shape file")->required();
    covariogram_cmd->add_option("--t", cv_t, "single sample at translation x,y");
    covariogram_cmd->add_option("--grid", cv_grid, "grid half-width in samples");
    covariogram_cmd->add_option("--tmax", cv_tmax, "grid extent x,y");
    covariogram_cmd->add_flag("--derivative", cv_derivative,
                              "one-sided derivative at the origin (convex shapes)");
    covariogram_cmd->add_option("--u", cv_u, "derivative direction x,y");
    covariogram_cmd->add_option("--lambda", cv_lambda, "forward difference step");

    // match -----------------------------------------------------------------
    auto* match_cmd = app.add_subcommand("match", "certified overlap maximization");
    match_cmd->require_subcommand(1);
    std::string mt_a, mt_b;
    double mt_gap = 0.0;
    std::int64_t mt_budget = 1000000;
    int mt_workers = 1;
    auto add_match_options = [&](CLI::App* sub) {
        sub->add_option("--a", mt_a, "moving shape file")->required();
        sub->add_option("--b", mt_b, "fixed shape file")->required();
        sub->add_option("--gap-target", mt_gap,
                        "absolute certificate gap (default 1% of the smaller area)");
        sub->add_option("--budget", mt_budget, "maximum cells expanded");
        sub->add_option("--workers", mt_workers, "worker threads");
    };
    auto* match_translate =
        match_cmd->add_subcommand("translate", "search over translations");
    add_match_options(match_translate);
    auto* match_rigid_cmd =
        match_cmd->add_subcommand("rigid", "search over rotations and translations");
    add_match_options(match_rigid_cmd);

    // landscape ---------------------------------------------------------------
    std::string ls_a, ls_b;
    int ls_theta_samples = 8, ls_t_samples = 11;
    auto* landscape_cmd =
        app.add_subcommand("landscape", "overlap values on a motion grid as CSV");
    landscape_cmd->add_option("--a", ls_a, "moving shape file")->required();
    landscape_cmd->add_option("--b", ls_b, "fixed shape file")->required();
    landscape_cmd->add_option("--theta-samples", ls_theta_samples, "angles per turn");
    landscape_cmd->add_option("--t-samples", ls_t_samples, "samples per translation axis");

    // verify --------------------------------------------------------------------
    std::vector<std::string> vf_suites;
    std::uint64_t vf_seed = 7;
    int vf_workers = 1;
    bool vf_list = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
    verify_cmd->add_option("--suite", vf_suites, "suite name (repeatable; default all)");
    verify_cmd->add_option("--seed", vf_seed, "base seed for the suite streams");
    verify_cmd->add_option("--workers", vf_workers, "worker threads");
    verify_cmd->add_flag("--list", vf_list, "list suite names and exit");

    // comb ------------------------------------------------------------------------
    int cb_teeth = 0;
    auto* comb_cmd =
        app.add_subcommand("comb", "comb construction defeating projection bounds");
    comb_cmd->add_option("--teeth", cb_teeth, "number of teeth")->required();

    // render -------------------------------------------------------------------------
    std::string rd_shape, rd_t, rd_out;
    double rd_theta = 0.0, rd_mask_h = 0.0, rd_width = 640.0;
    bool rd_deg = false;
    int rd_segments = 0;
    auto* render_cmd = app.add_subcommand("render", "draw a shape and a moved copy");
    render_cmd->add_option("--shape", rd_shape, "shape file")->required();
    auto* rd_theta_opt = render_cmd->add_option("--theta", rd_theta, "rotation angle");
    render_cmd->add_flag("--deg", rd_deg, "interpret angles in degrees");
    auto* rd_t_opt = render_cmd->add_option("--t", rd_t, "translation x,y");
    render_cmd->add_option("--segments", rd_segments, "boundary displacement chords");
    render_cmd->add_option("--width", rd_width, "image width in pixels");
    render_cmd->add_option("--mask-h", rd_mask_h, "emit a bitmap at this cell size instead");
    render_cmd->add_option("--out", rd_out, "output file (default stdout)");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("symdiff");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const std::string& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForVersion& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (bound_translate->parsed()) {
            PolygonShape shape = load_shape(bt_shape);
            emit(out, bound_report_json(translation_symdiff_bound(shape, parse_pair(bt_t))));
            return 0;
        }
        if (bound_rotate->parsed()) {
            PolygonShape shape = load_shape(br_shape);
            RotationVariant variant = br_variant == "rectifiable" ? RotationVariant::rectifiable
                                                                  : RotationVariant::general;
            emit(out, bound_report_json(rotation_symdiff_bound(
                          shape, to_radians(br_theta, br_deg), parse_pair(br_center), variant)));
            return 0;
        }
        if (bound_rigid->parsed()) {
            PolygonShape shape = load_shape(bg_shape);
            RigidMotion2 r{to_radians(bg_theta, bg_deg), parse_pair(bg_t)};
            emit(out, bound_report_json(rigid_motion_symdiff_bound(shape, r)));
            return 0;
        }
        if (bound_cavalieri->parsed()) {
            PolygonShape shape = load_shape(bc_shape);
            ConvexPolygon hull = require_convex(shape, "the swept-area identity");
            emit(out, bound_report_json(cavalieri_report(hull, parse_pair(bc_t))));
            return 0;
        }
        if (symdiff_cmd->parsed()) {
            bool pgm_a = has_suffix(sd_a, ".pgm");
            bool pgm_b = has_suffix(sd_b, ".pgm");
            if (pgm_a != pgm_b) {
                throw validation_error("inputs must both be shapes or both be bitmaps");
            }
            nlohmann::ordered_json j;
            if (pgm_a) {
                if (!(sd_h > 0.0)) {
                    throw validation_error("bitmap inputs need --h > 0");
                }
                GridMask a = load_pgm(sd_a, sd_h, parse_pair(sd_origin_a));
                GridMask b = load_pgm(sd_b, sd_h, parse_pair(sd_origin_b));
                double sd = mask_symdiff_area(a, b);
                j["area_a"] = mask_area(a);
                j["area_b"] = mask_area(b);
                j["intersection"] = 0.5 * (mask_area(a) + mask_area(b) - sd);
                j["symdiff"] = sd;
            } else {
                PolygonShape a = load_shape(sd_a);
                PolygonShape b = load_shape(sd_b);
                j["area_a"] = area(a);
                j["area_b"] = area(b);
                j["intersection"] = intersection_area(a, b);
                j["symdiff"] = symdiff_area(a, b);
            }
            emit(out, j.dump());
            return 0;
        }
        if (covariogram_cmd->parsed()) {
            PolygonShape shape = load_shape(cv_shape);
            int modes = (cv_derivative ? 1 : 0) + (cv_grid >= 0 ? 1 : 0) + (!cv_t.empty() ? 1 : 0);
            if (modes != 1) {
                throw validation_error("choose exactly one of --t, --grid, --derivative");
            }
            if (cv_derivative) {
                if (cv_u.empty()) throw validation_error("--derivative needs --u");
                if (!(cv_lambda > 0.0)) throw validation_error("--derivative needs --lambda > 0");
                Point2 u = parse_pair(cv_u);
                nlohmann::ordered_json j;
                j["ux"] = u.x;
                j["uy"] = u.y;
                j["lambda"] = cv_lambda;
                j["quotient"] = directional_derivative(shape, u, cv_lambda);
                emit(out, j.dump());
                return 0;
            }
            if (cv_grid >= 0) {
                if (cv_tmax.empty()) throw validation_error("--grid needs --tmax");
                Point2 tmax = parse_pair(cv_tmax);
                out << "tx,ty,value\n";
                for (const CovariogramSample& sm : covariogram_grid(shape, tmax, cv_grid)) {
                    out << fmt_g(sm.tx) << "," << fmt_g(sm.ty) << "," << fmt_g(sm.value)
                        << "\n";
                }
                return 0;
            }
            Point2 t = parse_pair(cv_t);
            nlohmann::ordered_json j;
            j["tx"] = t.x;
            j["ty"] = t.y;
            j["value"] = covariogram_value(shape, t);
            emit(out, j.dump());
            return 0;
        }
        if (match_translate->parsed() || match_rigid_cmd->parsed()) {
            PolygonShape a = load_shape(mt_a);
            PolygonShape b = load_shape(mt_b);
            if (mt_workers < 1) throw validation_error("--workers must be at least 1");
            if (mt_gap < 0.0) throw validation_error("--gap-target must be non-negative");
            MatchOptions options;
            options.gap_target = mt_gap;
            options.budget = mt_budget;
            options.workers = mt_workers;
            MatchResult res = match_translate->parsed() ? match_translations(a, b, options)
                                                        : match_rigid(a, b, options);
            emit(out, match_result_json(res));
            return 0;
        }
        if (landscape_cmd->parsed()) {
            PolygonShape a = load_shape(ls_a);
            PolygonShape b = load_shape(ls_b);
            out << "theta,tx,ty,F\n";
            for (const LandscapeRow& row : landscape(a, b, ls_theta_samples, ls_t_samples)) {
                out << fmt_g(row.theta) << "," << fmt_g(row.tx) << "," << fmt_g(row.ty) << ","
                    << fmt_g(row.value) << "\n";
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (vf_list) {
                for (const std::string& name : suite_names()) out << name << "\n";
                return 0;
            }
            if (vf_workers < 1) throw validation_error("--workers must be at least 1");
            std::vector<std::string> wanted = vf_suites.empty()
                                                  ? std::vector<std::string>{"all"}
                                                  : vf_suites;
            std::vector<std::string> expanded;
            for (const std::string& name : wanted) {
                if (name == "all") {
                    for (const std::string& n : suite_names()) expanded.push_back(n);
                } else {
                    expanded.push_back(name);
                }
            }
            VerifyPrinter printer{out};
            std::int64_t checks = 0;
            for (const std::string& name : expanded) {
                SuiteResult result = run_suite(name, vf_seed, vf_workers);
                checks += result.checks;
                printer.print(result);
            }
            if (printer.failed_suites == 0) {
                out << "all " << expanded.size() << " suites passed (" << checks
                    << " checks)\n";
                return 0;
            }
            out << printer.failed_suites << " of " << expanded.size() << " suites failed\n";
            return 2;
        }
        if (comb_cmd->parsed()) {
            emit(out, comb_json(comb_demo(cb_teeth)));
            return 0;
        }
        if (render_cmd->parsed()) {
            PolygonShape shape = load_shape(rd_shape);
            std::optional<RigidMotion2> motion;
            if (*rd_theta_opt || *rd_t_opt) {
                RigidMotion2 r{to_radians(rd_theta, rd_deg), {0.0, 0.0}};
                if (*rd_t_opt) r.t = parse_pair(rd_t);
                motion = r;
            }
            if (rd_mask_h > 0.0) {
                PolygonShape target = motion ? apply_motion(shape, *motion) : shape;
                GridMask mask = rasterize(target, rd_mask_h);
                if (rd_out.empty()) {
                    write_pgm(mask, out);
                } else {
                    write_pgm(mask, rd_out);
                }
                return 0;
            }
            RenderOptions options;
            options.motion = motion;
            options.segments = rd_segments;
            options.width = rd_width;
            write_output(rd_out, render_svg(shape, options), out);
            return 0;
        }
        throw validation_error("no subcommand selected");
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const clipping_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace symdiff
