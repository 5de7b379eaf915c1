// coamoeba-lab: tropical/coamoeba anatomy of subvarieties of complex and
// nonarchimedean tori, with k-convexity certification.
//
// Exit codes: 0 success, 2 input error, 3 math-precondition failure,
// 4 certification counterexample found.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coamoeba/json_io.hpp"
#include "coamoeba/render.hpp"

using namespace coamoeba;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InputError("cannot read " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

Json load_json(const std::string& path) {
    try {
        return Json::parse(slurp(path));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad JSON in ") + path + ": " + e.what());
    }
}

void emit(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

Box parse_box(const std::string& text, int n) {
    // "lo1,lo2,...:hi1,hi2,..."
    auto colon = text.find(':');
    if (colon == std::string::npos) throw InputError("box must be lo,..,lo:hi,..,hi");
    auto split = [](const std::string& s) {
        RatVec v;
        std::istringstream is(s);
        std::string cell;
        while (std::getline(is, cell, ',')) v.push_back(rat_parse(cell));
        return v;
    };
    Box b;
    b.lo = split(text.substr(0, colon));
    b.hi = split(text.substr(colon + 1));
    if (static_cast<int>(b.lo.size()) != n || static_cast<int>(b.hi.size()) != n)
        throw InputError("box dimension mismatch");
    return b;
}

Box default_box(int n) {
    Box b;
    b.lo.assign(n, Rat(-1));
    b.hi.assign(n, Rat(2));
    return b;
}

Box unit_domains_box(int n, int domains) {
    Box b;
    b.lo.assign(n, Rat(0));
    b.hi.assign(n, Rat(std::max(1, domains)));
    return b;
}

SampleParams sample_params_from(int res) {
    SampleParams sp;
    if (res > 0) {
        sp.angular_steps = res;
        sp.radial_steps = std::max(9, res / 6) | 1;
    }
    return sp;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coamoeba-lab: coamoebas, shells, phase limit sets, and "
                 "higher-convexity certificates"};
    app.require_subcommand(1);

    std::string input, output, box_text, text_poly, arrangement_path, plane_path,
        cycle_path, set_path, spec_path, png_path;
    int n_arg = 0, res = 0, k_arg = 1, trials = 100, m_cover = 2, oracle_res = 48;
    std::uint64_t seed = 42;
    double dilation = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", output, "output path (default: stdout)");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--res", res, "sampling/oracle resolution");
        sub->add_option("--box", box_text, "box lo,..:hi,..");
    };

    auto* parse_cmd = app.add_subcommand("parse", "parse a polynomial or system");
    parse_cmd->add_option("--input", input, "system JSON path");
    parse_cmd->add_option("--text", text_poly, "polynomial text");
    parse_cmd->add_option("--n", n_arg, "ambient dimension for --text");
    add_common(parse_cmd);

    auto* trop_cmd = app.add_subcommand("tropical", "tropical complex/fan");
    trop_cmd->add_option("--input", input, "system JSON")->required();
    add_common(trop_cmd);

    auto* shell_cmd = app.add_subcommand("shell", "exact shell cosets");
    shell_cmd->add_option("--input", input, "system JSON")->required();
    add_common(shell_cmd);

    auto* plset_cmd = app.add_subcommand("plset", "phase limit set strata");
    plset_cmd->add_option("--input", input, "system JSON")->required();
    add_common(plset_cmd);

    auto* sample_cmd = app.add_subcommand("sample", "sample the coamoeba");
    sample_cmd->add_option("--input", input, "system JSON")->required();
    add_common(sample_cmd);

    auto* amoeba_cmd = app.add_subcommand("amoeba-sample", "sample the amoeba (debug)");
    amoeba_cmd->add_option("--input", input, "system JSON")->required();
    add_common(amoeba_cmd);

    auto* lift_cmd = app.add_subcommand("lift", "lift a shell over a box");
    lift_cmd->add_option("--input", input, "shell JSON")->required();
    add_common(lift_cmd);

    auto* certify_cmd = app.add_subcommand("certify", "k-convexity certificates");
    certify_cmd->add_option("--arrangement", arrangement_path, "arrangement JSON")
        ->required();
    certify_cmd->add_option("--plane", plane_path, "affine plane JSON")->required();
    certify_cmd->add_option("--k", k_arg, "degree k (0 or 1)");
    certify_cmd->add_option("--trials", trials, "trial cycles");
    add_common(certify_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "cubical homology oracle");
    oracle_cmd->add_option("--set", set_path, "arrangement JSON")->required();
    oracle_cmd->add_option("--cycle", cycle_path, "cycle JSON (degree 1)");
    oracle_cmd->add_option("--dilation", dilation, "rasterization dilation");
    add_common(oracle_cmd);

    auto* na_cmd = app.add_subcommand("na-amoeba", "nonarchimedean amoeba");
    na_cmd->add_option("--input", input, "K-system JSON")->required();
    add_common(na_cmd);

    auto* nacoa_cmd = app.add_subcommand("na-coamoeba", "nonarchimedean coamoeba");
    nacoa_cmd->add_option("--input", input, "K-system JSON")->required();
    add_common(nacoa_cmd);

    auto* render_cmd = app.add_subcommand("render", "emit an SVG/PNG figure");
    render_cmd->add_option("--spec", spec_path, "render spec JSON")->required();
    render_cmd->add_option("--png", png_path, "also write a PNG");
    add_common(render_cmd);

    auto* cover_cmd = app.add_subcommand("cover", "pullback under z -> z^m");
    cover_cmd->add_option("--input", input, "system JSON")->required();
    cover_cmd->add_option("--m", m_cover, "cover degree");
    add_common(cover_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*parse_cmd) {
            VarietySpec spec;
            if (!text_poly.empty()) {
                if (n_arg < 1) throw InputError("--text needs --n");
                auto f = parse_polynomial(text_poly, n_arg);
                Json j;
                j["canonical"] = print_polynomial(f);
                j["polynomial"] = to_json(f);
                emit(j, output);
            } else if (!input.empty()) {
                spec = spec_from_json(load_json(input));
                Json j = to_json(spec);
                Json cs = Json::array();
                for (const auto& f : spec.polynomials)
                    cs.push_back(print_polynomial(f));
                j["canonical"] = cs;
                emit(j, output);
            } else {
                throw InputError("parse needs --text or --input");
            }
        } else if (*trop_cmd) {
            VarietySpec spec = spec_from_json(load_json(input));
            Json j;
            if (spec.input_class == InputClass::Hypersurface)
                j["complex"] = to_json(tropical_hypersurface(spec.polynomials[0]));
            else if (spec.input_class == InputClass::Line)
                j["complex"] = to_json(tropical_line(spec));
            j["fan"] = to_json(tropical_fan(spec));
            emit(j, output);
        } else if (*shell_cmd) {
            VarietySpec spec = spec_from_json(load_json(input));
            emit(to_json(shell(spec)), output);
        } else if (*plset_cmd) {
            VarietySpec spec = spec_from_json(load_json(input));
            emit(to_json(phase_limit_set(spec, sample_params_from(res))), output);
        } else if (*sample_cmd) {
            VarietySpec spec = spec_from_json(load_json(input));
            PointCloud cloud = sample_coamoeba(spec, sample_params_from(res));
            if (output.empty())
                std::cout << cloud_to_csv(cloud);
            else
                write_file(output, cloud_to_csv(cloud));
        } else if (*amoeba_cmd) {
            VarietySpec spec = spec_from_json(load_json(input));
            auto logs = sample_amoeba(spec, sample_params_from(res));
            std::ostringstream os;
            os.precision(12);
            for (const auto& p : logs) {
                for (size_t i = 0; i < p.size(); ++i)
                    os << (i ? "," : "") << p[i];
                os << "\n";
            }
            if (output.empty())
                std::cout << os.str();
            else
                write_file(output, os.str());
        } else if (*lift_cmd) {
            Json j = load_json(input);
            Shell sh = shell_from_json(j);
            Box box = box_text.empty() ? default_box(sh.ambient)
                                       : parse_box(box_text, sh.ambient);
            LiftedArrangement arr = lifted(sh, box);
            Json out = to_json(arr);
            Json lifts = Json::array();
            for (const auto& m : enumerate_in_box(arr, box))
                lifts.push_back(to_json(m));
            out["lifts"] = lifts;
            emit(out, output);
        } else if (*certify_cmd) {
            LiftedArrangement arr = arrangement_from_json(load_json(arrangement_path));
            AffineSubspace plane = affine_from_json(load_json(plane_path));
            if (!box_text.empty()) arr.box = parse_box(box_text, arr.ambient);
            CertifyParams params;
            params.trials = trials;
            params.seed = seed;
            if (res > 0) params.oracle_resolution = res;
            CertifyOutcome out = certify_k_convexity(arr, plane, k_arg, params);
            emit(to_json(out), output);
            if (!out.counterexamples.empty()) return 4;
        } else if (*oracle_cmd) {
            LiftedArrangement arr = arrangement_from_json(load_json(set_path));
            Box box = box_text.empty() ? arr.box : parse_box(box_text, arr.ambient);
            auto members = enumerate_in_box(arr, box);
            int resolution = res > 0 ? res : 48;
            CubicalComplex cx =
                rasterize_complement(members, {}, box, resolution, dilation);
            Json j;
            auto b = betti_numbers(cx);
            j["b0"] = b.b0;
            j["b1"] = b.b1;
            j["boundary_squared_zero"] = boundary_squared_is_zero(cx);
            if (!cycle_path.empty()) {
                Chain c = chain_from_json(load_json(cycle_path));
                j["class_is_zero"] = class_is_zero(cx, c);
            }
            emit(j, output);
        } else if (*na_cmd) {
            KVarietySpec spec = kspec_from_json(load_json(input));
            emit(to_json(na_amoeba(spec)), output);
        } else if (*nacoa_cmd) {
            KVarietySpec spec = kspec_from_json(load_json(input));
            emit(to_json(na_coamoeba(spec, sample_params_from(res))), output);
        } else if (*render_cmd) {
            Json j = load_json(spec_path);
            RenderSpec rs;
            if (j.contains("projection")) {
                const auto& pj = j["projection"];
                std::string kind = pj.value("type", "coords-2d");
                if (kind == "coords-3d-orthographic") {
                    rs.projection.kind = Projection::Kind::Coords3DOrthographic;
                    rs.projection.azimuth_deg = pj.value("azimuth", 30.0);
                    rs.projection.elevation_deg = pj.value("elevation", 20.0);
                }
            }
            rs.domains = j.value("domain", 1);
            for (const auto& lj : j.at("layers")) {
                RenderLayer layer;
                layer.color = lj.value("color", "#1f6fb2");
                layer.opacity = lj.value("opacity", 1.0);
                std::string kind = lj.at("kind").get<std::string>();
                if (kind == "cloud") {
                    layer.kind = RenderLayer::Kind::Cloud;
                    std::string path = lj.at("path").get<std::string>();
                    int nn = lj.at("n").get<int>();
                    PointCloud cloud = cloud_from_csv(slurp(path), nn);
                    Box b = unit_domains_box(nn, rs.domains);
                    layer.points = lifted_cloud(cloud, b);
                } else if (kind == "cosets") {
                    layer.kind = RenderLayer::Kind::Cosets;
                    Json sj = load_json(lj.at("path").get<std::string>());
                    Shell sh = shell_from_json(sj);
                    Box b = unit_domains_box(sh.ambient, rs.domains);
                    layer.arrangement = lifted(sh, b);
                } else {
                    throw InputError("unknown layer kind " + kind);
                }
                rs.layers.push_back(std::move(layer));
            }
            std::string svg = render_svg(rs);
            if (output.empty())
                std::cout << svg;
            else
                write_file(output, svg);
            if (!png_path.empty()) write_file_binary(png_path, render_png(rs));
        } else if (*cover_cmd) {
            VarietySpec spec = spec_from_json(load_json(input));
            emit(to_json(pullback_spec(spec, m_cover)), output);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
