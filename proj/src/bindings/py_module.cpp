#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coamoeba/json_io.hpp"
#include "coamoeba/render.hpp"

namespace py = pybind11;
using namespace coamoeba;

namespace {

// Complex structured results cross the boundary as JSON strings; the python
// package turns them into dicts.
std::string jdump(const Json& j) { return j.dump(); }

SampleParams params_from_kwargs(double log_radius, int radial, int angular) {
    SampleParams sp;
    if (log_radius > 0) sp.log_radius = log_radius;
    if (radial > 0) sp.radial_steps = radial;
    if (angular > 0) sp.angular_steps = angular;
    return sp;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "coamoeba-lab core: tropical geometry, coamoebas, and "
              "higher-convexity certificates";

    m.def("parse_polynomial", [](const std::string& text, int n) {
        return jdump(to_json(parse_polynomial(text, n)));
    });
    m.def("print_polynomial", [](const std::string& poly_json) {
        return print_polynomial(poly_from_json(Json::parse(poly_json)));
    });
    m.def("evaluate",
          [](const std::string& poly_json, const std::vector<Cplx>& point) {
              return evaluate(poly_from_json(Json::parse(poly_json)), point);
          });
    m.def("newton_polytope", [](const std::string& poly_json) {
        return jdump(to_json(newton_polytope(poly_from_json(Json::parse(poly_json)))));
    });
    m.def("initial_form",
          [](const std::string& poly_json, const std::vector<std::string>& w) {
              RatVec wv;
              for (const auto& s : w) wv.push_back(rat_parse(s));
              auto in = initial_form(poly_from_json(Json::parse(poly_json)), wv);
              return jdump(to_json(in.result));
          });
    m.def("tropical_hypersurface", [](const std::string& poly_json) {
        return jdump(
            to_json(tropical_hypersurface(poly_from_json(Json::parse(poly_json)))));
    });
    m.def("tropical_line", [](const std::string& spec_json) {
        return jdump(to_json(tropical_line(spec_from_json(Json::parse(spec_json)))));
    });
    m.def("tropical_fan", [](const std::string& spec_json) {
        return jdump(to_json(tropical_fan(spec_from_json(Json::parse(spec_json)))));
    });
    m.def("shell", [](const std::string& spec_json) {
        return jdump(to_json(shell(spec_from_json(Json::parse(spec_json)))));
    });
    m.def("phase_limit_set",
          [](const std::string& spec_json, double log_radius, int radial,
             int angular) {
              return jdump(to_json(
                  phase_limit_set(spec_from_json(Json::parse(spec_json)),
                                  params_from_kwargs(log_radius, radial, angular))));
          },
          py::arg("spec_json"), py::arg("log_radius") = 0.0,
          py::arg("radial") = 0, py::arg("angular") = 0);
    m.def("sample_coamoeba",
          [](const std::string& spec_json, double log_radius, int radial,
             int angular) {
              PointCloud c =
                  sample_coamoeba(spec_from_json(Json::parse(spec_json)),
                                  params_from_kwargs(log_radius, radial, angular));
              return py::make_tuple(c.points, c.log_radius);
          },
          py::arg("spec_json"), py::arg("log_radius") = 0.0,
          py::arg("radial") = 0, py::arg("angular") = 0);
    m.def("pullback_spec", [](const std::string& spec_json, int mm) {
        return jdump(to_json(pullback_spec(spec_from_json(Json::parse(spec_json)), mm)));
    });
    m.def("na_amoeba", [](const std::string& kspec_json) {
        return jdump(to_json(na_amoeba(kspec_from_json(Json::parse(kspec_json)))));
    });
    m.def("na_coamoeba",
          [](const std::string& kspec_json, double log_radius, int radial,
             int angular) {
              return jdump(to_json(
                  na_coamoeba(kspec_from_json(Json::parse(kspec_json)),
                              params_from_kwargs(log_radius, radial, angular))));
          },
          py::arg("kspec_json"), py::arg("log_radius") = 0.0,
          py::arg("radial") = 0, py::arg("angular") = 0);
    m.def("certify_k_convexity",
          [](const std::string& arrangement_json, const std::string& plane_json,
             int k, int trials, std::uint64_t seed) {
              CertifyParams params;
              params.trials = trials;
              params.seed = seed;
              auto out = certify_k_convexity(
                  arrangement_from_json(Json::parse(arrangement_json)),
                  affine_from_json(Json::parse(plane_json)), k, params);
              return jdump(to_json(out));
          },
          py::arg("arrangement_json"), py::arg("plane_json"), py::arg("k"),
          py::arg("trials") = 100, py::arg("seed") = 42);
    m.def("linking_number",
          [](const std::string& cycle_json, const std::string& affine_json) {
              Int lk = linking_number(chain_from_json(Json::parse(cycle_json)),
                                      affine_from_json(Json::parse(affine_json)));
              return lk.convert_to<long long>();
          });
    m.def("boundary", [](const std::string& chain_json) {
        return jdump(to_json(boundary(chain_from_json(Json::parse(chain_json)))));
    });
    m.def("bounding_chain",
          [](const std::string& cycle_json, const std::string& plane_json) {
              return jdump(to_json(
                  bounding_chain(chain_from_json(Json::parse(cycle_json)),
                                 affine_from_json(Json::parse(plane_json)))));
          });
    m.def("enumerate_in_box", [](const std::string& arrangement_json) {
        auto arr = arrangement_from_json(Json::parse(arrangement_json));
        Json out = Json::array();
        for (const auto& member : enumerate_in_box(arr, arr.box))
            out.push_back(to_json(member));
        return jdump(out);
    });
    m.def("render_svg", [](const std::string& shell_json, int domains) {
        Shell sh = shell_from_json(Json::parse(shell_json));
        RenderSpec rs;
        rs.domains = domains;
        if (sh.ambient == 3)
            rs.projection.kind = Projection::Kind::Coords3DOrthographic;
        RenderLayer layer;
        layer.kind = RenderLayer::Kind::Cosets;
        Box b;
        b.lo.assign(sh.ambient, Rat(0));
        b.hi.assign(sh.ambient, Rat(domains));
        layer.arrangement = lifted(sh, b);
        rs.layers.push_back(std::move(layer));
        return render_svg(rs);
    }, py::arg("shell_json"), py::arg("domains") = 1);

    py::register_exception<InputError>(m, "InputError");
    py::register_exception<MathError>(m, "MathError");
}
