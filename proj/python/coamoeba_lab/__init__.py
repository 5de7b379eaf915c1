"""coamoeba-lab: tropical/coamoeba anatomy of torus subvarieties.

Thin dict-friendly wrappers over the C++ extension module `_core`. Structured
results cross the boundary as JSON; these helpers decode them.
"""

import json

import _core

InputError = _core.InputError
MathError = _core.MathError


def _decode(s):
    return json.loads(s)


def parse_polynomial(text, n):
    return _decode(_core.parse_polynomial(text, n))


def print_polynomial(poly):
    return _core.print_polynomial(json.dumps(poly))


def evaluate(poly, point):
    return _core.evaluate(json.dumps(poly), [complex(z) for z in point])


def newton_polytope(poly):
    return _decode(_core.newton_polytope(json.dumps(poly)))


def initial_form(poly, weight):
    return _decode(_core.initial_form(json.dumps(poly), [str(w) for w in weight]))


def tropical_hypersurface(poly):
    return _decode(_core.tropical_hypersurface(json.dumps(poly)))


def tropical_line(spec):
    return _decode(_core.tropical_line(json.dumps(spec)))


def tropical_fan(spec):
    return _decode(_core.tropical_fan(json.dumps(spec)))


def shell(spec):
    return _decode(_core.shell(json.dumps(spec)))


def phase_limit_set(spec, **kw):
    return _decode(_core.phase_limit_set(json.dumps(spec), **kw))


def sample_coamoeba(spec, **kw):
    points, log_radius = _core.sample_coamoeba(json.dumps(spec), **kw)
    return {"points": points, "log_radius": log_radius}


def pullback_spec(spec, m):
    return _decode(_core.pullback_spec(json.dumps(spec), m))


def na_amoeba(kspec):
    return _decode(_core.na_amoeba(json.dumps(kspec)))


def na_coamoeba(kspec, **kw):
    return _decode(_core.na_coamoeba(json.dumps(kspec), **kw))


def certify_k_convexity(arrangement, plane, k, trials=100, seed=42):
    return _decode(
        _core.certify_k_convexity(
            json.dumps(arrangement), json.dumps(plane), k, trials, seed
        )
    )


def linking_number(cycle, affine):
    return _core.linking_number(json.dumps(cycle), json.dumps(affine))


def boundary(chain):
    return _decode(_core.boundary(json.dumps(chain)))


def bounding_chain(cycle, plane):
    return _decode(_core.bounding_chain(json.dumps(cycle), json.dumps(plane)))


def enumerate_in_box(arrangement):
    return _decode(_core.enumerate_in_box(json.dumps(arrangement)))


def render_svg(shell_obj, domains=1):
    return _core.render_svg(json.dumps(shell_obj), domains)
