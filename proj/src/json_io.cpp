#include "coamoeba/json_io.hpp"

#include <sstream>

namespace coamoeba {

Json to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return rat_parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_number_float()) {
        Rat r;
        if (rationalize(j.get<double>(), 1000000, 1e-12, r)) return r;
        throw InputError("cannot read rational from float");
    }
    throw InputError("expected rational");
}

Json to_json(const RatVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

RatVec ratvec_from_json(const Json& j) {
    RatVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

Json to_json(const RationalSubspace& s) {
    Json j;
    j["ambient"] = s.ambient;
    Json rows = Json::array();
    for (const auto& r : s.basis) rows.push_back(to_json(r));
    j["basis"] = rows;
    return j;
}

RationalSubspace subspace_from_json(const Json& j) {
    RatMat rows;
    for (const auto& r : j.at("basis")) rows.push_back(ratvec_from_json(r));
    return RationalSubspace::span_of(j.at("ambient").get<int>(), rows);
}

Json to_json(const AffineSubspace& a) {
    Json j;
    j["point"] = to_json(a.point);
    j["direction"] = to_json(a.direction);
    return j;
}

AffineSubspace affine_from_json(const Json& j) {
    return AffineSubspace(ratvec_from_json(j.at("point")),
                          subspace_from_json(j.at("direction")));
}

Json to_json(const LaurentPolynomial& f) {
    Json j;
    j["n"] = f.ambient_dim;
    Json terms = Json::array();
    for (const auto& t : f.terms) {
        Json tj;
        tj["re"] = t.coeff.re;
        tj["im"] = t.coeff.im;
        Json e = Json::array();
        for (const auto& x : t.exp) e.push_back(x.convert_to<long long>());
        tj["exp"] = e;
        if (t.coeff.exact) {
            tj["modulus"] = rat_str(t.coeff.exact->modulus);
            tj["phase"] = rat_str(t.coeff.exact->phase);
        }
        terms.push_back(tj);
    }
    j["terms"] = terms;
    return j;
}

LaurentPolynomial poly_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    std::vector<LaurentTerm> terms;
    for (const auto& tj : j.at("terms")) {
        LaurentTerm t;
        if (tj.contains("modulus")) {
            t.coeff = ComplexScalar::from_exact(
                rat_parse(tj.at("modulus").get<std::string>()),
                rat_parse(tj.at("phase").get<std::string>()));
        } else {
            t.coeff = ComplexScalar::from_double(tj.at("re").get<double>(),
                                                 tj.at("im").get<double>());
        }
        for (const auto& e : tj.at("exp")) t.exp.push_back(Int(e.get<long long>()));
        terms.push_back(std::move(t));
    }
    return LaurentPolynomial::make(n, std::move(terms));
}

Json to_json(const VarietySpec& s) {
    Json j;
    j["n"] = s.ambient_dim;
    j["input_class"] = input_class_str(s.input_class);
    j["declared_codim"] = s.declared_codim;
    Json ps = Json::array();
    for (const auto& f : s.polynomials) ps.push_back(to_json(f));
    j["polynomials"] = ps;
    return j;
}

VarietySpec spec_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    InputClass cls = input_class_from_str(j.at("input_class").get<std::string>());
    std::vector<LaurentPolynomial> polys;
    for (const auto& pj : j.at("polynomials")) {
        if (pj.is_string())
            polys.push_back(parse_polynomial(pj.get<std::string>(), n));
        else
            polys.push_back(poly_from_json(pj));
    }
    return VarietySpec::make(n, cls, std::move(polys));
}

Json to_json(const Polytope& p) {
    Json j;
    j["ambient"] = p.ambient;
    j["dim"] = p.dim;
    Json vs = Json::array();
    for (const auto& v : p.vertices) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.convert_to<long long>());
        vs.push_back(row);
    }
    j["vertices"] = vs;
    Json fs = Json::array();
    for (size_t i = 0; i < p.facet_normals.size(); ++i) {
        Json f;
        Json nr = Json::array();
        for (const auto& x : p.facet_normals[i])
            nr.push_back(x.convert_to<long long>());
        f["normal"] = nr;
        f["offset"] = rat_str(p.facet_offsets[i]);
        fs.push_back(f);
    }
    j["facets"] = fs;
    return j;
}

namespace {

Json exps_to_json(const std::vector<ExponentVector>& es) {
    Json a = Json::array();
    for (const auto& e : es) {
        Json row = Json::array();
        for (const auto& x : e) row.push_back(x.convert_to<long long>());
        a.push_back(row);
    }
    return a;
}

Json intvec_to_json(const IntVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.convert_to<long long>());
    return a;
}

Json face_to_json(const TropicalFace& f) {
    Json j;
    j["dim"] = f.dim;
    j["affine_hull"] = to_json(f.affine_hull);
    Json vs = Json::array();
    for (const auto& v : f.vertices) vs.push_back(to_json(v));
    j["vertices"] = vs;
    Json rs = Json::array();
    for (const auto& r : f.rays) rs.push_back(intvec_to_json(r));
    j["rays"] = rs;
    Json tp = Json::array();
    for (const auto& per : f.tie_pattern) tp.push_back(exps_to_json(per));
    j["tie_pattern"] = tp;
    j["interior_point"] = to_json(f.interior);
    return j;
}

}  // namespace

Json to_json(const TropicalComplex& t) {
    Json j;
    j["ambient"] = t.ambient;
    Json fs = Json::array();
    for (const auto& f : t.faces) fs.push_back(face_to_json(f));
    j["faces"] = fs;
    Json inc = Json::array();
    for (auto [a, b] : t.incidence) inc.push_back(Json::array({a, b}));
    j["incidence"] = inc;
    return j;
}

Json to_json(const TropicalFan& f) {
    Json j;
    j["ambient"] = f.ambient;
    Json cs = Json::array();
    for (const auto& c : f.cones) {
        Json cj;
        Json rays = Json::array();
        for (const auto& r : c.cone.rays) rays.push_back(intvec_to_json(r));
        cj["rays"] = rays;
        cj["span"] = to_json(c.cone.span);
        cj["maximal"] = c.maximal;
        Json init = Json::array();
        for (const auto& g : c.initial_system) init.push_back(to_json(g));
        cj["initial_system"] = init;
        cj["interior_point"] = to_json(c.interior);
        cs.push_back(cj);
    }
    j["cones"] = cs;
    Json fr = Json::array();
    for (auto [a, b] : f.face_relations) fr.push_back(Json::array({a, b}));
    j["face_relations"] = fr;
    return j;
}

Json to_json(const AffineSubgroupCoset& c) {
    Json j;
    Json nb = Json::array();
    for (const auto& r : c.direction.basis) nb.push_back(to_json(r));
    j["N_basis"] = nb;
    // offset: a representative torus point (solution of lattice . theta = c)
    RatMat rows;
    for (const auto& r : c.lattice) rows.push_back(to_ratvec(r));
    RatVec rep(c.ambient, Rat(0));
    if (!rows.empty()) {
        auto pt = solve_linear(rows, c.offsets);
        if (pt && static_cast<int>(pt->size()) == c.ambient) rep = *pt;
    }
    for (auto& x : rep) x = rat_mod1(x);
    j["offset"] = to_json(rep);
    Json lat = Json::array();
    for (const auto& r : c.lattice) lat.push_back(intvec_to_json(r));
    j["lattice"] = lat;
    j["lattice_offsets"] = to_json(c.offsets);
    Json ex = Json::array();
    for (bool b : c.offset_exact) ex.push_back(b);
    j["offset_exact"] = ex;
    j["ambient"] = c.ambient;
    return j;
}

AffineSubgroupCoset coset_from_json(const Json& j) {
    const int n = j.at("ambient").get<int>();
    RatMat basis;
    for (const auto& r : j.at("N_basis")) basis.push_back(ratvec_from_json(r));
    RationalSubspace dir = RationalSubspace::span_of(n, basis);
    RatVec offset = ratvec_from_json(j.at("offset"));
    std::vector<bool> flags(n, true);
    auto coset = AffineSubgroupCoset::make(dir, offset, &flags);
    if (j.contains("offset_exact")) {
        std::vector<bool> ex;
        for (const auto& b : j.at("offset_exact")) ex.push_back(b.get<bool>());
        if (ex.size() == coset.offset_exact.size()) coset.offset_exact = ex;
    }
    return coset;
}

Json to_json(const Shell& s) {
    Json j;
    j["ambient"] = s.ambient;
    Json cs = Json::array();
    for (const auto& c : s.cosets) {
        Json cj = to_json(c.coset);
        cj["cone"] = c.cone_index;
        Json init = Json::array();
        for (const auto& f : c.initial_system) init.push_back(to_json(f));
        cj["initial_system"] = init;
        cs.push_back(cj);
    }
    j["cosets"] = cs;
    return j;
}

Shell shell_from_json(const Json& j) {
    Shell s;
    s.ambient = j.at("ambient").get<int>();
    for (const auto& cj : j.at("cosets")) {
        ShellCoset sc;
        sc.coset = coset_from_json(cj);
        if (cj.contains("cone")) sc.cone_index = cj.at("cone").get<int>();
        if (cj.contains("initial_system"))
            for (const auto& f : cj.at("initial_system"))
                sc.initial_system.push_back(poly_from_json(f));
        s.cosets.push_back(std::move(sc));
    }
    return s;
}

Json to_json(const PhaseLimitSet& p) {
    Json j;
    j["ambient"] = p.ambient;
    Json ss = Json::array();
    for (const auto& st : p.strata) {
        Json sj;
        sj["cone"] = st.cone_index;
        sj["cone_dim"] = st.cone_dim;
        sj["exact"] = st.exact;
        sj["invariance"] = to_json(st.invariance);
        if (st.exact) {
            Json cs = Json::array();
            for (const auto& c : st.cosets) cs.push_back(to_json(c));
            sj["cosets"] = cs;
        } else {
            sj["cloud_size"] = st.cloud.points.size();
            sj["cloud"] = cloud_to_csv(st.cloud);
        }
        ss.push_back(sj);
    }
    j["strata"] = ss;
    return j;
}

Json to_json(const Box& b) {
    Json j;
    j["lo"] = to_json(b.lo);
    j["hi"] = to_json(b.hi);
    return j;
}

Box box_from_json(const Json& j) {
    Box b;
    b.lo = ratvec_from_json(j.at("lo"));
    b.hi = ratvec_from_json(j.at("hi"));
    return b;
}

Json to_json(const LiftedArrangement& a) {
    Json j;
    j["ambient"] = a.ambient;
    Json ms = Json::array();
    for (const auto& m : a.members) ms.push_back(to_json(m));
    j["members"] = ms;
    j["box"] = to_json(a.box);
    return j;
}

LiftedArrangement arrangement_from_json(const Json& j) {
    LiftedArrangement a;
    a.ambient = j.at("ambient").get<int>();
    for (const auto& m : j.at("members")) a.members.push_back(coset_from_json(m));
    a.box = box_from_json(j.at("box"));
    return a;
}

Json to_json(const Chain& c) {
    Json j;
    j["k"] = c.degree;
    j["n"] = c.ambient;
    Json ts = Json::array();
    for (const auto& t : c.terms) {
        Json tj;
        tj["coeff"] = t.coeff.convert_to<long long>();
        Json vs = Json::array();
        for (const auto& v : t.s.v) vs.push_back(to_json(v));
        tj["verts"] = vs;
        ts.push_back(tj);
    }
    j["simplices"] = ts;
    return j;
}

Chain chain_from_json(const Json& j) {
    const int k = j.at("k").get<int>();
    const int n = j.at("n").get<int>();
    std::vector<ChainTerm> terms;
    for (const auto& tj : j.at("simplices")) {
        ChainTerm t;
        t.coeff = Int(tj.at("coeff").get<long long>());
        for (const auto& v : tj.at("verts")) t.s.v.push_back(ratvec_from_json(v));
        terms.push_back(std::move(t));
    }
    return Chain::make(k, n, std::move(terms));
}

Json to_json(const CertifyOutcome& o) {
    Json j;
    j["plane"] = to_json(o.plane);
    j["plane_perturbed"] = o.plane_perturbed;
    j["trials"] = o.trials;
    j["trivial_trials"] = o.trivial_trials;
    j["oracle_escalations"] = o.oracle_escalations;
    Json ms = Json::array();
    for (const auto& m : o.members) ms.push_back(to_json(m));
    j["members"] = ms;
    Json cs = Json::array();
    for (const auto& c : o.certificates) {
        Json cj;
        cj["cycle"] = to_json(c.cycle);
        cj["bounding_chain"] = to_json(c.bounding);
        Json ws = Json::array();
        for (const auto& [mi, lk] : c.witnesses)
            ws.push_back(Json{{"member", mi}, {"linking", lk.convert_to<long long>()}});
        cj["witnesses"] = ws;
        cj["oracle_confirmed"] = c.oracle_confirmed;
        cs.push_back(cj);
    }
    j["certificates"] = cs;
    Json ces = Json::array();
    for (const auto& ce : o.counterexamples) {
        Json cj;
        cj["cycle"] = to_json(ce.cycle);
        cj["note"] = ce.note;
        ces.push_back(cj);
    }
    j["counterexamples"] = ces;
    return j;
}

Json to_json(const KLaurentPolynomial& f) {
    Json j;
    j["n"] = f.ambient_dim;
    Json ts = Json::array();
    for (const auto& t : f.terms) {
        Json tj;
        Json cs = Json::array();
        for (const auto& pt : t.coeff.terms) {
            Json c;
            c["gamma"] = rat_str(pt.gamma);
            c["re"] = pt.c.re;
            c["im"] = pt.c.im;
            if (pt.c.exact) {
                c["modulus"] = rat_str(pt.c.exact->modulus);
                c["phase"] = rat_str(pt.c.exact->phase);
            }
            cs.push_back(c);
        }
        tj["coeff"] = cs;
        Json e = Json::array();
        for (const auto& x : t.exp) e.push_back(x.convert_to<long long>());
        tj["exp"] = e;
        ts.push_back(tj);
    }
    j["terms"] = ts;
    return j;
}

KLaurentPolynomial kpoly_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    std::vector<KLaurentTerm> terms;
    for (const auto& tj : j.at("terms")) {
        KLaurentTerm t;
        std::vector<PuiseuxTerm> pts;
        for (const auto& c : tj.at("coeff")) {
            PuiseuxTerm pt;
            pt.gamma = rat_parse(c.at("gamma").get<std::string>());
            if (c.contains("modulus"))
                pt.c = ComplexScalar::from_exact(
                    rat_parse(c.at("modulus").get<std::string>()),
                    rat_parse(c.at("phase").get<std::string>()));
            else
                pt.c = ComplexScalar::from_double(c.at("re").get<double>(),
                                                  c.at("im").get<double>());
            pts.push_back(std::move(pt));
        }
        t.coeff = PuiseuxScalar::make(std::move(pts));
        for (const auto& e : tj.at("exp")) t.exp.push_back(Int(e.get<long long>()));
        terms.push_back(std::move(t));
    }
    return KLaurentPolynomial::make(n, std::move(terms));
}

Json to_json(const KVarietySpec& s) {
    Json j;
    j["n"] = s.ambient_dim;
    j["input_class"] = input_class_str(s.input_class);
    Json ps = Json::array();
    for (const auto& f : s.polynomials) ps.push_back(to_json(f));
    j["polynomials"] = ps;
    return j;
}

KVarietySpec kspec_from_json(const Json& j) {
    KVarietySpec s;
    s.ambient_dim = j.at("n").get<int>();
    s.input_class = input_class_from_str(j.at("input_class").get<std::string>());
    for (const auto& pj : j.at("polynomials"))
        s.polynomials.push_back(kpoly_from_json(pj));
    return s;
}

Json to_json(const NAmoebaComplex& c) {
    Json j = to_json(c.complex);
    Json reds = Json::array();
    for (const auto& per_face : c.reductions) {
        Json fr = Json::array();
        for (const auto& f : per_face) fr.push_back(to_json(f));
        reds.push_back(fr);
    }
    j["reductions"] = reds;
    Json mins = Json::array();
    for (bool b : c.minimal) mins.push_back(b);
    j["minimal"] = mins;
    return j;
}

Json to_json(const NACoamoeba& c) {
    Json j;
    j["ambient"] = c.ambient;
    Json ss = Json::array();
    for (const auto& st : c.strata) {
        Json sj;
        sj["face"] = st.face;
        sj["face_dim"] = st.face_dim;
        sj["minimal_face"] = st.minimal_face;
        sj["exact"] = st.exact;
        if (st.exact) {
            Json cs = Json::array();
            for (const auto& co : st.cosets) cs.push_back(to_json(co));
            sj["cosets"] = cs;
        } else {
            sj["cloud_size"] = st.cloud.points.size();
            sj["cloud"] = cloud_to_csv(st.cloud);
        }
        ss.push_back(sj);
    }
    j["strata"] = ss;
    return j;
}

std::string cloud_to_csv(const PointCloud& c) {
    std::ostringstream os;
    os.precision(12);
    for (const auto& p : c.points) {
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) os << ",";
            os << p[i];
        }
        os << "\n";
    }
    return os.str();
}

PointCloud cloud_from_csv(const std::string& text, int ambient) {
    PointCloud c;
    c.ambient = ambient;
    c.source = "csv";
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<double> p;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) p.push_back(std::stod(cell));
        if (static_cast<int>(p.size()) != ambient)
            throw InputError("cloud CSV row has wrong arity");
        c.points.push_back(std::move(p));
        c.log_radius.push_back(0.0);
    }
    return c;
}

}  // namespace coamoeba
