#include "toric/json_io.hpp"

#include <fstream>

namespace toric {

Json json_of(const Rat& q) { return rat_to_string(q); }

Json json_of(const std::complex<double>& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json json_of(const IVec& v) {
    Json arr = Json::array();
    for (const Int& x : v) {
        if (x.fits_slong_p())
            arr.push_back(x.get_si());
        else
            arr.push_back(x.get_str());
    }
    return arr;
}

Json json_of(const LatticePolytope& p) {
    Json j;
    Json verts = Json::array();
    for (const IVec& v : p.vertices()) verts.push_back(json_of(v));
    j["vertices"] = verts;
    Json facets = Json::array();
    if (p.full_dimensional()) {
        for (const Facet& f : p.facets()) {
            Json jf;
            jf["normal"] = json_of(f.normal);
            jf["offset"] = f.offset.get_si();
            facets.push_back(jf);
        }
    }
    j["facets"] = facets;
    j["dim"] = p.dim();
    return j;
}

namespace {

const char* method_name(ResidueReport::Method m) {
    switch (m) {
        case ResidueReport::TraceInverse: return "trace-inverse";
        case ResidueReport::NumericRoots: return "numeric-roots";
        case ResidueReport::Deformation: return "deformation";
    }
    return "?";
}

}  // namespace

Json json_of(const ResidueReport& r) {
    Json j;
    j["method"] = method_name(r.method);
    j["exact"] = r.exact;
    if (r.exact)
        j["value"] = json_of(r.exact_value);
    else
        j["value"] = json_of(r.value);
    if (!r.warning.empty()) j["warning"] = r.warning;
    return j;
}

Json json_of(const EulerJacobiCertificate& c) {
    Json j;
    Json pts = Json::array();
    for (const IVec& m : c.interior_points) pts.push_back(json_of(m));
    j["interior"] = pts;
    Json rs = Json::array();
    for (const ResidueReport& r : c.residues) rs.push_back(json_of(r));
    j["residues"] = rs;
    j["all_vanish"] = c.all_vanish;
    return j;
}

Json json_of(const ConverseCertificate& c, const std::vector<std::string>& vars) {
    Json j;
    j["outcome"] = c.outcome == ConverseCertificate::FoundPJ ? "found_pJ" : "no_pJ";
    if (c.p_j) j["p_J"] = to_string(*c.p_j, vars);
    if (c.dual_witness) {
        Json w = Json::array();
        for (const Rat& x : *c.dual_witness) w.push_back(json_of(x));
        j["dual_witness"] = w;
    }
    Json pts = Json::array();
    for (const IVec& m : c.interior_points) pts.push_back(json_of(m));
    j["interior"] = pts;
    return j;
}

Json json_of(const InfinityAudit& a, const std::vector<std::string>& vars) {
    Json j;
    Json rays = Json::array();
    for (const IVec& r : a.fan.rays) rays.push_back(json_of(r));
    j["rays"] = rays;
    j["mixed_volume"] = json_of(a.mixed_vol);
    j["degree"] = a.degree;
    j["deficit"] = json_of(a.deficit());
    Json cones = Json::array();
    for (const ConeAudit& c : a.cones) {
        Json jc;
        jc["rays"] = c.rays;
        jc["w"] = json_of(c.w);
        Json fs = Json::array();
        for (const LaurentPolynomial& f : c.facial) fs.push_back(to_string(f, vars));
        jc["facial_system"] = fs;
        jc["solvable"] = c.solvable;
        if (c.finite_mod_cone) jc["finite_mod_cone"] = *c.finite_mod_cone;
        cones.push_back(jc);
    }
    j["cones"] = cones;
    Json deficient = Json::array();
    for (const ConeAudit* c : a.deficient()) deficient.push_back(json_of(c->w));
    j["deficient_cones"] = deficient;
    return j;
}

Json json_of(const EquivalenceReport& r, const std::vector<std::string>& vars) {
    Json j;
    j["applicable"] = r.applicable;
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["hypothesis_verified"] = r.hypothesis_verified;
    auto tri = [](const std::optional<bool>& b) -> Json {
        if (!b) return nullptr;
        return *b;
    };
    j["i_deficit_zero"] = tri(r.i);
    j["ii_residues_vanish"] = tri(r.ii);
    j["iii_no_interior_representative"] = tri(r.iii);
    j["agree"] = r.agree;
    if (r.audit) j["infinity"] = json_of(*r.audit, vars);
    if (r.euler_jacobi) j["euler_jacobi"] = json_of(*r.euler_jacobi);
    if (r.converse) j["converse"] = json_of(*r.converse, vars);
    return j;
}

Json json_of(const TorusRoots& roots) {
    Json arr = Json::array();
    for (const TorusRootPoint& p : roots.points) {
        Json jp;
        Json coords = Json::array();
        for (const auto& z : p.coords) coords.push_back(json_of(z));
        jp["point"] = coords;
        jp["multiplicity"] = p.multiplicity;
        jp["exact"] = p.exact;
        if (p.exact) {
            Json rs = Json::array();
            for (const Rat& x : p.rational) rs.push_back(json_of(x));
            jp["rational"] = rs;
        }
        arr.push_back(jp);
    }
    return arr;
}

Json json_of(const CoxContext& ctx) {
    Json j;
    Json rays = Json::array();
    for (const IVec& r : ctx.fan().rays) rays.push_back(json_of(r));
    j["rays"] = rays;
    j["variables"] = ctx.variables();
    j["class_rank"] = ctx.class_rank();
    j["rho0"] = json_of(ctx.rho0().rep);
    Json cones = Json::array();
    for (const auto& c : ctx.maximal_cones()) cones.push_back(c);
    j["maximal_cones"] = cones;
    return j;
}

Json json_of(const CoxPolynomial& f, const CoxContext& ctx) {
    Json j;
    j["expression"] = to_string(f.poly, ctx.variables());
    j["degree_rep"] = json_of(f.rep);
    j["degree_class"] = json_of(degree_of(ctx, f).rep);
    return j;
}

Json json_of(const RatMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(json_of(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

LaurentSystem system_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("polynomials"))
        throw InputError("system file must contain \"variables\" and \"polynomials\"");
    std::vector<std::string> vars;
    for (const auto& v : j.at("variables")) vars.push_back(v.get<std::string>());
    if (vars.empty()) throw InputError("system file declares no variables");
    std::vector<LaurentPolynomial> polys;
    for (const auto& p : j.at("polynomials")) polys.push_back(parse_laurent(p.get<std::string>(), vars));
    std::optional<std::vector<LatticePolytope>> supports;
    if (j.contains("supports") && !j.at("supports").is_null()) {
        std::vector<LatticePolytope> ss;
        for (const auto& pts : j.at("supports")) {
            std::vector<IVec> ivs;
            for (const auto& pt : pts) {
                IVec v;
                for (const auto& x : pt) v.emplace_back(x.get<long>());
                ivs.push_back(v);
            }
            ss.push_back(LatticePolytope::convex_hull(ivs, int(vars.size())));
        }
        supports = std::move(ss);
    }
    return LaurentSystem(std::move(polys), std::move(vars), std::move(supports));
}

LaurentSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open system file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return system_from_json(j);
}

}  // namespace toric
