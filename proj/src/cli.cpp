#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <sstream>

#include "toric/json_io.hpp"

namespace toric {

namespace {

struct CliState {
    std::string file;
    RunConfig cfg;
    bool table = false;
    std::string h_expr;
    std::string degree_csv;
    std::string cone_csv;
};

std::vector<int> parse_csv_ints(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError(std::string("malformed ") + what + ": \"" + s + "\"");
        }
    }
    if (out.empty()) throw InputError(std::string("empty ") + what);
    return out;
}

void emit(const Json& j, const CliState& st, std::ostream& out) {
    if (!st.table) {
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : j.items()) {
        if (value.is_string())
            out << key << ": " << value.get<std::string>() << "\n";
        else
            out << key << ": " << value.dump() << "\n";
    }
}

Json header(const char* command) {
    Json j;
    j["schema"] = "toric-ej/1";
    j["command"] = command;
    return j;
}

// Cox-side setup shared by homogenize/cox-dim/jacobian/delta/membership/empty.
struct CoxSetup {
    LaurentSystem system;
    CoxContext ctx;
    std::vector<CoxPolynomial> F;

    explicit CoxSetup(const LaurentSystem& sys)
        : system(sys), ctx(CoxContext::build(sys.total_support())) {
        for (int i = 0; i < system.size(); ++i)
            F.push_back(homogenize(system.polys()[size_t(i)], system.support(i), ctx));
    }
};

std::vector<int> default_ray_set(const CoxContext& ctx) {
    // lexicographically first independent n-subset of ray indices
    std::vector<int> pick;
    std::vector<IVec> rows;
    for (int j = 0; j < ctx.nvars() && int(pick.size()) < ctx.torus_dim(); ++j) {
        rows.push_back(ctx.fan().rays[size_t(j)]);
        if (IntMatrix::from_rows(rows).rank() == int(rows.size()))
            pick.push_back(j);
        else
            rows.pop_back();
    }
    if (int(pick.size()) != ctx.torus_dim()) throw Fault("fan rays do not span");
    return pick;
}

Json system_info(Analyzer& a) {
    Json j = header("info");
    const LaurentSystem& sys = a.system();
    j["variables"] = sys.variables();
    Json polys = Json::array();
    for (int i = 0; i < sys.size(); ++i) {
        Json jp;
        jp["polynomial"] = to_string(sys.polys()[size_t(i)], sys.variables());
        jp["support"] = json_of(sys.support(i));
        polys.push_back(jp);
    }
    j["polynomials"] = polys;
    j["mixed_volume"] = json_of(a.mixed_vol());
    j["exact"] = true;

    std::vector<LatticePolytope> supports;
    for (int i = 0; i < sys.size(); ++i) supports.push_back(sys.support(i));
    PolytopeSequence seq(supports);
    SequenceCheck ess = is_essential(seq);
    j["essential"] = ess.ok;
    SequenceCheck ind = is_indecomposable(seq);
    j["indecomposable"] = ind.ok;
    if (!ind.ok) {
        Json w;
        Json subset = Json::array();
        for (int s : ind.witness_subset) subset.push_back(s + 1);
        w["subset"] = subset;
        if (ind.witness_point) w["interior_point"] = json_of(*ind.witness_point);
        j["indecomposable_witness"] = w;
    }
    Json pts = Json::array();
    for (const IVec& m : sys.total_support().interior_lattice_points()) pts.push_back(json_of(m));
    j["interior_points"] = pts;
    j["total_support"] = json_of(sys.total_support());
    return j;
}

int dispatch(const std::string& cmd, const CliState& st, std::ostream& out) {
    LaurentSystem sys = load_system(st.file);

    if (cmd == "info") {
        Analyzer a(sys, st.cfg);
        emit(system_info(a), st, out);
        return 0;
    }
    if (cmd == "solve") {
        Analyzer a(sys, st.cfg);
        Json j = header("solve");
        j["degree"] = a.degree();
        Json basis = Json::array();
        for (const Mono& m : a.quotient().basis)
            basis.push_back(poly_to_string(
                poly_from_terms({{m, Rat(1)}}, a.saturated().order), sys.variables()));
        j["basis"] = basis;
        j["roots"] = json_of(numeric_roots(a.quotient(), sys, st.cfg));
        emit(j, st, out);
        return 0;
    }
    if (cmd == "residue") {
        Analyzer a(sys, st.cfg);
        LaurentPolynomial h = parse_laurent(st.h_expr, sys.variables());
        Json j = header("residue");
        j["h"] = to_string(h, sys.variables());
        j["residue"] = json_of(a.global_residue(h));
        emit(j, st, out);
        return 0;
    }
    if (cmd == "euler-jacobi") {
        Analyzer a(sys, st.cfg);
        Json j = header("euler-jacobi");
        Json cert = json_of(a.euler_jacobi_check());
        j.update(cert);
        emit(j, st, out);
        return 0;
    }
    if (cmd == "converse") {
        Analyzer a(sys, st.cfg);
        Json j = header("converse");
        j.update(json_of(a.converse_certificate(), sys.variables()));
        Json basis = Json::array();
        for (const Mono& m : a.quotient().basis)
            basis.push_back(poly_to_string(
                poly_from_terms({{m, Rat(1)}}, a.saturated().order), sys.variables()));
        j["basis"] = basis;
        emit(j, st, out);
        return 0;
    }
    if (cmd == "infinity") {
        Analyzer a(sys, st.cfg);
        Json j = header("infinity");
        j.update(json_of(a.audit_infinity(), sys.variables()));
        emit(j, st, out);
        return 0;
    }
    if (cmd == "equivalence") {
        Analyzer a(sys, st.cfg);
        Json j = header("equivalence");
        j.update(json_of(a.equivalence_harness(), sys.variables()));
        emit(j, st, out);
        return 0;
    }
    if (cmd == "homogenize") {
        CoxSetup cox(sys);
        Json j = header("homogenize");
        j["context"] = json_of(cox.ctx);
        Json fs = Json::array();
        for (const CoxPolynomial& F : cox.F) fs.push_back(json_of(F, cox.ctx));
        j["polynomials"] = fs;
        emit(j, st, out);
        return 0;
    }
    if (cmd == "cox-dim") {
        CoxSetup cox(sys);
        std::vector<int> rep = parse_csv_ints(st.degree_csv, "--degree");
        if (int(rep.size()) != cox.ctx.nvars())
            throw InputError("--degree must list one offset per ray (" +
                             std::to_string(cox.ctx.nvars()) + ")");
        IVec iv;
        for (int x : rep) iv.emplace_back(x);
        DegreeClass alpha = cox.ctx.class_of(iv);
        Json j = header("cox-dim");
        j["degree_rep"] = json_of(alpha.rep);
        j["dim_graded_piece"] = int(graded_piece(alpha, cox.ctx).monomials.size());
        j["dim_quotient"] = graded_quotient_dim(cox.F, alpha, cox.ctx);
        emit(j, st, out);
        return 0;
    }
    if (cmd == "jacobian") {
        Json j = header("jacobian");
        if (sys.square()) {
            j["torus_jacobian"] = to_string(torus_jacobian(sys), sys.variables());
            j["convention"] = "det(t_i df_j/dt_i), rows = variables, columns = polynomials";
        } else if (sys.size() == sys.nvars() + 1) {
            CoxSetup cox(sys);
            std::vector<int> I = default_ray_set(cox.ctx);
            CoxPolynomial JF = toric_jacobian_cox(cox.F, cox.ctx, I);
            Json rays = Json::array();
            for (int r : I) rays.push_back(r + 1);
            j["ray_set"] = rays;
            j["toric_jacobian"] = json_of(JF, cox.ctx);
        } else {
            throw InputError("jacobian expects n (torus jacobian) or n+1 (toric jacobian) polynomials");
        }
        emit(j, st, out);
        return 0;
    }
    if (cmd == "delta") {
        CoxSetup cox(sys);
        std::vector<int> cone = parse_csv_ints(st.cone_csv, "--cone");
        for (int& c : cone) c -= 1;  // CLI uses 1-based ray indices
        CoxPolynomial delta = delta_element(cox.F, cone, cox.ctx);
        Json j = header("delta");
        Json rays = Json::array();
        for (int c : cone) rays.push_back(c + 1);
        j["cone"] = rays;
        j["delta"] = json_of(delta, cox.ctx);
        emit(j, st, out);
        return 0;
    }
    if (cmd == "membership") {
        CoxSetup cox(sys);
        CoxPolynomial H;
        if (st.h_expr == "JF") {
            H = toric_jacobian_cox(cox.F, cox.ctx, default_ray_set(cox.ctx));
        } else {
            LaurentPolynomial raw = parse_laurent(st.h_expr, cox.ctx.variables());
            if (raw.is_zero()) throw InputError("membership: H must be nonzero");
            H.poly = raw;
            H.rep = cox.ctx.class_of(expo_to_ivec(raw.terms().begin()->first)).rep;
            validate_homogeneous(cox.ctx, H);
        }
        MembershipResult res = membership(H, cox.F, cox.ctx, st.cfg);
        Json j = header("membership");
        j["h"] = to_string(H.poly, cox.ctx.variables());
        j["member"] = res.member;
        if (res.member) {
            Json cof = Json::array();
            for (const CoxPolynomial& g : res.cofactors)
                cof.push_back(to_string(g.poly, cox.ctx.variables()));
            j["cofactors"] = cof;
        }
        emit(j, st, out);
        return 0;
    }
    if (cmd == "empty") {
        CoxSetup cox(sys);
        EmptinessCertificate cert = irrelevant_saturation(cox.F, cox.ctx, st.cfg);
        Json j = header("empty");
        j["empty"] = cert.empty;
        Json cones = Json::array();
        for (const auto& [cone, unit] : cert.cone_unit) {
            Json jc;
            Json rays = Json::array();
            for (int r : cone) rays.push_back(r + 1);
            jc["cone"] = rays;
            jc["saturation_unit"] = unit;
            cones.push_back(jc);
        }
        j["cones"] = cones;
        emit(j, st, out);
        return 0;
    }
    throw InputError("unknown subcommand: " + cmd);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toric Euler-Jacobi toolkit: residues, mixed volumes, Cox ring computations"};
    app.require_subcommand(1);

    CliState st;
    auto add_common = [&](CLI::App* sub, bool needs_file = true) {
        if (needs_file) sub->add_option("system", st.file, "system JSON file")->required();
        sub->add_option("--tol", st.cfg.tolerance, "numeric tolerance (default 1e-9)");
        sub->add_option("--seed", st.cfg.seed, "random seed (default 0)");
        sub->add_option("--step-cap", st.cfg.groebner_step_cap, "Groebner reduction cap");
        sub->add_option("--eigen-cap", st.cfg.eigen_dim_cap, "eigensolver dimension cap");
        sub->add_flag("--table", st.table, "human-readable output instead of JSON");
        sub->add_flag("--json", [](size_t) {}, "JSON output (default)");
    };

    for (const char* name : {"info", "solve", "euler-jacobi", "converse", "infinity",
                             "equivalence", "homogenize", "jacobian", "empty"})
        add_common(app.add_subcommand(name));
    add_common(app.add_subcommand("residue"));
    app.get_subcommand("residue")->set_help_flag("--help", "print help");
    app.get_subcommand("residue")->add_option("--h", st.h_expr, "Laurent expression")->required();
    add_common(app.add_subcommand("cox-dim"));
    app.get_subcommand("cox-dim")->add_option("--degree", st.degree_csv, "comma-separated offsets")->required();
    add_common(app.add_subcommand("delta"));
    app.get_subcommand("delta")->add_option("--cone", st.cone_csv, "comma-separated 1-based ray indices")->required();
    add_common(app.add_subcommand("membership"));
    app.get_subcommand("membership")->set_help_flag("--help", "print help");
    app.get_subcommand("membership")->add_option("--h", st.h_expr, "expression in the Cox variables, or JF")->required();

    std::vector<const char*> argv;
    argv.push_back("toric-ej");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "toric-ej: " << e.what() << "\n";
        return 2;
    }

    // the environment seed takes precedence over the flag
    if (const char* env = std::getenv("TORIC_EJ_SEED")) {
        try {
            st.cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "toric-ej: malformed TORIC_EJ_SEED\n";
            return 2;
        }
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), st, out);
    } catch (const InputError& e) {
        err << "toric-ej: input error: " << e.what() << "\n";
        return 2;
    } catch (const Fault& e) {
        err << "toric-ej: computation fault: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace toric
