// actorkit command line: load algebra/variety files, run the actor
// computations, and verify the representability properties on concrete
// algebras. Reports go to stdout as text or JSON (byte-stable across runs).

#include <CLI11.hpp>

#include <iostream>
#include <memory>

#include "actorkit/builders.hpp"
#include "actorkit/extensions.hpp"
#include "actorkit/io.hpp"
#include "actorkit/poisson.hpp"

using namespace actorkit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string algebra_path;
    std::string b_path, x_path, phi_path;
    std::string variety;  // preset name or path
    std::string field;    // optional assertion: Q or GF<p>
    std::string format = "text";
    std::uint64_t budget = 0;  // 0 = default / env
    int i = 0, j = 0;
    int product = -1;
};

Field parse_field_flag(const std::string& s) {
    if (s == "Q" || s == "q") return Field::rationals();
    if (s.size() > 2 && (s.rfind("GF", 0) == 0 || s.rfind("gf", 0) == 0))
        return Field::gf(std::stoll(s.substr(2)));
    throw Error("bad --field value '" + s + "' (expected Q or GF<p>)");
}

Algebra load_checked(const std::string& path, const Options& opt) {
    Algebra a = load_algebra(path);
    if (!opt.field.empty()) {
        Field f = parse_field_flag(opt.field);
        if (!(a.field() == f))
            throw Error("algebra '" + a.name() + "' is over " + a.field().str() +
                        ", but --field demands " + f.str());
    }
    return a;
}

std::uint64_t budget_of(const Options& opt) {
    return opt.budget ? opt.budget : default_budget();
}

void emit(const Json& report, const Options& opt) {
    if (opt.format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // Plain text: flat key/value lines, arrays summarized by their JSON form.
    for (const auto& [key, value] : report.items()) {
        if (value.is_string())
            std::cout << key << ": " << value.get<std::string>() << "\n";
        else
            std::cout << key << ": " << value.dump() << "\n";
    }
}

Json actor_space_report(const ActorSpace& s) {
    Json j;
    j["algebra"] = s.algebra().name();
    j["variety"] = s.variety().name;
    j["algebra_dim"] = s.algebra().dim();
    j["actor_dim"] = s.dim();
    Json basis = Json::array();
    for (const auto& e : s.basis()) basis.push_back(actor_element_to_json(e));
    j["basis"] = std::move(basis);
    return j;
}

int cmd_validate(const Options& opt) {
    Json rep;
    rep["command"] = "validate";
    Algebra a = load_checked(opt.algebra_path, opt);
    rep["algebra"] = a.name();
    rep["field"] = field_to_json(a.field());
    rep["dim"] = a.dim();
    rep["products"] = a.num_products();
    rep["well_formed"] = true;
    bool ok = true;
    if (!opt.variety.empty()) {
        VarietyPreset v = resolve_variety(opt.variety);
        rep["variety"] = v.name;
        try {
            require_in_variety(a, v);
            rep["in_variety"] = true;
        } catch (const Error& e) {
            rep["in_variety"] = false;
            rep["reason"] = e.what();
            ok = false;
        }
    }
    emit(rep, opt);
    return ok ? kExitPass : kExitFail;
}

int cmd_actor_compute(const Options& opt) {
    Algebra a = load_checked(opt.algebra_path, opt);
    ActorSpace s = external_weak_actor(a, resolve_variety(opt.variety));
    Json rep;
    rep["command"] = "actor compute";
    rep.update(actor_space_report(s));
    emit(rep, opt);
    return kExitPass;
}

int cmd_actor_inn(const Options& opt) {
    Algebra a = load_checked(opt.algebra_path, opt);
    ActorSpace s = external_weak_actor(a, resolve_variety(opt.variety));
    InnReport inn = inn_map(a, s);
    Json rep;
    rep["command"] = "actor inn";
    rep["algebra"] = a.name();
    rep["variety"] = s.variety().name;
    rep["actor_dim"] = s.dim();
    rep["kernel_dim"] = inn.kernel.dim();
    rep["injective"] = inn.injective;
    rep["surjective"] = inn.surjective;
    rep["bijective"] = inn.bijective;
    emit(rep, opt);
    return kExitPass;
}

int cmd_actor_product(const Options& opt) {
    Algebra a = load_checked(opt.algebra_path, opt);
    ActorSpace s = external_weak_actor(a, resolve_variety(opt.variety));
    if (opt.i < 0 || opt.j < 0 || static_cast<std::size_t>(opt.i) >= s.dim() ||
        static_cast<std::size_t>(opt.j) >= s.dim())
        throw Error("basis indices out of range (actor dim " + std::to_string(s.dim()) + ")");
    auto h = partial_product(s, s.basis()[opt.i], s.basis()[opt.j]);
    Json rep;
    rep["command"] = "actor product";
    rep["algebra"] = a.name();
    rep["variety"] = s.variety().name;
    rep["i"] = opt.i;
    rep["j"] = opt.j;
    rep["defined"] = h.has_value();
    if (h) rep["result"] = actor_element_to_json(*h);
    emit(rep, opt);
    return kExitPass;
}

int cmd_usga_compute(const Options& opt) {
    Algebra a = load_checked(opt.algebra_path, opt);
    PoissonActorSpace s = usga(a);
    bool d_zero = true;
    Json basis = Json::array();
    for (const auto& e : s.basis()) {
        if (!e.der.is_zero()) d_zero = false;
        Json t;
        t["left"] = matrix_to_json(e.left);
        t["right"] = matrix_to_json(e.right);
        t["der"] = matrix_to_json(e.der);
        basis.push_back(std::move(t));
    }
    Json rep;
    rep["command"] = "usga compute";
    rep["algebra"] = a.name();
    rep["algebra_dim"] = a.dim();
    rep["usga_dim"] = s.dim();
    rep["d_components_zero"] = d_zero;
    rep["basis"] = std::move(basis);
    emit(rep, opt);
    return kExitPass;
}

int cmd_center(const Options& opt) {
    Algebra a = load_checked(opt.algebra_path, opt);
    std::size_t idx = opt.product >= 0 ? static_cast<std::size_t>(opt.product)
                                       : a.num_products() - 1;
    Subspace z = lie_center(a, idx);
    Json rep;
    rep["command"] = "center";
    rep["algebra"] = a.name();
    rep["product"] = a.product_name(idx);
    rep["center"] = subspace_to_json(z);
    emit(rep, opt);
    return kExitPass;
}

int cmd_semidirect(const Options& opt) {
    Algebra B = load_checked(opt.b_path, opt);
    Algebra X = load_checked(opt.x_path, opt);
    VarietyPreset v = resolve_variety(opt.variety);
    Json pj = read_json_file(opt.phi_path);
    if (!pj.contains("matrix")) throw Error("phi file needs a \"matrix\" (X-dim x B-dim)");
    const auto& mj = pj.at("matrix");
    Matrix psi(X.field(), X.dim(), B.dim());
    if (mj.size() != X.dim()) throw Error("phi matrix must have X-dim rows");
    for (std::size_t r = 0; r < X.dim(); ++r) {
        if (mj[r].size() != B.dim()) throw Error("phi matrix must have B-dim columns");
        for (std::size_t c = 0; c < B.dim(); ++c)
            psi.at(r, c) = mj[r][c].is_string() ? X.field().parse(mj[r][c].get<std::string>())
                                                : X.field().from_int(mj[r][c].get<std::int64_t>());
    }
    // The linear map B -> X acts through the inner pairs of X.
    std::shared_ptr<const ActorSpace> s;
    if (v.num_products == 1) {
        s = std::make_shared<const ActorSpace>(external_weak_actor(X, v));
    } else {
        s = std::make_shared<const ActorSpace>(
            external_weak_actor(X.with_single_product(0), *find_preset("assoc")));
    }
    std::vector<ActorElement> images;
    for (std::size_t bi = 0; bi < B.dim(); ++bi)
        images.push_back(inn_element(X.num_products() == 1 ? X : X.with_single_product(0),
                                     psi.column(bi)));
    ActingMorphism phi = make_acting_morphism(B, s, images);
    SemidirectResult r = semidirect_product(B, X, phi, v);
    Json rep;
    rep["command"] = "semidirect";
    rep["B"] = B.name();
    rep["X"] = X.name();
    rep["variety"] = v.name;
    rep["algebra"] = algebra_to_json(r.A);
    rep["variety_check"] = "passed";
    emit(rep, opt);
    return kExitPass;
}

int cmd_enumerate(const Options& opt) {
    Algebra B = load_checked(opt.b_path, opt);
    Algebra X = load_checked(opt.x_path, opt);
    VarietyPreset v = resolve_variety(opt.variety);
    auto exts = enumerate_split_extensions(B, X, v, budget_of(opt));
    Json rep;
    rep["command"] = "enumerate";
    rep["B"] = B.name();
    rep["X"] = X.name();
    rep["variety"] = v.name;
    rep["budget"] = budget_of(opt);
    rep["split_extensions"] = exts.size();
    emit(rep, opt);
    return kExitPass;
}

int cmd_verify_thm_assoc1(const Options& opt) {
    Algebra a = load_checked(opt.algebra_path, opt);
    VarietyPreset v = opt.variety.empty() ? *find_preset("assoc") : resolve_variety(opt.variety);
    Json rep;
    rep["command"] = "verify thm-assoc1";
    rep["algebra"] = a.name();
    rep["variety"] = v.name;
    bool unital = find_unit(a).has_value();
    rep["unital"] = unital;
    ActorSpace s = external_weak_actor(a, v);
    InnReport inn = inn_map(a, s);
    rep["algebra_dim"] = a.dim();
    rep["actor_dim"] = s.dim();
    rep["inn_bijective"] = inn.bijective;
    bool pass = unital && s.dim() == a.dim() && inn.bijective;
    rep["pass"] = pass;
    emit(rep, opt);
    return pass ? kExitPass : kExitFail;
}

int cmd_verify_thm_alt(const Options& opt) {
    Algebra a = load_checked(opt.algebra_path, opt);
    Json rep;
    rep["command"] = "verify thm-alt";
    rep["algebra"] = a.name();
    bool unital = find_unit(a).has_value();
    rep["unital"] = unital;
    ActorSpace s = external_weak_actor(a, *find_preset("alt"));
    InnReport inn = inn_map(a, s);
    rep["algebra_dim"] = a.dim();
    rep["actor_dim"] = s.dim();
    rep["inn_bijective"] = inn.bijective;
    // Cross-check the computed space against the four displayed equations.
    bool equations_ok = true;
    for (const auto& e : s.basis())
        if (!alt_actor_equations_check(e, a)) equations_ok = false;
    rep["basis_satisfies_displayed_equations"] = equations_ok;
    bool pass = unital && s.dim() == a.dim() && inn.bijective && equations_ok;
    rep["pass"] = pass;
    emit(rep, opt);
    return pass ? kExitPass : kExitFail;
}

int cmd_verify_thm_pois(const Options& opt) {
    Algebra a = load_checked(opt.algebra_path, opt);
    CenterActorReport r = z_center_actor_check(a);
    Json rep;
    rep["command"] = "verify thm-pois";
    rep["algebra"] = a.name();
    rep["center_dim"] = r.center_dim;
    rep["usga_dim"] = r.usga_dim;
    rep["unit_in_center"] = r.unit_in_center;
    rep["center_closed"] = r.center_closed;
    rep["center_bracket_trivial"] = r.center_bracket_trivial;
    rep["d_components_zero"] = r.d_components_zero;
    rep["center_to_usga_bijective"] = r.bijective;
    rep["pass"] = r.pass;
    emit(rep, opt);
    return r.pass ? kExitPass : kExitFail;
}

int cmd_verify_bijection(const Options& opt) {
    Algebra B = load_checked(opt.b_path, opt);
    Algebra X = load_checked(opt.x_path, opt);
    VarietyPreset v = resolve_variety(opt.variety);
    BijectionReport r = verify_bijection(B, X, v, budget_of(opt));
    Json rep;
    rep["command"] = "verify bijection";
    rep["B"] = B.name();
    rep["X"] = X.name();
    rep["variety"] = v.name;
    rep["split_extensions"] = r.split_extensions;
    rep["acting_morphisms"] = r.variety_morphisms;
    rep["match"] = r.match;
    if (!r.match)
        rep["witness"] = std::to_string(r.split_extensions) + " extension classes vs " +
                         std::to_string(r.variety_morphisms) + " morphisms";
    rep["detail"] = r.detail;
    emit(rep, opt);
    return r.match ? kExitPass : kExitFail;
}

int cmd_verify_eq2(const Options& opt) {
    Algebra a = load_checked(opt.algebra_path, opt);
    VarietyPreset v = opt.variety.empty() ? *find_preset("assoc") : resolve_variety(opt.variety);
    ActorSpace s = external_weak_actor(a, v);
    Json rep;
    rep["command"] = "verify eq2";
    rep["algebra"] = a.name();
    rep["variety"] = v.name;
    rep["actor_dim"] = s.dim();
    bool all = true;
    Json witness;
    for (std::size_t i = 0; i < s.dim() && all; ++i)
        for (std::size_t j = 0; j < s.dim() && all; ++j)
            if (!permutability_check(s.basis()[i], s.basis()[j])) {
                all = false;
                witness["i"] = i;
                witness["j"] = j;
            }
    rep["all_pairs_permutable"] = all;
    if (!all) rep["witness"] = witness;
    emit(rep, opt);
    return all ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"actorkit: exact actor computations for finite-dimensional algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", opt.format, "Output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        c->add_option("--field", opt.field, "Require this scalar field (Q or GF<p>)");
    };

    auto* validate = app.add_subcommand("validate", "Check an algebra file (and variety)");
    validate->add_option("--algebra", opt.algebra_path, "Algebra file")->required();
    validate->add_option("--variety,--preset", opt.variety, "Variety file or preset name");
    add_common(validate);

    auto* actor = app.add_subcommand("actor", "External weak actor computations");
    actor->require_subcommand(1);
    auto* ac = actor->add_subcommand("compute", "Compute E(X) and print its basis");
    auto* ai = actor->add_subcommand("inn", "The canonical map X -> E(X)");
    auto* ap = actor->add_subcommand("product", "Partial product of two basis elements");
    for (CLI::App* c : {ac, ai, ap}) {
        c->add_option("--algebra", opt.algebra_path, "Algebra file")->required();
        c->add_option("--variety,--preset", opt.variety, "Variety file or preset name")
            ->required();
        add_common(c);
    }
    ap->add_option("-i", opt.i, "First basis index")->required();
    ap->add_option("-j", opt.j, "Second basis index")->required();

    auto* usga_cmd = app.add_subcommand("usga", "Universal strict general actor");
    usga_cmd->require_subcommand(1);
    auto* uc = usga_cmd->add_subcommand("compute", "Compute [X] for a Poisson algebra");
    uc->add_option("--algebra", opt.algebra_path, "Two-product algebra file")->required();
    add_common(uc);

    auto* center = app.add_subcommand("center", "Lie center of a bracket product");
    center->add_option("--algebra", opt.algebra_path, "Algebra file")->required();
    center->add_option("--product", opt.product, "Product index (default: last)");
    add_common(center);

    auto* sd = app.add_subcommand("semidirect", "Semidirect product from a map B -> X");
    sd->add_option("--B", opt.b_path, "Acting algebra file")->required();
    sd->add_option("--X", opt.x_path, "Kernel algebra file")->required();
    sd->add_option("--phi", opt.phi_path, "JSON file with the matrix of B -> X")->required();
    sd->add_option("--variety,--preset", opt.variety, "Variety file or preset name")->required();
    add_common(sd);

    auto* en = app.add_subcommand("enumerate", "Enumerate split extensions over GF(p)");
    en->add_option("--B", opt.b_path, "Acting algebra file")->required();
    en->add_option("--X", opt.x_path, "Kernel algebra file")->required();
    en->add_option("--variety,--preset", opt.variety, "Variety file or preset name")->required();
    en->add_option("--budget", opt.budget, "Candidate budget (default 65536)");
    add_common(en);

    auto* verify = app.add_subcommand("verify", "Verify representability properties");
    verify->require_subcommand(1);
    auto* v1 = verify->add_subcommand("thm-assoc1", "Unital (commutative) associative actor");
    auto* v2 = verify->add_subcommand("thm-alt", "Unital alternative actor");
    auto* v3 = verify->add_subcommand("thm-pois", "Unital Poisson actor vs the Lie center");
    for (CLI::App* c : {v1, v3}) {
        c->add_option("--algebra", opt.algebra_path, "Algebra file")->required();
        add_common(c);
    }
    v1->add_option("--variety,--preset", opt.variety, "assoc (default) or cassoc");
    v2->add_option("--algebra", opt.algebra_path, "Algebra file")->required();
    add_common(v2);
    auto* v4 = verify->add_subcommand("bijection", "Split-extension census vs morphism count");
    v4->add_option("--B", opt.b_path, "Acting algebra file")->required();
    v4->add_option("--X", opt.x_path, "Kernel algebra file")->required();
    v4->add_option("--variety,--preset", opt.variety, "Variety file or preset name")->required();
    v4->add_option("--budget", opt.budget, "Candidate budget (default 65536)");
    add_common(v4);
    auto* v5 = verify->add_subcommand("eq2", "Permutability of all actor basis pairs");
    v5->add_option("--algebra", opt.algebra_path, "Algebra file")->required();
    v5->add_option("--variety,--preset", opt.variety, "Variety file or preset name");
    add_common(v5);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*validate) return cmd_validate(opt);
        if (*ac) return cmd_actor_compute(opt);
        if (*ai) return cmd_actor_inn(opt);
        if (*ap) return cmd_actor_product(opt);
        if (*uc) return cmd_usga_compute(opt);
        if (*center) return cmd_center(opt);
        if (*sd) return cmd_semidirect(opt);
        if (*en) return cmd_enumerate(opt);
        if (*v1) return cmd_verify_thm_assoc1(opt);
        if (*v2) return cmd_verify_thm_alt(opt);
        if (*v3) return cmd_verify_thm_pois(opt);
        if (*v4) return cmd_verify_bijection(opt);
        if (*v5) return cmd_verify_eq2(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
