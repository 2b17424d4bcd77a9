#include "actorkit/io.hpp"

#include <fstream>

namespace actorkit {

Json field_to_json(const Field& f) {
    if (f.is_rational()) return Json("Q");
    return Json{{"GF", f.prime()}};
}

Field field_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return Field::rationals();
        throw Error("unknown field '" + j.get<std::string>() + "' (expected \"Q\" or {\"GF\": p})");
    }
    if (j.is_object() && j.contains("GF") && j["GF"].is_number_integer())
        return Field::gf(j["GF"].get<std::int64_t>());
    throw Error("bad field descriptor (expected \"Q\" or {\"GF\": p})");
}

Json algebra_to_json(const Algebra& a) {
    Json j;
    j["name"] = a.name();
    j["field"] = field_to_json(a.field());
    j["dim"] = a.dim();
    j["basis"] = a.basis_names();
    Json prods = Json::array();
    std::size_t n = a.dim();
    for (std::size_t r = 0; r < a.num_products(); ++r) {
        Json p;
        p["name"] = a.product_name(r);
        Json entries = Json::array();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t jj = 0; jj < n; ++jj)
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar& c = a.sc(r, i, jj, k);
                    if (!c.is_zero()) entries.push_back(Json::array({i, jj, k, c.str()}));
                }
        p["entries"] = std::move(entries);
        prods.push_back(std::move(p));
    }
    j["products"] = std::move(prods);
    return j;
}

Algebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw Error("algebra file must hold a JSON object");
    for (const char* key : {"field", "dim", "products"})
        if (!j.contains(key)) throw Error(std::string("algebra file lacks \"") + key + "\"");
    std::string name = j.value("name", "unnamed");
    Field f = field_from_json(j.at("field"));
    if (!j.at("dim").is_number_unsigned()) throw Error("\"dim\" must be a non-negative integer");
    std::size_t n = j.at("dim").get<std::size_t>();
    std::vector<std::string> basis;
    if (j.contains("basis")) {
        for (const auto& b : j.at("basis")) basis.push_back(b.get<std::string>());
        if (basis.size() != n) throw Error("\"basis\" must list exactly dim labels");
    }
    if (!j.at("products").is_array() || j.at("products").empty())
        throw Error("\"products\" must be a non-empty list");
    std::vector<ProductTable> prods;
    for (const auto& pj : j.at("products")) {
        ProductTable t{pj.value("name", "mul"), std::vector<Scalar>(n * n * n, f.zero())};
        if (pj.contains("entries")) {
            for (const auto& e : pj.at("entries")) {
                if (!e.is_array() || e.size() != 4)
                    throw Error("product entry must be [i, j, k, \"coeff\"]");
                std::size_t i = e[0].get<std::size_t>();
                std::size_t jj = e[1].get<std::size_t>();
                std::size_t k = e[2].get<std::size_t>();
                if (i >= n || jj >= n || k >= n)
                    throw Error("product entry index out of range in '" + t.name + "'");
                std::size_t idx = (i * n + jj) * n + k;
                if (!t.c[idx].is_zero())
                    throw Error("duplicate product entry (" + std::to_string(i) + "," +
                                std::to_string(jj) + "," + std::to_string(k) + ")");
                if (e[3].is_string())
                    t.c[idx] = f.parse(e[3].get<std::string>());
                else if (e[3].is_number_integer())
                    t.c[idx] = f.from_int(e[3].get<std::int64_t>());
                else
                    throw Error("product coefficient must be a scalar string or integer");
            }
        }
        prods.push_back(std::move(t));
    }
    return Algebra(std::move(name), f, n, std::move(basis), std::move(prods));
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

Algebra load_algebra(const std::string& path) {
    return algebra_from_json(read_json_file(path));
}

VarietyPreset variety_from_json(const Json& j) {
    if (!j.is_object()) throw Error("variety file must hold a JSON object");
    if (j.contains("preset")) {
        auto v = find_preset(j.at("preset").get<std::string>());
        if (!v) throw Error("unknown preset '" + j.at("preset").get<std::string>() + "'");
        return *v;
    }
    VarietyPreset v;
    v.name = j.value("name", "custom");
    v.num_products = j.value("products", 1u);
    if (v.num_products < 1 || v.num_products > 2)
        throw Error("\"products\" must be 1 or 2");
    if (!j.contains("identities") || !j.at("identities").is_array() || j.at("identities").empty())
        throw Error("variety file needs a non-empty \"identities\" list");
    for (const auto& s : j.at("identities"))
        v.identities.push_back(parse_identity(s.get<std::string>(), v.num_products));
    if (j.contains("lambda_mu")) {
        const auto& lm = j.at("lambda_mu");
        if (!lm.contains("lambda") || !lm.contains("mu") || lm.at("lambda").size() != 8 ||
            lm.at("mu").size() != 8)
            throw Error("\"lambda_mu\" needs 8 lambda and 8 mu scalars");
        LambdaMuRules rules;
        for (std::size_t i = 0; i < 8; ++i) {
            rules.lambda[i] = lm.at("lambda")[i].is_string()
                                  ? lm.at("lambda")[i].get<std::string>()
                                  : std::to_string(lm.at("lambda")[i].get<std::int64_t>());
            rules.mu[i] = lm.at("mu")[i].is_string()
                              ? lm.at("mu")[i].get<std::string>()
                              : std::to_string(lm.at("mu")[i].get<std::int64_t>());
        }
        v.lambda_mu = rules;
        v.product_rule = ActorProductRule::LambdaMu;
    }
    return v;
}

VarietyPreset load_variety(const std::string& path) {
    return variety_from_json(read_json_file(path));
}

VarietyPreset resolve_variety(const std::string& name_or_path) {
    if (auto v = find_preset(name_or_path)) return *v;
    return load_variety(name_or_path);
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

Json subspace_to_json(const Subspace& s) {
    Json j;
    j["ambient_dim"] = s.ambient_dim();
    j["dim"] = s.dim();
    Json basis = Json::array();
    for (const auto& row : s.basis()) basis.push_back(vec_to_json(row));
    j["basis"] = std::move(basis);
    return j;
}

Json actor_element_to_json(const ActorElement& e) {
    Json j;
    j["left"] = matrix_to_json(e.left);
    j["right"] = matrix_to_json(e.right);
    return j;
}

}  // namespace actorkit
