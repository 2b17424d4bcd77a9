// Writes the bundled example data files. Run from the repository root:
//   actorkit-gen-data data
// The octonion table comes from the Cayley-Dickson doubling, the matrix
// algebra from the E_ab E_cd = delta_bc E_ad rule; nothing is hand-typed.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "actorkit/builders.hpp"
#include "actorkit/io.hpp"

using namespace actorkit;
using namespace actorkit::builders;

namespace {

void write_json(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << path.string() << "\n";
}

void write_algebra(const std::filesystem::path& dir, const std::string& file, Algebra a) {
    write_json(dir / file, algebra_to_json(a));
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(dir / "varieties");
    const Field q = Field::rationals();
    const Field g2 = Field::gf(2);
    const Field g5 = Field::gf(5);

    write_algebra(dir, "f_q.json", field_algebra(q));
    write_algebra(dir, "fxf_q.json", product_of_fields(q));
    write_algebra(dir, "dual_q.json", dual_numbers(q));
    write_algebra(dir, "m2_q.json", matrix2(q));
    write_algebra(dir, "m2_gf5.json", matrix2(g5));
    write_algebra(dir, "abelian2_q.json", abelian(q, 2));
    write_algebra(dir, "lie2_q.json", lie2_nonabelian(q));
    write_algebra(dir, "oct_q.json", octonions(q));
    write_algebra(dir, "m2_pois_q.json", poisson_from_commutator(matrix2(q), "m2_pois"));
    write_algebra(dir, "dual_pois_q.json", poisson_zero_bracket(dual_numbers(q), "dual_pois"));
    write_algebra(dir, "fxf_pois_q.json", poisson_zero_bracket(product_of_fields(q), "fxf_pois"));
    write_algebra(dir, "gf2_unit.json", field_algebra(g2));
    write_algebra(dir, "idem_gf2.json", idempotent_line(g2));
    write_algebra(dir, "nil_gf2.json", nilpotent_line(g2));

    for (const char* name : {"assoc", "cassoc", "lie", "alt", "abalg", "pois"})
        write_json(dir / "varieties" / (std::string(name) + ".json"), Json{{"preset", name}});

    // An explicit variety file exercising the non-preset path.
    Json explicit_assoc;
    explicit_assoc["name"] = "assoc_explicit";
    explicit_assoc["products"] = 1;
    explicit_assoc["identities"] = Json::array({"(x1*x2)*x3 - x1*(x2*x3)"});
    explicit_assoc["lambda_mu"] = Json{{"lambda", {"1", "0", "0", "0", "0", "0", "0", "0"}},
                                       {"mu", {"0", "0", "0", "0", "0", "0", "0", "1"}}};
    write_json(dir / "varieties" / "assoc_explicit.json", explicit_assoc);
    return 0;
}
