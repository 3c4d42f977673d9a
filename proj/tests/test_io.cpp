#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "driver.hpp"
#include "io.hpp"

#include <fstream>
#include <sstream>

using namespace fukalg;

namespace {

std::string example(const std::string& name) {
    return std::string(FUKALG_EXAMPLES_DIR) + "/" + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

struct RunResult {
    int rc;
    std::string out, err;
};

RunResult cli(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int rc = run(std::vector<std::string>(args), out, err);
    return {rc, out.str(), err.str()};
}

// Equality of the structure maps, ignoring zero components.
bool same_ops(const AInftyBimodule& a, const AInftyBimodule& b) {
    for (const AInftyBimodule* side : {&a, &b})
        for (const auto& [qp, m] : side->ops()) {
            const MultiMap* other =
                (side == &a ? b : a).op_if(qp.first, qp.second);
            if (other ? !(*other == m) : !m.is_zero()) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("bundled examples are canonical: emit after parse is identical") {
    for (const char* name :
         {"kronecker.json", "kronecker_h.json", "interval.json",
          "constant_strip.json"}) {
        std::string text = io::read_file(example(name));
        std::string kind = io::document_kind(text);
        std::string again;
        if (kind == "ainfty_algebra")
            again = io::emit_algebra(io::parse_algebra(text));
        else if (kind == "boundary_algebra")
            again = io::emit_boundary(io::parse_boundary(text));
        else
            again = io::emit_cr_operator(io::parse_cr_operator(text));
        CHECK(again == text);
    }
}

TEST_CASE("algebra round trip is structurally stable") {
    AInftyAlgebra A = io::parse_algebra(io::read_file(example("kronecker.json")));
    AInftyAlgebra B = io::parse_algebra(io::emit_algebra(A));
    CHECK(A.space() == B.space());
    CHECK(A.d_max() == B.d_max());
    CHECK(A.directed() == B.directed());
    for (int d = 1; d <= A.d_max(); ++d) CHECK(A.mu(d) == B.mu(d));
}

TEST_CASE("bimodule, hom, cochain, and cr documents round trip") {
    UnitalAInftyAlgebra UA = adjoin_units(
        io::parse_algebra(io::read_file(example("kronecker_h.json"))));
    AInftyBimodule D = diagonal(UA);
    AInftyBimodule D2 = io::parse_bimodule(io::emit_bimodule(D));
    CHECK(D.space() == D2.space());
    CHECK(same_ops(D, D2));
    CHECK(io::emit_bimodule(D) == io::emit_bimodule(D2));

    BimoduleHom phi = identity_hom(D);
    BimoduleHom phi2 = io::parse_hom(io::emit_hom(phi));
    CHECK(phi.comps() == phi2.comps());
    CHECK(io::emit_hom(phi) == io::emit_hom(phi2));

    HochschildCochain c = zero_cochain(D);
    c.comp0.set(D.space().index_of("e1"), true);
    c.comps[0].add_entry_names({"x"}, {"y"});
    HochschildCochain c2 = io::parse_cochain(io::emit_cochain(c));
    CHECK(c.comp0 == c2.comp0);
    CHECK(c.comps == c2.comps);

    std::string cr = io::read_file(example("constant_strip.json"));
    CHECK(io::emit_cr_operator(io::parse_cr_operator(cr)) == cr);
}

TEST_CASE("schema violations are rejected with diagnostics") {
    // unknown key
    CHECK_THROWS_WITH_AS(
        io::parse_algebra(R"({"kind":"ainfty_algebra","m":1,"directed":true,
            "d_max":1,"generators":[],"ops":[],"extra":0})"),
        doctest::Contains("unknown key 'extra'"), InputError);
    // duplicate generator name
    CHECK_THROWS_AS(
        io::parse_algebra(R"({"kind":"ainfty_algebra","m":2,"directed":true,
            "d_max":1,
            "generators":[{"name":"x","src":1,"tgt":2,"deg":0},
                          {"name":"x","src":1,"tgt":2,"deg":0}],
            "ops":[]})"),
        InputError);
    // non-composable op entry
    CHECK_THROWS_WITH_AS(
        io::parse_algebra(R"({"kind":"ainfty_algebra","m":2,"directed":true,
            "d_max":2,
            "generators":[{"name":"x","src":1,"tgt":2,"deg":0}],
            "ops":[{"arity":2,"inputs":["x","x"],"output":[]}]})"),
        doctest::Contains("non-composable"), InputError);
    // wrong kind
    CHECK_THROWS_AS(
        io::parse_boundary(io::read_file(example("kronecker.json"))),
        InputError);
    // malformed JSON
    CHECK_THROWS_AS(io::parse_algebra("{"), InputError);
    // bad cr role
    CHECK_THROWS_AS(io::parse_cr_operator(
                        R"({"kind":"cr_operator","euler":1,"arcs":[],
            "ends":[{"role":"sideways","theta0":0,"theta1":1,
                     "a":{"const":0}}]})"),
                    InputError);
}

TEST_CASE("driver: checks, reports, and exit codes") {
    RunResult r = cli({"ainfty", "check", example("kronecker.json")});
    CHECK(r.rc == 0);
    CHECK(r.out == "relations: ok\n");

    r = cli({"ext", "dim", "--alg", example("kronecker_h.json"), "--M",
             "dual_diagonal", "--N", "diagonal", "--k", "1"});
    CHECK(r.rc == 0);
    CHECK(r.out == "3\n");

    r = cli({"crindex", "index", example("constant_strip.json")});
    CHECK(r.rc == 0);
    CHECK(r.out.find("deg = -1\n") != std::string::npos);
    CHECK(r.out.find("index = 0\n") != std::string::npos);

    r = cli({"bnd", "check", example("interval.json")});
    CHECK(r.rc == 0);
    r = cli({"bnd", "homology", example("interval.json")});
    CHECK(r.rc == 0);
    CHECK(r.out.find("dim H total = 2") != std::string::npos);

    // determinism: identical invocations give identical reports
    RunResult again = cli({"crindex", "spectrum", example("constant_strip.json"),
                           "--k", "3"});
    RunResult again2 = cli({"crindex", "spectrum",
                            example("constant_strip.json"), "--k", "3"});
    CHECK(again.rc == 0);
    CHECK(again.out == again2.out);

    // input errors
    CHECK(cli({"ainfty", "check", "no_such_file.json"}).rc == 2);
    CHECK(cli({"nonsense"}).rc == 2);
    CHECK(cli({"ainfty", "check", example("interval.json")}).rc == 2);
}

TEST_CASE("driver: property failures exit with code 1") {
    // mu^1 that does not square to zero
    write_file("tmp_bad_alg.json",
               R"({"kind":"ainfty_algebra","m":2,"directed":true,"d_max":1,
        "generators":[{"name":"p","src":1,"tgt":2,"deg":0},
                      {"name":"q","src":1,"tgt":2,"deg":0}],
        "ops":[{"arity":1,"inputs":["p"],"output":["q"]},
               {"arity":1,"inputs":["q"],"output":["p"]}]})");
    RunResult r = cli({"ainfty", "check", "tmp_bad_alg.json"});
    CHECK(r.rc == 1);
    CHECK(r.out.find("violation") != std::string::npos);

    // asymmetric D
    write_file("tmp_bad_bnd.json",
               R"({"kind":"boundary_algebra","n":0,
        "generators":[{"name":"1","deg":0},{"name":"x","deg":1}],
        "products":[{"left":"1","right":"1","output":["1"]},
                    {"left":"1","right":"x","output":["x"]},
                    {"left":"x","right":"1","output":["x"]}],
        "unit":["1"],"D":[{"s":"x","t":"1"}]})");
    r = cli({"bnd", "check", "tmp_bad_bnd.json"});
    CHECK(r.rc == 1);
    CHECK(r.out.find("symmetric") != std::string::npos);
}

TEST_CASE("driver: dual and homotopic run end to end") {
    UnitalAInftyAlgebra UA = adjoin_units(
        io::parse_algebra(io::read_file(example("kronecker_h.json"))));
    AInftyBimodule D = diagonal(UA);
    write_file("tmp_diag.json", io::emit_bimodule(D));
    RunResult r = cli({"bimod", "check", "tmp_diag.json"});
    CHECK(r.rc == 0);

    r = cli({"bimod", "dual", "tmp_diag.json"});
    CHECK(r.rc == 0);
    AInftyBimodule Dv = io::parse_bimodule(r.out);
    CHECK(same_ops(Dv, dual(D)));

    write_file("tmp_id.json", io::emit_hom(identity_hom(D)));
    write_file("tmp_zero.json", io::emit_hom(BimoduleHom(D, D)));
    CHECK(cli({"bimod", "homotopic", "tmp_id.json", "tmp_id.json"}).rc == 0);
    CHECK(cli({"bimod", "homotopic", "tmp_id.json", "tmp_zero.json"}).rc == 1);
    CHECK(cli({"bimod", "delta", "tmp_id.json"}).rc == 0);
}
