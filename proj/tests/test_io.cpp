#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hla/error.hpp"
#include "hla/fixtures.hpp"
#include "hla/io.hpp"
#include "hla/selftest.hpp"

using namespace hla;

namespace {

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "hla-io-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

TEST_CASE("algebra files round trip") {
    for (const auto& [name, alg] : fixtures::corpus(6)) {
        CAPTURE(name);
        const std::string text = io::render_algebra(alg);
        CHECK(io::parse_algebra(text) == alg);
        CHECK(io::render_algebra(io::parse_algebra(text)) == text);
    }
}

TEST_CASE("algebra parsing accepts sparse brackets and rejects malformed input") {
    const std::string good = R"({
      "dim": 2, "basis": ["x","y"],
      "bracket": {"0,1": {"1": "1/2"}},
      "phi": [["1","0"],["0","1"]]
    })";
    const HomLieAlgebra alg = io::parse_algebra(good);
    CHECK(alg.bracket_basis(0, 1) == Vec{Rational(0), Rational(1, 2)});
    CHECK(alg.bracket_basis(1, 0) == Vec{Rational(0), Rational(-1, 2)});

    CHECK_THROWS_AS(io::parse_algebra("{"), ParseError);
    CHECK_THROWS_AS(io::parse_algebra(R"({"dim": 2})"), ParseError);  // missing phi
    CHECK_THROWS_AS(io::parse_algebra(R"({"dim": 2, "phi": [["1","0"]]})"), ParseError);
    CHECK_THROWS_AS(
        io::parse_algebra(
            R"({"dim": 2, "bracket": {"1,0": {"0": "1"}}, "phi": [["1","0"],["0","1"]]})"),
        ParseError);  // key must be increasing
    CHECK_THROWS_AS(
        io::parse_algebra(
            R"({"dim": 2, "bracket": {"0,1": {"0": "1/0"}}, "phi": [["1","0"],["0","1"]]})"),
        ParseError);  // zero denominator
    CHECK_THROWS_AS(
        io::parse_algebra(R"({"dim": 2, "bracket": {"0,3": {"0": "1"}}, "phi": [["1","0"],["0","1"]]})"),
        ParseError);  // index out of range
}

TEST_CASE("representation and cochain files round trip") {
    const Representation ad = adjoint(fixtures::sl2());
    const std::string text = io::render_representation(ad);
    Representation back = io::parse_representation(text, fixtures::sl2());
    CHECK(back.module_dim == ad.module_dim);
    CHECK(back.rho == ad.rho);
    CHECK(back.beta == ad.beta);

    Cochain c(2, 3, 3);
    c.set({0, 2}, {Rational(1), Rational(0), Rational(-1, 3)});
    const std::string ctext = io::render_cochain(c);
    CHECK(io::parse_cochain(ctext, 3, 3) == c);

    Cochain c0(0, 3, 3);
    c0.set({}, {Rational(1), Rational(2), Rational(3)});
    CHECK(io::parse_cochain(io::render_cochain(c0), 3, 3) == c0);
}

TEST_CASE("2-algebra, morphism and homotopy files round trip") {
    const HomLie2Algebra der2 = build_der2(fixtures::sl2());
    const std::string text = io::render_two_algebra(der2);
    const HomLie2Algebra back = io::parse_two_algebra(text);
    CHECK(back.dim0 == der2.dim0);
    CHECK(back.dim1 == der2.dim1);
    CHECK(back.d == der2.d);
    CHECK(back.l2_00 == der2.l2_00);
    CHECK(back.l2_01 == der2.l2_01);
    CHECK(back.l3 == der2.l3);
    CHECK(back.phi0 == der2.phi0);
    CHECK(back.phi1 == der2.phi1);
    CHECK(io::render_two_algebra(back) == text);

    const CocyclePair semi = [] {
        for (const auto& fix : selftest::cocycle_corpus())
            if (fix.name == "semidirect-sl2-plane") return fix.c;
        return CocyclePair{};
    }();
    const TwoAlgMorphism f = cocycle_to_morphism(semi);
    const TwoAlgMorphism fback = io::parse_two_morphism(io::render_two_morphism(f));
    CHECK(fback == f);

    const HomotopyData tau{Matrix::of({{1, 2}, {3, 4}})};
    CHECK(io::parse_homotopy(io::render_homotopy(tau)) == tau);
}

TEST_CASE("cocycle, witness and extension files round trip") {
    for (const auto& fix : selftest::cocycle_corpus()) {
        CAPTURE(fix.name);
        CHECK(io::parse_cocycle(io::render_cocycle(fix.c)) == fix.c);
    }
    const IsoWitness w{Matrix::of({{1, 0, 2}})};
    CHECK(io::parse_witness(io::render_witness(w)) == w);

    const CocyclePair c = [] {
        for (const auto& fix : selftest::cocycle_corpus())
            if (fix.name == "affine-line") return fix.c;
        return CocyclePair{};
    }();
    const BuiltExtension ext = build_extension(c);
    const io::ExtensionFile file{c.g, c.h, ext.pres, ext.section};
    const io::ExtensionFile back = io::parse_extension(io::render_extension(file));
    CHECK(back.g == file.g);
    CHECK(back.h == file.h);
    CHECK(back.pres.ghat == file.pres.ghat);
    CHECK(back.pres.iota == file.pres.iota);
    CHECK(back.pres.p == file.pres.p);
    REQUIRE(back.section.has_value());
    CHECK(back.section->s == file.section->s);
}

TEST_CASE("cocycle files may reference algebra files by path") {
    const auto dir = temp_dir();
    write_file(dir / "g.alg", io::render_algebra(fixtures::abelian(1)));
    write_file(dir / "h.alg", io::render_algebra(fixtures::abelian(1)));
    write_file(dir / "c.json", R"({
      "g": "g.alg", "h": "h.alg",
      "rho": [[["1"]]],
      "omega": {}
    })");
    const CocyclePair c = io::load_cocycle((dir / "c.json").string());
    CHECK(c.g == fixtures::abelian(1));
    CHECK(c.rho[0] == Matrix::identity(1));
    CHECK_THROWS_AS(io::load_cocycle((dir / "missing.json").string()), ParseError);
}

TEST_CASE("matrix files") {
    const Matrix m = Matrix::of({{1, 2}, {3, 4}});
    CHECK(io::parse_matrix_file(io::render_matrix_file(m)) == m);
    CHECK_THROWS_AS(io::parse_matrix_file(R"({"matrix": [["1","2"],["3"]]})"), ParseError);
}

TEST_CASE("report rendering is deterministic and records are single-line") {
    const CheckReport r = verify(fixtures::abelian(2, Matrix(2, 2)));  // phi singular
    const std::string records = io::render_report_records(r);
    CHECK(records == io::render_report_records(r));
    CHECK(records.find("check=phi-invertible") != std::string::npos);
    CHECK(records.find("pass=false") != std::string::npos);
    const std::string text = io::render_report_text(r);
    CHECK(text.find("[FAIL] phi-invertible") != std::string::npos);
}
