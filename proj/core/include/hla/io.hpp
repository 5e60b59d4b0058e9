#pragma once

#include <optional>
#include <string>

#include "hla/dghla.hpp"
#include "hla/extensions.hpp"
#include "hla/homlie.hpp"
#include "hla/homlie2.hpp"
#include "hla/rep.hpp"
#include "hla/report.hpp"

namespace hla::io {

/// All parsers throw ParseError on malformed text; `origin` is used in the
/// message (a file path or "<string>"). All renderers emit canonical JSON:
/// sorted keys, canonical rational strings, zero entries omitted, trailing
/// newline. parse(render(x)) == x for every value.

std::string read_file(const std::string& path);  // throws ParseError when unreadable

HomLieAlgebra parse_algebra(const std::string& text, const std::string& origin = "<string>");
std::string render_algebra(const HomLieAlgebra& alg);
HomLieAlgebra load_algebra(const std::string& path);

Representation parse_representation(const std::string& text, const HomLieAlgebra& alg,
                                    const std::string& origin = "<string>");
std::string render_representation(const Representation& rep);
Representation load_representation(const std::string& path, const HomLieAlgebra& alg);

Cochain parse_cochain(const std::string& text, std::size_t alg_dim, std::size_t module_dim,
                      const std::string& origin = "<string>");
std::string render_cochain(const Cochain& c);

HomLie2Algebra parse_two_algebra(const std::string& text, const std::string& origin = "<string>");
std::string render_two_algebra(const HomLie2Algebra& v);
HomLie2Algebra load_two_algebra(const std::string& path);

TwoAlgMorphism parse_two_morphism(const std::string& text, const std::string& origin = "<string>");
std::string render_two_morphism(const TwoAlgMorphism& f);
TwoAlgMorphism load_two_morphism(const std::string& path);

HomotopyData parse_homotopy(const std::string& text, const std::string& origin = "<string>");
std::string render_homotopy(const HomotopyData& tau);
HomotopyData load_homotopy(const std::string& path);

/// `g` and `h` may be inline algebra objects or path strings resolved
/// relative to base_dir.
CocyclePair parse_cocycle(const std::string& text, const std::string& base_dir = "",
                          const std::string& origin = "<string>");
std::string render_cocycle(const CocyclePair& c);
CocyclePair load_cocycle(const std::string& path);

IsoWitness parse_witness(const std::string& text, const std::string& origin = "<string>");
std::string render_witness(const IsoWitness& w);
IsoWitness load_witness(const std::string& path);

struct ExtensionFile {
    HomLieAlgebra g;
    HomLieAlgebra h;
    ExtensionPresentation pres;
    std::optional<SectionData> section;
};
ExtensionFile parse_extension(const std::string& text, const std::string& base_dir = "",
                              const std::string& origin = "<string>");
std::string render_extension(const ExtensionFile& e);
ExtensionFile load_extension(const std::string& path);

/// {"matrix": [[...]]} for plain morphism/automorphism inputs.
Matrix parse_matrix_file(const std::string& text, const std::string& origin = "<string>");
std::string render_matrix_file(const Matrix& m);
Matrix load_matrix_file(const std::string& path);

std::string render_report_text(const CheckReport& report);
/// Line-delimited records, keys sorted: "at=... check=... lhs=... pass=... rhs=...".
std::string render_report_records(const CheckReport& report);

}  // namespace hla::io
