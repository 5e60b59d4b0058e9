// Command-line frontend for the Hom-Lie algebra workbench.
//
// Exit status: 0 all checks passed, 1 check failures (or refused input),
// 2 malformed input, 3 no diagonal section exists.

#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hla/deriv.hpp"
#include "hla/dghla.hpp"
#include "hla/error.hpp"
#include "hla/extensions.hpp"
#include "hla/homlie.hpp"
#include "hla/homlie2.hpp"
#include "hla/io.hpp"
#include "hla/rep.hpp"
#include "hla/selftest.hpp"

namespace {

constexpr int kStatusPass = 0;
constexpr int kStatusFail = 1;
constexpr int kStatusBadInput = 2;
constexpr int kStatusNonDiagonal = 3;

struct Options {
    std::string format = "text";
    std::size_t degree = 1;
    std::string rep_choice = "adjoint";
    std::string section_file;
    std::string filter;
    bool phi_commute = false;

    bool records() const { return format == "records"; }
};

std::string render(const hla::CheckReport& report, const Options& opt) {
    return opt.records() ? hla::io::render_report_records(report)
                         : hla::io::render_report_text(report);
}

int report_status(const hla::CheckReport& report) {
    return report.all_pass() ? kStatusPass : kStatusFail;
}

/// Inputs parse before anything runs; these gates then refuse algebras that
/// fail verification, printing the failing report.
bool gate_algebra(const hla::HomLieAlgebra& alg, const std::string& path, const Options& opt) {
    const hla::CheckReport r = hla::verify(alg);
    if (!r.all_pass()) {
        std::cout << path << ": input algebra failed verification\n" << render(r, opt);
        return false;
    }
    return true;
}

bool gate_cocycle(const hla::CocyclePair& c, const std::string& path, const Options& opt) {
    for (const auto* alg : {&c.g, &c.h}) {
        const hla::CheckReport r = hla::verify(*alg);
        if (!r.all_pass()) {
            std::cout << path << ": cocycle algebra failed verification\n" << render(r, opt);
            return false;
        }
    }
    return true;
}

std::string subspace_text(const hla::Subspace& s, const std::string& what, const Options& opt) {
    std::string out;
    if (opt.records()) {
        out += "dim=" + std::to_string(s.dim()) + " what=" + what + "\n";
        for (std::size_t i = 0; i < s.dim(); ++i)
            out += "basis" + std::to_string(i) + "=" + hla::vec_str(s.basis_vector(i)) + "\n";
    } else {
        out += what + ": dimension " + std::to_string(s.dim()) + "\n";
        for (std::size_t i = 0; i < s.dim(); ++i)
            out += "  " + hla::vec_str(s.basis_vector(i)) + "\n";
    }
    return out;
}

std::string matrices_text(const std::vector<hla::Matrix>& ms, const std::string& what,
                          const Options& opt) {
    std::string out;
    if (opt.records()) {
        out += "count=" + std::to_string(ms.size()) + " what=" + what + "\n";
        for (std::size_t i = 0; i < ms.size(); ++i)
            out += what + std::to_string(i) + "=" + ms[i].str() + "\n";
    } else {
        out += what + ": " + std::to_string(ms.size()) + " maps\n";
        for (const auto& m : ms) out += "  " + m.str() + "\n";
    }
    return out;
}

int run_verify(const std::vector<std::string>& paths, const Options& opt) {
    const hla::CheckReport r = hla::verify(hla::io::load_algebra(paths[0]));
    std::cout << render(r, opt);
    return report_status(r);
}

int run_morphism(const std::vector<std::string>& paths, const Options& opt) {
    const hla::Matrix f = hla::io::load_matrix_file(paths[0]);
    const hla::HomLieAlgebra src = hla::io::load_algebra(paths[1]);
    const hla::HomLieAlgebra dst = hla::io::load_algebra(paths[2]);
    if (!gate_algebra(src, paths[1], opt) || !gate_algebra(dst, paths[2], opt)) return kStatusFail;
    const hla::CheckReport r = hla::check_morphism(f, src, dst);
    std::cout << render(r, opt);
    return report_status(r);
}

int run_center(const std::vector<std::string>& paths, const Options& opt) {
    const hla::HomLieAlgebra alg = hla::io::load_algebra(paths[0]);
    if (!gate_algebra(alg, paths[0], opt)) return kStatusFail;
    std::cout << subspace_text(hla::center(alg), "center", opt);
    return kStatusPass;
}

int run_twist(const std::vector<std::string>& paths, const Options&) {
    const hla::HomLieAlgebra lie = hla::io::load_algebra(paths[0]);
    const hla::Matrix psi = hla::io::load_matrix_file(paths[1]);
    std::cout << hla::io::render_algebra(hla::yau_twist(lie, psi));
    return kStatusPass;
}

int run_rep_check(const std::vector<std::string>& paths, const Options& opt) {
    const hla::HomLieAlgebra alg = hla::io::load_algebra(paths[0]);
    const hla::Representation rep = hla::io::load_representation(paths[1], alg);
    if (!gate_algebra(alg, paths[0], opt)) return kStatusFail;
    const hla::CheckReport r = hla::check_representation(rep);
    std::cout << render(r, opt);
    return report_status(r);
}

int run_cohomology(const std::vector<std::string>& paths, const Options& opt) {
    const hla::HomLieAlgebra alg = hla::io::load_algebra(paths[0]);
    const bool use_adjoint = opt.rep_choice == "adjoint";
    hla::Representation rep;
    if (!use_adjoint) rep = hla::io::load_representation(opt.rep_choice, alg);
    if (!gate_algebra(alg, paths[0], opt)) return kStatusFail;
    if (use_adjoint) {
        rep = hla::adjoint(alg);
    } else {
        const hla::CheckReport r = hla::check_representation(rep);
        if (!r.all_pass()) {
            std::cout << opt.rep_choice << ": representation failed its checks\n" << render(r, opt);
            return kStatusFail;
        }
    }
    const hla::CohomologyData data = hla::cohomology(rep, opt.degree);
    if (opt.records()) {
        std::cout << "dim=" << data.dim << " k=" << opt.degree << "\n";
        for (std::size_t i = 0; i < data.representatives.size(); ++i)
            std::cout << "rep" << i << "=" << hla::vec_str(data.representatives[i].coords())
                      << "\n";
    } else {
        std::cout << "dim H^" << opt.degree << " = " << data.dim << "\n";
        for (const auto& c : data.representatives)
            std::cout << "  representative: " << hla::vec_str(c.coords()) << "\n";
    }
    return kStatusPass;
}

int run_derivations(const std::vector<std::string>& paths, const Options& opt) {
    const hla::HomLieAlgebra alg = hla::io::load_algebra(paths[0]);
    if (!gate_algebra(alg, paths[0], opt)) return kStatusFail;
    const hla::DerivationSpace der = hla::derivation_space(alg);
    const auto basis = hla::derivation_basis(der);
    std::cout << matrices_text(basis, "derivation", opt);
    if (opt.phi_commute) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            std::cout << "derivation" << i << " commutes-with-phi="
                      << (hla::commutes_with_twist(alg, basis[i]) ? "true" : "false") << "\n";
    }
    return kStatusPass;
}

int run_inner(const std::vector<std::string>& paths, const Options& opt) {
    const hla::HomLieAlgebra alg = hla::io::load_algebra(paths[0]);
    if (!gate_algebra(alg, paths[0], opt)) return kStatusFail;
    const hla::Subspace inn = hla::inner_space(alg);
    std::vector<hla::Matrix> basis;
    for (std::size_t i = 0; i < inn.dim(); ++i)
        basis.push_back(hla::map_from_coords(alg.dim(), inn.basis_vector(i)));
    std::cout << matrices_text(basis, "inner", opt);
    return kStatusPass;
}

int run_outer(const std::vector<std::string>& paths, const Options& opt) {
    const hla::HomLieAlgebra alg = hla::io::load_algebra(paths[0]);
    if (!gate_algebra(alg, paths[0], opt)) return kStatusFail;
    const hla::OuterData out = hla::outer_data(alg);
    if (opt.records())
        std::cout << "dim=" << out.dim << " what=outer\n";
    else
        std::cout << "dim Out(g) = " << out.dim << "\n";
    std::cout << matrices_text(out.representatives, "representative", opt);
    return kStatusPass;
}

int run_der_algebra(const std::vector<std::string>& paths, const Options& opt) {
    const hla::HomLieAlgebra alg = hla::io::load_algebra(paths[0]);
    if (!gate_algebra(alg, paths[0], opt)) return kStatusFail;
    std::cout << hla::io::render_algebra(hla::der_algebra(alg));
    return kStatusPass;
}

int run_check_2alg(const std::vector<std::string>& paths, const Options& opt) {
    const hla::CheckReport r = hla::check_homlie2(hla::io::load_two_algebra(paths[0]));
    std::cout << render(r, opt);
    return report_status(r);
}

int run_der2(const std::vector<std::string>& paths, const Options& opt) {
    const hla::HomLieAlgebra alg = hla::io::load_algebra(paths[0]);
    if (!gate_algebra(alg, paths[0], opt)) return kStatusFail;
    std::cout << hla::io::render_two_algebra(hla::build_der2(alg));
    return kStatusPass;
}

int run_check_2morphism(const std::vector<std::string>& paths, const Options& opt) {
    const hla::TwoAlgMorphism f = hla::io::load_two_morphism(paths[0]);
    const hla::HomLie2Algebra src = hla::io::load_two_algebra(paths[1]);
    const hla::HomLie2Algebra dst = hla::io::load_two_algebra(paths[2]);
    const hla::CheckReport r = hla::check_2alg_morphism(f, src, dst);
    std::cout << render(r, opt);
    return report_status(r);
}

int run_check_homotopy(const std::vector<std::string>& paths, const Options& opt) {
    const hla::HomotopyData tau = hla::io::load_homotopy(paths[0]);
    const hla::TwoAlgMorphism f = hla::io::load_two_morphism(paths[1]);
    const hla::TwoAlgMorphism g = hla::io::load_two_morphism(paths[2]);
    const hla::HomLie2Algebra src = hla::io::load_two_algebra(paths[3]);
    const hla::HomLie2Algebra dst = hla::io::load_two_algebra(paths[4]);
    const hla::CheckReport r = hla::check_homotopy(tau, f, g, src, dst);
    std::cout << render(r, opt);
    return report_status(r);
}

int run_check_cocycle(const std::vector<std::string>& paths, const Options& opt) {
    const hla::CocyclePair c = hla::io::load_cocycle(paths[0]);
    if (!gate_cocycle(c, paths[0], opt)) return kStatusFail;
    const hla::CheckReport r = hla::check_cocycle(c);
    std::cout << render(r, opt);
    return report_status(r);
}

int run_extend(const std::vector<std::string>& paths, const Options& opt) {
    const hla::CocyclePair c = hla::io::load_cocycle(paths[0]);
    if (!gate_cocycle(c, paths[0], opt)) return kStatusFail;
    const hla::CheckReport r = hla::check_cocycle(c);
    if (!r.all_pass()) {
        std::cout << render(r, opt);
        return kStatusFail;
    }
    const hla::BuiltExtension ext = hla::build_extension(c);
    std::cout << hla::io::render_extension({c.g, c.h, ext.pres, ext.section});
    return kStatusPass;
}

int verify_extension_inputs(const hla::io::ExtensionFile& e, const std::string& path,
                            const Options& opt) {
    for (const auto* alg : {&e.g, &e.h, &e.pres.ghat}) {
        const hla::CheckReport r = hla::verify(*alg);
        if (!r.all_pass()) {
            std::cout << path << ": extension algebra failed verification\n" << render(r, opt);
            return kStatusFail;
        }
    }
    const hla::CheckReport pr = hla::check_presentation(e.pres, e.g, e.h);
    if (!pr.all_pass()) {
        std::cout << render(pr, opt);
        return kStatusFail;
    }
    return kStatusPass;
}

int run_section(const std::vector<std::string>& paths, const Options& opt) {
    const hla::io::ExtensionFile e = hla::io::load_extension(paths[0]);
    if (const int st = verify_extension_inputs(e, paths[0], opt); st != kStatusPass) return st;
    const auto s = hla::find_diagonal_section(e.pres, e.g);
    if (!s) {
        std::cout << "no diagonal section exists\n";
        return kStatusNonDiagonal;
    }
    std::cout << hla::io::render_matrix_file(s->s);
    return kStatusPass;
}

int run_extract(const std::vector<std::string>& paths, const Options& opt) {
    const hla::io::ExtensionFile e = hla::io::load_extension(paths[0]);
    std::optional<hla::SectionData> s = e.section;
    if (!opt.section_file.empty())
        s = hla::SectionData{hla::io::load_matrix_file(opt.section_file)};
    if (const int st = verify_extension_inputs(e, paths[0], opt); st != kStatusPass) return st;
    if (!s) {
        s = hla::find_diagonal_section(e.pres, e.g);
        if (!s) {
            std::cout << "no diagonal section exists\n";
            return kStatusNonDiagonal;
        }
    }
    std::cout << hla::io::render_cocycle(hla::extract_cocycle(e.pres, *s, e.g, e.h));
    return kStatusPass;
}

int run_cocycle_to_morphism(const std::vector<std::string>& paths, const Options& opt) {
    const hla::CocyclePair c = hla::io::load_cocycle(paths[0]);
    if (!gate_cocycle(c, paths[0], opt)) return kStatusFail;
    const hla::CheckReport r = hla::check_cocycle(c);
    if (!r.all_pass()) {
        std::cout << render(r, opt);
        return kStatusFail;
    }
    std::cout << hla::io::render_two_morphism(hla::cocycle_to_morphism(c));
    return kStatusPass;
}

int run_check_iso(const std::vector<std::string>& paths, const Options& opt) {
    const hla::IsoWitness w = hla::io::load_witness(paths[0]);
    const hla::CocyclePair c1 = hla::io::load_cocycle(paths[1]);
    const hla::CocyclePair c2 = hla::io::load_cocycle(paths[2]);
    if (!gate_cocycle(c1, paths[1], opt) || !gate_cocycle(c2, paths[2], opt)) return kStatusFail;
    const hla::CheckReport r = hla::check_iso_witness(w, c1, c2);
    std::cout << render(r, opt);
    return report_status(r);
}

int run_iso_to_homotopy(const std::vector<std::string>& paths, const Options& opt) {
    const hla::IsoWitness w = hla::io::load_witness(paths[0]);
    const hla::CocyclePair c1 = hla::io::load_cocycle(paths[1]);
    const hla::CocyclePair c2 = hla::io::load_cocycle(paths[2]);
    if (!gate_cocycle(c1, paths[1], opt) || !gate_cocycle(c2, paths[2], opt)) return kStatusFail;
    for (const auto* c : {&c1, &c2}) {
        const hla::CheckReport r = hla::check_cocycle(*c);
        if (!r.all_pass()) {
            std::cout << render(r, opt);
            return kStatusFail;
        }
    }
    const hla::CheckReport r = hla::check_iso_witness(w, c1, c2);
    if (!r.all_pass()) {
        std::cout << render(r, opt);
        return kStatusFail;
    }
    std::cout << hla::io::render_homotopy(hla::iso_to_homotopy(w, c1, c2));
    return kStatusPass;
}

int run_homotopy_to_iso(const std::vector<std::string>& paths, const Options& opt) {
    const hla::HomotopyData tau = hla::io::load_homotopy(paths[0]);
    const hla::CocyclePair c1 = hla::io::load_cocycle(paths[1]);
    const hla::CocyclePair c2 = hla::io::load_cocycle(paths[2]);
    if (!gate_cocycle(c1, paths[1], opt) || !gate_cocycle(c2, paths[2], opt)) return kStatusFail;
    for (const auto* c : {&c1, &c2}) {
        const hla::CheckReport r = hla::check_cocycle(*c);
        if (!r.all_pass()) {
            std::cout << render(r, opt);
            return kStatusFail;
        }
    }
    const hla::TwoAlgMorphism f = hla::cocycle_to_morphism(c2);
    const hla::TwoAlgMorphism g = hla::cocycle_to_morphism(c1);
    const hla::CheckReport r =
        hla::check_homotopy(tau, f, g, hla::as_2algebra(c1.g), hla::build_der2(c1.h));
    if (!r.all_pass()) {
        std::cout << render(r, opt);
        return kStatusFail;
    }
    std::cout << hla::io::render_witness(hla::homotopy_to_iso(tau, c1, c2));
    return kStatusPass;
}

int run_mc_check(const std::vector<std::string>& paths, const Options& opt) {
    const hla::CocyclePair c = hla::io::load_cocycle(paths[0]);
    if (!gate_cocycle(c, paths[0], opt)) return kStatusFail;
    const hla::DghlaContext ctx = hla::DghlaContext::direct_sum(c.g, c.h);
    const hla::CheckReport r = hla::mc_check(ctx, hla::pack_cocycle(c));
    std::cout << render(r, opt);
    return report_status(r);
}

int run_dghla_selftest(const std::vector<std::string>& paths, const Options& opt) {
    const hla::HomLieAlgebra g = hla::io::load_algebra(paths[0]);
    const hla::HomLieAlgebra h = hla::io::load_algebra(paths[1]);
    if (!gate_algebra(g, paths[0], opt) || !gate_algebra(h, paths[1], opt)) return kStatusFail;
    const hla::CheckReport r = hla::dghla_structure_report(g, h);
    std::cout << render(r, opt);
    return report_status(r);
}

int run_selftest(const std::vector<std::string>&, const Options& opt) {
    const auto results = hla::selftest::run_criteria(opt.filter);
    if (results.empty()) {
        std::cout << "no criteria match filter '" << opt.filter << "'\n";
        return kStatusFail;
    }
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.title;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
    }
    std::cout << (all ? "selftest passed\n" : "selftest FAILED\n");
    return all ? kStatusPass : kStatusFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homlie: exact-arithmetic workbench for finite-dimensional Hom-Lie algebras"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Report output format")
        ->check(CLI::IsMember({"text", "records"}));

    using Runner = int (*)(const std::vector<std::string>&, const Options&);
    struct Verb {
        const char* name;
        const char* help;
        int n_files;
        Runner run;
    };
    const std::vector<Verb> verbs = {
        {"verify", "Check the Hom-Lie axioms of an algebra file", 1, run_verify},
        {"morphism", "Check a matrix file as a morphism src -> dst", 3, run_morphism},
        {"center", "Compute the center of an algebra file", 1, run_center},
        {"twist", "Yau-twist a Lie algebra file by an automorphism matrix file", 2, run_twist},
        {"rep-check", "Check a representation file over an algebra file", 2, run_rep_check},
        {"cohomology", "Cohomology dimension and representatives", 1, run_cohomology},
        {"derivations", "Canonical basis of Der(g)", 1, run_derivations},
        {"inner", "Canonical basis of Inn(g)", 1, run_inner},
        {"outer", "Dimension and representatives of Out(g)", 1, run_outer},
        {"der-algebra", "Der(g) as an algebra file", 1, run_der_algebra},
        {"check-2alg", "Check a 2-algebra file", 1, run_check_2alg},
        {"der2", "Emit DER(h) of an algebra file as a 2-algebra file", 1, run_der2},
        {"check-2morphism", "Check a morphism file between two 2-algebra files", 3,
         run_check_2morphism},
        {"check-homotopy", "Check a homotopy file: tau f g src dst", 5, run_check_homotopy},
        {"check-cocycle", "Check the five cocycle identities of a cocycle file", 1,
         run_check_cocycle},
        {"extend", "Build the extension of a cocycle file", 1, run_extend},
        {"section", "Find a diagonal section of an extension file", 1, run_section},
        {"extract", "Extract the cocycle of an extension file", 1, run_extract},
        {"cocycle-to-morphism", "The induced morphism into DER(h) of a cocycle file", 1,
         run_cocycle_to_morphism},
        {"check-iso", "Check a witness file against two cocycle files (c1 c2)", 3, run_check_iso},
        {"iso-to-homotopy", "Witness file to homotopy file (w c1 c2)", 3, run_iso_to_homotopy},
        {"homotopy-to-iso", "Homotopy file to witness file (tau c1 c2)", 3, run_homotopy_to_iso},
        {"mc-check", "Maurer-Cartan check of a cocycle file", 1, run_mc_check},
        {"dghla-selftest", "Graded-structure invariant suite on two algebra files", 2,
         run_dghla_selftest},
        {"selftest", "Run the acceptance suite on the built-in corpus", 0, run_selftest},
    };

    int exit_code = kStatusPass;
    for (const auto& verb : verbs) {
        CLI::App* sub = app.add_subcommand(verb.name, verb.help);
        sub->fallthrough();  // let --format reach the parent app
        auto files = std::make_shared<std::vector<std::string>>();
        if (verb.n_files > 0)
            sub->add_option("files", *files, "input files")->expected(verb.n_files)->required();
        if (std::string(verb.name) == "cohomology") {
            sub->add_option("--k", opt.degree, "Cochain degree");
            sub->add_option("--rep", opt.rep_choice, "'adjoint' or a representation file");
        }
        if (std::string(verb.name) == "derivations")
            sub->add_flag("--phi-commute", opt.phi_commute,
                          "Report which basis derivations commute with phi");
        if (std::string(verb.name) == "extract")
            sub->add_option("--s", opt.section_file, "Section matrix file");
        if (std::string(verb.name) == "selftest")
            sub->add_option("--filter", opt.filter, "Run only criteria tagged with this module");
        const Runner run = verb.run;
        sub->callback([&exit_code, &opt, files, run] {
            try {
                exit_code = run(*files, opt);
            } catch (const hla::ParseError& e) {
                std::cerr << "error: " << e.what() << "\n";
                exit_code = kStatusBadInput;
            } catch (const hla::Error& e) {
                std::cerr << "error: " << e.what() << "\n";
                exit_code = kStatusBadInput;
            }
        });
    }

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}
