#include "hla/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hla/error.hpp"
#include "hla/tuples.hpp"

namespace hla::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), origin);
    }
}

const json& field(const json& j, const char* name, const std::string& origin) {
    if (!j.is_object()) throw ParseError("expected an object", origin);
    const auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'", origin);
    return *it;
}

std::size_t as_count(const json& j, const std::string& what, const std::string& origin) {
    if (!j.is_number_unsigned()) throw ParseError(what + " must be a non-negative integer", origin);
    return j.get<std::size_t>();
}

Rational as_rational(const json& j, const std::string& what, const std::string& origin) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError(what + " must be a rational string", origin);
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(what + ": " + e.what(), origin);
    }
}

Vec as_vec(const json& j, std::size_t len, const std::string& what, const std::string& origin) {
    if (!j.is_array() || j.size() != len)
        throw ParseError(what + " must be an array of length " + std::to_string(len), origin);
    Vec v;
    v.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        v.push_back(as_rational(j[i], what + "[" + std::to_string(i) + "]", origin));
    return v;
}

Matrix as_matrix(const json& j, const std::string& what, const std::string& origin) {
    if (!j.is_array()) throw ParseError(what + " must be an array of rows", origin);
    std::vector<Vec> rows;
    std::size_t cols = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array())
            throw ParseError(what + " rows must be arrays", origin);
        if (i == 0) cols = j[i].size();
        rows.push_back(as_vec(j[i], cols, what + "[" + std::to_string(i) + "]", origin));
    }
    if (rows.empty()) return Matrix(0, 0);
    return Matrix::from_rows(rows);
}

Matrix as_matrix_shaped(const json& j, std::size_t r, std::size_t c, const std::string& what,
                        const std::string& origin) {
    // Zero-row/zero-col matrices cannot round-trip through JSON arrays with
    // their width, so shape them explicitly.
    const Matrix m = as_matrix(j, what, origin);
    if (m.rows() == 0 && r == 0) return Matrix(0, c);
    if (m.rows() != r || (r != 0 && m.cols() != c))
        throw ParseError(what + " must be " + std::to_string(r) + "x" + std::to_string(c), origin);
    if (m.cols() != c) throw ParseError(what + " must have " + std::to_string(c) + " columns", origin);
    return m;
}

Tuple parse_key_tuple(const std::string& key, std::size_t expected_len, std::size_t bound,
                      const std::string& what, const std::string& origin) {
    Tuple t;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            const unsigned long v = std::stoul(part);
            t.push_back(v);
        } catch (...) {
            throw ParseError(what + " key '" + key + "' is not a comma-separated index list",
                             origin);
        }
    }
    if (expected_len != 0 && t.size() != expected_len)
        throw ParseError(what + " key '" + key + "' must have " + std::to_string(expected_len) +
                             " indices",
                         origin);
    if (bound != 0)
        for (std::size_t v : t)
            if (v >= bound)
                throw ParseError(what + " key '" + key + "' has an index out of range", origin);
    return t;
}

std::string tuple_key(const Tuple& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    return s;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_str(x));
    return a;
}

json cochain_values_json(const Cochain& c) {
    json values = json::object();
    for (const auto& [t, v] : c.values()) values[tuple_key(t)] = vec_json(v);
    return values;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file", path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

HomLieAlgebra parse_algebra(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    const std::size_t dim = as_count(field(j, "dim", origin), "dim", origin);

    std::vector<std::string> labels;
    if (j.contains("basis")) {
        const json& basis = j["basis"];
        if (!basis.is_array() || basis.size() != dim)
            throw ParseError("basis must be an array of dim names", origin);
        for (const auto& b : basis) {
            if (!b.is_string()) throw ParseError("basis names must be strings", origin);
            labels.push_back(b.get<std::string>());
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, Vec> upper;
    if (j.contains("bracket")) {
        const json& bracket = j["bracket"];
        if (!bracket.is_object()) throw ParseError("bracket must be an object", origin);
        for (const auto& [key, val] : bracket.items()) {
            const Tuple t = parse_key_tuple(key, 2, dim, "bracket", origin);
            if (t[0] >= t[1])
                throw ParseError("bracket key '" + key + "' must satisfy i < j", origin);
            if (!val.is_object())
                throw ParseError("bracket['" + key + "'] must map indices to rationals", origin);
            Vec v = zero_vec(dim);
            for (const auto& [ks, rs] : val.items()) {
                const Tuple kk = parse_key_tuple(ks, 1, dim, "bracket['" + key + "']", origin);
                v[kk[0]] = as_rational(rs, "bracket['" + key + "']['" + ks + "']", origin);
            }
            upper[{t[0], t[1]}] = std::move(v);
        }
    }

    const Matrix phi = as_matrix_shaped(field(j, "phi", origin), dim, dim, "phi", origin);
    return HomLieAlgebra::from_upper(dim, std::move(labels), upper, phi);
}

std::string render_algebra(const HomLieAlgebra& alg) {
    json j;
    j["dim"] = alg.dim();
    j["basis"] = alg.labels();
    json bracket = json::object();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t k = i + 1; k < alg.dim(); ++k) {
            const Vec& v = alg.bracket_basis(i, k);
            if (is_zero(v)) continue;
            json entry = json::object();
            for (std::size_t c = 0; c < alg.dim(); ++c)
                if (v[c] != 0) entry[std::to_string(c)] = rational_str(v[c]);
            bracket[std::to_string(i) + "," + std::to_string(k)] = std::move(entry);
        }
    j["bracket"] = std::move(bracket);
    j["phi"] = matrix_json(alg.phi());
    return dump(j);
}

HomLieAlgebra load_algebra(const std::string& path) {
    return parse_algebra(read_file(path), path);
}

Representation parse_representation(const std::string& text, const HomLieAlgebra& alg,
                                    const std::string& origin) {
    const json j = parse_json(text, origin);
    Representation rep;
    rep.alg = alg;
    rep.module_dim = as_count(field(j, "module_dim", origin), "module_dim", origin);
    const json& rho = field(j, "rho", origin);
    if (!rho.is_array() || rho.size() != alg.dim())
        throw ParseError("rho must be an array with one matrix per basis element", origin);
    for (std::size_t i = 0; i < rho.size(); ++i)
        rep.rho.push_back(as_matrix_shaped(rho[i], rep.module_dim, rep.module_dim,
                                           "rho[" + std::to_string(i) + "]", origin));
    rep.beta = as_matrix_shaped(field(j, "beta", origin), rep.module_dim, rep.module_dim, "beta",
                                origin);
    return rep;
}

std::string render_representation(const Representation& rep) {
    json j;
    j["module_dim"] = rep.module_dim;
    json rho = json::array();
    for (const auto& r : rep.rho) rho.push_back(matrix_json(r));
    j["rho"] = std::move(rho);
    j["beta"] = matrix_json(rep.beta);
    return dump(j);
}

Representation load_representation(const std::string& path, const HomLieAlgebra& alg) {
    return parse_representation(read_file(path), alg, path);
}

Cochain parse_cochain(const std::string& text, std::size_t alg_dim, std::size_t module_dim,
                      const std::string& origin) {
    const json j = parse_json(text, origin);
    const std::size_t degree = as_count(field(j, "degree", origin), "degree", origin);
    Cochain c(degree, alg_dim, module_dim);
    if (j.contains("values")) {
        const json& values = j["values"];
        if (!values.is_object()) throw ParseError("values must be an object", origin);
        for (const auto& [key, val] : values.items()) {
            Tuple t;
            if (!key.empty()) t = parse_key_tuple(key, degree, alg_dim, "values", origin);
            if (t.size() != degree)
                throw ParseError("values key '" + key + "' must have " + std::to_string(degree) +
                                     " indices",
                                 origin);
            for (std::size_t i = 0; i + 1 < t.size(); ++i)
                if (t[i] >= t[i + 1])
                    throw ParseError("values key '" + key + "' must be strictly increasing",
                                     origin);
            c.set(t, as_vec(val, module_dim, "values['" + key + "']", origin));
        }
    }
    return c;
}

std::string render_cochain(const Cochain& c) {
    json j;
    j["degree"] = c.degree();
    j["values"] = cochain_values_json(c);
    return dump(j);
}

HomLie2Algebra parse_two_algebra(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    HomLie2Algebra v;
    v.dim1 = as_count(field(j, "dim1", origin), "dim1", origin);
    v.dim0 = as_count(field(j, "dim0", origin), "dim0", origin);
    v.d = as_matrix_shaped(field(j, "d", origin), v.dim0, v.dim1, "d", origin);

    v.l2_00.assign(v.dim0 * v.dim0, zero_vec(v.dim0));
    if (j.contains("l2_00")) {
        for (const auto& [key, val] : j["l2_00"].items()) {
            const Tuple t = parse_key_tuple(key, 2, v.dim0, "l2_00", origin);
            if (t[0] >= t[1]) throw ParseError("l2_00 key '" + key + "' must satisfy i < j", origin);
            Vec value = as_vec(val, v.dim0, "l2_00['" + key + "']", origin);
            v.l2_00[t[0] * v.dim0 + t[1]] = value;
            v.l2_00[t[1] * v.dim0 + t[0]] = vec_scaled(value, Rational(-1));
        }
    }

    v.l2_01.assign(v.dim0, Matrix(v.dim1, v.dim1));
    if (j.contains("l2_01")) {
        for (const auto& [key, val] : j["l2_01"].items()) {
            const Tuple t = parse_key_tuple(key, 2, 0, "l2_01", origin);
            if (t[0] >= v.dim0 || t[1] >= v.dim1)
                throw ParseError("l2_01 key '" + key + "' out of range", origin);
            const Vec value = as_vec(val, v.dim1, "l2_01['" + key + "']", origin);
            for (std::size_t k = 0; k < v.dim1; ++k) v.l2_01[t[0]](k, t[1]) = value[k];
        }
    }

    v.l3 = Cochain(3, v.dim0, v.dim1);
    if (j.contains("l3")) {
        for (const auto& [key, val] : j["l3"].items()) {
            const Tuple t = parse_key_tuple(key, 3, v.dim0, "l3", origin);
            if (!(t[0] < t[1] && t[1] < t[2]))
                throw ParseError("l3 key '" + key + "' must satisfy i < j < k", origin);
            v.l3.set(t, as_vec(val, v.dim1, "l3['" + key + "']", origin));
        }
    }

    v.phi0 = as_matrix_shaped(field(j, "phi0", origin), v.dim0, v.dim0, "phi0", origin);
    v.phi1 = as_matrix_shaped(field(j, "phi1", origin), v.dim1, v.dim1, "phi1", origin);
    return v;
}

std::string render_two_algebra(const HomLie2Algebra& v) {
    json j;
    j["dim1"] = v.dim1;
    j["dim0"] = v.dim0;
    j["d"] = matrix_json(v.d);
    json l2_00 = json::object();
    for (std::size_t i = 0; i < v.dim0; ++i)
        for (std::size_t k = i + 1; k < v.dim0; ++k)
            if (!is_zero(v.l2_00[i * v.dim0 + k]))
                l2_00[std::to_string(i) + "," + std::to_string(k)] =
                    vec_json(v.l2_00[i * v.dim0 + k]);
    j["l2_00"] = std::move(l2_00);
    json l2_01 = json::object();
    for (std::size_t i = 0; i < v.dim0; ++i)
        for (std::size_t a = 0; a < v.dim1; ++a) {
            const Vec col = v.l2_01[i].col(a);
            if (!is_zero(col))
                l2_01[std::to_string(i) + "," + std::to_string(a)] = vec_json(col);
        }
    j["l2_01"] = std::move(l2_01);
    j["l3"] = cochain_values_json(v.l3);
    j["phi0"] = matrix_json(v.phi0);
    j["phi1"] = matrix_json(v.phi1);
    return dump(j);
}

HomLie2Algebra load_two_algebra(const std::string& path) {
    return parse_two_algebra(read_file(path), path);
}

TwoAlgMorphism parse_two_morphism(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    TwoAlgMorphism f;
    f.f0 = as_matrix(field(j, "f0", origin), "f0", origin);
    f.f1 = as_matrix(field(j, "f1", origin), "f1", origin);
    const std::size_t dim0 = f.f0.cols();
    const std::size_t dim1p = f.f1.rows();
    f.f2 = Cochain(2, dim0, dim1p);
    if (j.contains("f2")) {
        for (const auto& [key, val] : j["f2"].items()) {
            const Tuple t = parse_key_tuple(key, 2, dim0, "f2", origin);
            if (t[0] >= t[1]) throw ParseError("f2 key '" + key + "' must satisfy i < j", origin);
            f.f2.set(t, as_vec(val, dim1p, "f2['" + key + "']", origin));
        }
    }
    return f;
}

std::string render_two_morphism(const TwoAlgMorphism& f) {
    json j;
    j["f0"] = matrix_json(f.f0);
    j["f1"] = matrix_json(f.f1);
    j["f2"] = cochain_values_json(f.f2);
    return dump(j);
}

TwoAlgMorphism load_two_morphism(const std::string& path) {
    return parse_two_morphism(read_file(path), path);
}

HomotopyData parse_homotopy(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    return HomotopyData{as_matrix(field(j, "tau", origin), "tau", origin)};
}

std::string render_homotopy(const HomotopyData& tau) {
    json j;
    j["tau"] = matrix_json(tau.tau);
    return dump(j);
}

HomotopyData load_homotopy(const std::string& path) {
    return parse_homotopy(read_file(path), path);
}

namespace {

HomLieAlgebra algebra_or_path(const json& j, const std::string& base_dir,
                              const std::string& origin) {
    if (j.is_string()) {
        std::filesystem::path p = j.get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        return load_algebra(p.string());
    }
    return parse_algebra(j.dump(), origin);
}

}  // namespace

CocyclePair parse_cocycle(const std::string& text, const std::string& base_dir,
                          const std::string& origin) {
    const json j = parse_json(text, origin);
    CocyclePair c;
    c.g = algebra_or_path(field(j, "g", origin), base_dir, origin);
    c.h = algebra_or_path(field(j, "h", origin), base_dir, origin);
    const std::size_t n = c.g.dim(), m = c.h.dim();
    const json& rho = field(j, "rho", origin);
    if (!rho.is_array() || rho.size() != n)
        throw ParseError("rho must be an array with one matrix per basis element of g", origin);
    for (std::size_t i = 0; i < n; ++i)
        c.rho.push_back(as_matrix_shaped(rho[i], m, m, "rho[" + std::to_string(i) + "]", origin));
    c.omega = Cochain(2, n, m);
    if (j.contains("omega")) {
        for (const auto& [key, val] : j["omega"].items()) {
            const Tuple t = parse_key_tuple(key, 2, n, "omega", origin);
            if (t[0] >= t[1]) throw ParseError("omega key '" + key + "' must satisfy i < j", origin);
            c.omega.set(t, as_vec(val, m, "omega['" + key + "']", origin));
        }
    }
    return c;
}

std::string render_cocycle(const CocyclePair& c) {
    json j;
    j["g"] = json::parse(render_algebra(c.g));
    j["h"] = json::parse(render_algebra(c.h));
    json rho = json::array();
    for (const auto& r : c.rho) rho.push_back(matrix_json(r));
    j["rho"] = std::move(rho);
    j["omega"] = cochain_values_json(c.omega);
    return dump(j);
}

CocyclePair load_cocycle(const std::string& path) {
    return parse_cocycle(read_file(path), std::filesystem::path(path).parent_path().string(),
                         path);
}

IsoWitness parse_witness(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    return IsoWitness{as_matrix(field(j, "phitheta", origin), "phitheta", origin)};
}

std::string render_witness(const IsoWitness& w) {
    json j;
    j["phitheta"] = matrix_json(w.phitheta);
    return dump(j);
}

IsoWitness load_witness(const std::string& path) {
    return parse_witness(read_file(path), path);
}

ExtensionFile parse_extension(const std::string& text, const std::string& base_dir,
                              const std::string& origin) {
    const json j = parse_json(text, origin);
    ExtensionFile e;
    e.g = algebra_or_path(field(j, "g", origin), base_dir, origin);
    e.h = algebra_or_path(field(j, "h", origin), base_dir, origin);
    e.pres.ghat = algebra_or_path(field(j, "ghat", origin), base_dir, origin);
    const std::size_t N = e.pres.ghat.dim();
    e.pres.iota = as_matrix_shaped(field(j, "iota", origin), N, e.h.dim(), "iota", origin);
    e.pres.p = as_matrix_shaped(field(j, "p", origin), e.g.dim(), N, "p", origin);
    if (j.contains("s"))
        e.section = SectionData{as_matrix_shaped(j["s"], N, e.g.dim(), "s", origin)};
    return e;
}

std::string render_extension(const ExtensionFile& e) {
    json j;
    j["g"] = json::parse(render_algebra(e.g));
    j["h"] = json::parse(render_algebra(e.h));
    j["ghat"] = json::parse(render_algebra(e.pres.ghat));
    j["iota"] = matrix_json(e.pres.iota);
    j["p"] = matrix_json(e.pres.p);
    if (e.section) j["s"] = matrix_json(e.section->s);
    return dump(j);
}

ExtensionFile load_extension(const std::string& path) {
    return parse_extension(read_file(path), std::filesystem::path(path).parent_path().string(),
                           path);
}

Matrix parse_matrix_file(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    return as_matrix(field(j, "matrix", origin), "matrix", origin);
}

std::string render_matrix_file(const Matrix& m) {
    json j;
    j["matrix"] = matrix_json(m);
    return dump(j);
}

Matrix load_matrix_file(const std::string& path) {
    return parse_matrix_file(read_file(path), path);
}

std::string render_report_text(const CheckReport& report) {
    std::string out;
    for (const auto& e : report.entries()) {
        out += e.pass ? "[ok]   " : "[FAIL] ";
        out += e.name;
        if (!e.pass && e.cex) {
            out += "  at " + e.cex->at + ": lhs = " + e.cex->lhs + ", rhs = " + e.cex->rhs;
        }
        out += '\n';
    }
    out += report.all_pass() ? "all checks passed\n" : "some checks FAILED\n";
    return out;
}

std::string render_report_records(const CheckReport& report) {
    std::string out;
    for (const auto& e : report.entries()) {
        std::string line;
        if (!e.pass && e.cex) line += "at=" + e.cex->at + " ";
        line += "check=" + e.name;
        if (!e.pass && e.cex) line += " lhs=" + e.cex->lhs;
        line += std::string(" pass=") + (e.pass ? "true" : "false");
        if (!e.pass && e.cex) line += " rhs=" + e.cex->rhs;
        out += line + '\n';
    }
    return out;
}

}  // namespace hla::io
