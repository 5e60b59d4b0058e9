#include "hla/rep.hpp"

#include <algorithm>

#include "hla/error.hpp"

namespace hla {

Matrix Representation::rho_of(const Vec& x) const {
    if (x.size() != alg.dim()) throw Error("rho_of argument has wrong length");
    Matrix m(module_dim, module_dim);
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (x[i] != 0) m = m + rho[i].scaled(x[i]);
    return m;
}

CheckReport check_representation(const Representation& rep) {
    const std::size_t n = rep.alg.dim();
    if (rep.rho.size() != n) throw Error("rho must contain one matrix per basis element");
    for (const auto& r : rep.rho)
        if (r.rows() != rep.module_dim || r.cols() != rep.module_dim)
            throw Error("rho matrix has wrong shape");
    if (rep.beta.rows() != rep.module_dim || rep.beta.cols() != rep.module_dim)
        throw Error("beta has wrong shape");

    CheckReport report;
    const auto& alg = rep.alg;

    // rho(phi x) . beta = beta . rho(x)
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n && ok; ++i) {
            const Matrix lhs = rep.rho_of(alg.phi().col(i)) * rep.beta;
            const Matrix rhs = rep.beta * rep.rho[i];
            if (lhs != rhs) {
                ok = false;
                cex = {{i}, "(" + alg.label(i) + ")", lhs.str(), rhs.str()};
            }
        }
        ok ? report.add_pass("rho-beta-intertwine") : report.add_fail("rho-beta-intertwine", cex);
    }

    // rho([x,y]) . beta = rho(phi x) rho(y) - rho(phi y) rho(x)
    {
        bool ok = true;
        Counterexample cex;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                const Matrix lhs = rep.rho_of(alg.bracket_basis(i, j)) * rep.beta;
                const Matrix rhs = rep.rho_of(alg.phi().col(i)) * rep.rho[j] -
                                   rep.rho_of(alg.phi().col(j)) * rep.rho[i];
                if (lhs != rhs) {
                    ok = false;
                    cex = {{i, j}, "(" + alg.label(i) + "," + alg.label(j) + ")", lhs.str(),
                           rhs.str()};
                }
            }
        ok ? report.add_pass("rho-bracket-compat") : report.add_fail("rho-bracket-compat", cex);
    }

    return report;
}

Representation adjoint(const HomLieAlgebra& alg) {
    if (!verify(alg).all_pass()) throw Error("adjoint requires a verified algebra");
    Representation rep;
    rep.alg = alg;
    rep.module_dim = alg.dim();
    for (std::size_t i = 0; i < alg.dim(); ++i) rep.rho.push_back(alg.ad_matrix(i));
    rep.beta = alg.phi();
    return rep;
}

void Cochain::set(const Tuple& tuple, Vec value) {
    if (tuple.size() != degree_) throw Error("cochain tuple has wrong arity");
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
        if (tuple[i] >= tuple[i + 1]) throw Error("cochain tuple must be strictly increasing");
    for (std::size_t v : tuple)
        if (v >= alg_dim_) throw Error("cochain tuple index out of range");
    if (value.size() != module_dim_) throw Error("cochain value has wrong length");
    if (hla::is_zero(value)) {
        values_.erase(tuple);
    } else {
        values_[tuple] = std::move(value);
    }
}

Vec Cochain::at(const Tuple& tuple) const {
    if (tuple.size() != degree_) throw Error("cochain tuple has wrong arity");
    Tuple t = tuple;
    const int sign = sort_with_sign(t);
    if (sign == 0) return zero_vec(module_dim_);
    const auto it = values_.find(t);
    if (it == values_.end()) return zero_vec(module_dim_);
    return sign == 1 ? it->second : vec_scaled(it->second, Rational(-1));
}

Vec Cochain::eval(const std::vector<Vec>& args) const {
    if (args.size() != degree_) throw Error("cochain evaluated with wrong arity");
    for (const auto& a : args)
        if (a.size() != alg_dim_) throw Error("cochain argument has wrong length");
    Vec out = zero_vec(module_dim_);
    if (values_.empty()) return out;
    // Expand multilinearly over stored increasing tuples: the coefficient of
    // f(e_t) is det of the submatrix of argument coordinates on t.
    // Equivalently, sum sign(s) * prod_i args[i][t[s(i)]] over permutations;
    // for the small dimensions used here the direct minor expansion is fine.
    for (const auto& [t, value] : values_) {
        Rational coeff(0);
        // determinant of the degree x degree matrix args[i][t[j]]
        std::vector<std::size_t> perm(degree_);
        for (std::size_t i = 0; i < degree_; ++i) perm[i] = i;
        // iterate permutations (Heap's algorithm would be fine; use std)
        do {
            Rational term(1);
            for (std::size_t i = 0; i < degree_; ++i) term *= args[i][t[perm[i]]];
            if (term == 0) continue;
            int sign = 1;
            for (std::size_t i = 0; i < degree_; ++i)
                for (std::size_t j = i + 1; j < degree_; ++j)
                    if (perm[i] > perm[j]) sign = -sign;
            coeff += sign == 1 ? term : -term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (coeff == 0) continue;
        for (std::size_t k = 0; k < module_dim_; ++k) out[k] += coeff * value[k];
    }
    return out;
}

bool Cochain::is_zero() const { return values_.empty(); }

Cochain Cochain::operator+(const Cochain& o) const {
    if (degree_ != o.degree_ || alg_dim_ != o.alg_dim_ || module_dim_ != o.module_dim_)
        throw Error("cochain shape mismatch in +");
    Cochain r(degree_, alg_dim_, module_dim_);
    for (const auto& [t, v] : values_) r.set(t, v);
    for (const auto& [t, v] : o.values_) r.set(t, vec_add(r.at(t), v));
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + o.scaled(Rational(-1)); }

Cochain Cochain::scaled(const Rational& c) const {
    Cochain r(degree_, alg_dim_, module_dim_);
    if (c == 0) return r;
    for (const auto& [t, v] : values_) r.set(t, vec_scaled(v, c));
    return r;
}

std::size_t Cochain::space_dim(std::size_t degree, std::size_t alg_dim, std::size_t module_dim) {
    return binomial(alg_dim, degree) * module_dim;
}

Vec Cochain::coords() const {
    Vec out = zero_vec(space_dim(degree_, alg_dim_, module_dim_));
    for (const auto& [t, v] : values_) {
        const std::size_t base = tuple_index(alg_dim_, t) * module_dim_;
        for (std::size_t k = 0; k < module_dim_; ++k) out[base + k] = v[k];
    }
    return out;
}

Cochain Cochain::from_coords(std::size_t degree, std::size_t alg_dim, std::size_t module_dim,
                             const Vec& coords) {
    if (coords.size() != space_dim(degree, alg_dim, module_dim))
        throw Error("cochain coordinate vector has wrong length");
    Cochain c(degree, alg_dim, module_dim);
    const auto tuples = increasing_tuples(alg_dim, degree);
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
        Vec v(module_dim);
        for (std::size_t k = 0; k < module_dim; ++k) v[k] = coords[ti * module_dim + k];
        c.set(tuples[ti], std::move(v));
    }
    return c;
}

Cochain coboundary(const Representation& rep, const Cochain& f) {
    const std::size_t n = rep.alg.dim();
    const std::size_t k = f.degree();
    if (f.alg_dim() != n || f.module_dim() != rep.module_dim)
        throw Error("cochain shape does not match the representation");
    const Matrix phi_inv = inverse(rep.alg.phi());
    const Matrix phi_inv2 = phi_inv * phi_inv;

    Cochain out(k + 1, n, rep.module_dim);
    for (const Tuple& t : increasing_tuples(n, k + 1)) {
        // arguments x_1..x_{k+1} are basis vectors e_{t[...]}
        std::vector<Vec> phi_inv_args(k + 1), phi_inv2_args(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
            phi_inv_args[i] = phi_inv.col(t[i]);
            phi_inv2_args[i] = phi_inv2.col(t[i]);
        }

        Vec value = zero_vec(rep.module_dim);

        // sum_i (-1)^{i+1} rho(x_i) f(phi^-1 x_1, ..omit i.., phi^-1 x_{k+1})
        for (std::size_t i = 0; i <= k; ++i) {
            std::vector<Vec> args;
            for (std::size_t a = 0; a <= k; ++a)
                if (a != i) args.push_back(phi_inv_args[a]);
            Vec term = rep.rho[t[i]] * f.eval(args);
            if (i % 2 == 1) term = vec_scaled(term, Rational(-1));  // (-1)^{i+1}, 1-based i
            value = vec_add(value, term);
        }

        // sum_{i<j} (-1)^{i+j} beta f([phi^-2 x_i, phi^-2 x_j], phi^-1 x_1, ..omit i,j..)
        if (k >= 1) {
            for (std::size_t i = 0; i <= k; ++i)
                for (std::size_t j = i + 1; j <= k; ++j) {
                    std::vector<Vec> args;
                    args.push_back(rep.alg.bracket(phi_inv2_args[i], phi_inv2_args[j]));
                    for (std::size_t a = 0; a <= k; ++a)
                        if (a != i && a != j) args.push_back(phi_inv_args[a]);
                    Vec term = rep.beta * f.eval(args);
                    // (-1)^{i+j} with 1-based positions = parity of i+j 0-based
                    if ((i + j) % 2 == 1) term = vec_scaled(term, Rational(-1));
                    value = vec_add(value, term);
                }
        }

        out.set(t, std::move(value));
    }
    return out;
}

Matrix coboundary_matrix(const Representation& rep, std::size_t degree) {
    const std::size_t n = rep.alg.dim();
    const std::size_t m = rep.module_dim;
    const std::size_t in_dim = Cochain::space_dim(degree, n, m);
    const std::size_t out_dim = Cochain::space_dim(degree + 1, n, m);
    Matrix d(out_dim, in_dim);
    for (std::size_t c = 0; c < in_dim; ++c) {
        Vec basis = zero_vec(in_dim);
        basis[c] = 1;
        const Cochain image = coboundary(rep, Cochain::from_coords(degree, n, m, basis));
        const Vec image_coords = image.coords();
        for (std::size_t r = 0; r < out_dim; ++r) d(r, c) = image_coords[r];
    }
    return d;
}

Subspace cocycle_space(const Representation& rep, std::size_t k) {
    return nullspace(coboundary_matrix(rep, k));
}

Subspace coboundary_space(const Representation& rep, std::size_t k) {
    if (k == 0) throw Error("coboundary_space undefined at degree 0");
    return column_space(coboundary_matrix(rep, k - 1));
}

CohomologyData cohomology(const Representation& rep, std::size_t k) {
    const Subspace z = cocycle_space(rep, k);
    const Subspace b =
        k == 0 ? Subspace::zero(Cochain::space_dim(0, rep.alg.dim(), rep.module_dim))
               : coboundary_space(rep, k);
    if (!z.contains(b)) throw Error("coboundary space escapes the cocycle space (d^2 != 0?)");
    CohomologyData data;
    data.dim = z.dim() - b.dim();
    for (const Vec& v : extend_basis(b, z))
        data.representatives.push_back(
            Cochain::from_coords(k, rep.alg.dim(), rep.module_dim, v));
    return data;
}

}  // namespace hla
