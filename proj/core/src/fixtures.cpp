#include "hla/fixtures.hpp"

#include <algorithm>

#include "hla/error.hpp"

namespace hla::fixtures {

HomLieAlgebra abelian(std::size_t n) { return abelian(n, Matrix::identity(n)); }

HomLieAlgebra abelian(std::size_t n, Matrix phi) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
    return HomLieAlgebra::from_upper(n, labels, {}, std::move(phi));
}

HomLieAlgebra sl2() {
    std::map<std::pair<std::size_t, std::size_t>, Vec> upper;
    upper[{0, 1}] = {Rational(0), Rational(2), Rational(0)};   // [h,e] = 2e
    upper[{0, 2}] = {Rational(0), Rational(0), Rational(-2)};  // [h,f] = -2f
    upper[{1, 2}] = {Rational(1), Rational(0), Rational(0)};   // [e,f] = h
    return HomLieAlgebra::from_upper(3, {"h", "e", "f"}, upper, Matrix::identity(3));
}

HomLieAlgebra heisenberg3() {
    std::map<std::pair<std::size_t, std::size_t>, Vec> upper;
    upper[{0, 1}] = {Rational(0), Rational(0), Rational(1)};  // [x,y] = z
    return HomLieAlgebra::from_upper(3, {"x", "y", "z"}, upper, Matrix::identity(3));
}

HomLieAlgebra direct_sum(const HomLieAlgebra& a, const HomLieAlgebra& b) {
    const std::size_t n = a.dim(), m = b.dim(), N = n + m;
    std::vector<std::string> labels = a.labels();
    for (std::string l : b.labels()) {
        while (std::find(labels.begin(), labels.end(), l) != labels.end()) l += "'";
        labels.push_back(std::move(l));
    }

    std::vector<Vec> table(N * N, zero_vec(N));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& v = a.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) table[i * N + j][k] = v[k];
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Vec& v = b.bracket_basis(i, j);
            for (std::size_t k = 0; k < m; ++k) table[(n + i) * N + (n + j)][n + k] = v[k];
        }

    Matrix phi(N, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) phi(i, j) = a.phi()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) phi(n + i, n + j) = b.phi()(i, j);

    return HomLieAlgebra::from_tensor(N, labels, std::move(table), std::move(phi));
}

Matrix sl2_diag_automorphism(const Rational& q) {
    if (q == 0) throw Error("q must be nonzero");
    return Matrix::diagonal({Rational(1), q, 1 / q});
}

Matrix sl2_swap_automorphism() {
    Matrix m(3, 3);
    m(0, 0) = -1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    return m;
}

Matrix heisenberg_diag_automorphism(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw Error("a, b must be nonzero");
    return Matrix::diagonal({a, b, a * b});
}

Matrix heisenberg_swap_automorphism() {
    Matrix m(3, 3);
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(2, 2) = -1;
    return m;
}

Rational RationalStream::next(bool nonzero) {
    for (;;) {
        // xorshift64
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        const long num = static_cast<long>(state_ % 7) - 3;  // -3..3
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        const long den = static_cast<long>(state_ % 3) + 1;  // 1..3
        if (nonzero && num == 0) continue;
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
}

std::vector<NamedAlgebra> corpus(std::size_t twists, std::uint64_t seed) {
    std::vector<NamedAlgebra> out;
    out.push_back({"abelian1", abelian(1)});
    out.push_back({"abelian2", abelian(2)});
    out.push_back({"abelian3", abelian(3)});
    out.push_back({"sl2", sl2()});
    out.push_back({"heisenberg3", heisenberg3()});

    RationalStream rs(seed);
    // an abelian algebra with a non-trivial twist (any invertible map works)
    out.push_back({"abelian2-twisted",
                   abelian(2, Matrix::from_rows({{Rational(1), Rational(1)},
                                                 {Rational(0), Rational(1)}}))});

    for (std::size_t t = 0; t < twists; ++t) {
        const bool use_sl2 = (t % 2 == 0);
        const bool with_swap = (t % 4 >= 2);
        if (use_sl2) {
            Matrix psi = sl2_diag_automorphism(rs.next(true));
            if (with_swap) psi = psi * sl2_swap_automorphism();
            out.push_back({"sl2-twist" + std::to_string(t), yau_twist(sl2(), psi)});
        } else {
            Matrix psi = heisenberg_diag_automorphism(rs.next(true), rs.next(true));
            if (with_swap) psi = psi * heisenberg_swap_automorphism();
            out.push_back({"heis-twist" + std::to_string(t), yau_twist(heisenberg3(), psi)});
        }
    }
    return out;
}

}  // namespace hla::fixtures
