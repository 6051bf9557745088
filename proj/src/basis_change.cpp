#include "eulab/basis_change.hpp"

#include "eulab/errors.hpp"

namespace eulab {

SparseMonomial to_sparse(const Exponents& exp) {
    SparseMonomial out;
    for (int i = 0; i < static_cast<int>(exp.size()); ++i) {
        if (exp[i] < 0) throw invalid_parameters_error("negative exponent");
        if (exp[i] > 0) {
            out.b.push_back(i + 1);
            out.c.push_back(exp[i]);
        }
    }
    return out;
}

Exponents to_exponents(int n, const SparseMonomial& s) {
    if (s.b.size() != s.c.size())
        throw invalid_parameters_error("malformed sparse monomial");
    Exponents out(n, 0);
    for (std::size_t i = 0; i < s.b.size(); ++i) {
        if (s.b[i] < 1 || s.b[i] > n || s.c[i] < 1 ||
            (i > 0 && s.b[i] <= s.b[i - 1]))
            throw invalid_parameters_error("malformed sparse monomial");
        out[s.b[i] - 1] = s.c[i];
    }
    return out;
}

Matrix matrix_A(int n) {
    if (n < 1) throw invalid_parameters_error("matrix_A: n must be positive");
    Matrix out(n, std::vector<Rat>(n, 0));
    for (int i = 0; i < n; ++i) {
        out[i][i] = 2;
        if (i > 0) out[i][i - 1] = -1;
        if (i + 1 < n) out[i][i + 1] = -1;
    }
    return out;
}

Matrix matrix_B(int n) {
    if (n < 1) throw invalid_parameters_error("matrix_B: n must be positive");
    Matrix out(n, std::vector<Rat>(n, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            out[i - 1][j - 1] = Rat(std::min(i, j) * (n + 1 - std::max(i, j)), n + 1);
    return out;
}

MultiPoly expand_L_monomial(int n, const Composition& a) {
    if (n < 0 || static_cast<int>(a.size()) != n)
        throw invalid_parameters_error("expand_L_monomial: composition length mismatch");
    if (n == 0) return MultiPoly::constant(0, 1);
    Matrix b = matrix_B(n);
    MultiPoly out = MultiPoly::constant(n, 1);
    for (int i = 0; i < n; ++i) {
        if (a[i] < 0) throw invalid_parameters_error("expand_L_monomial: negative entry");
        MultiPoly row(n);
        for (int j = 0; j < n; ++j) {
            Exponents e(n, 0);
            e[j] = 1;
            row.add_term(e, b[i][j]);
        }
        for (int p = 0; p < a[i]; ++p) out = out * row;
    }
    return out;
}

MultiPoly expand_S_monomial(int n, const SparseMonomial& s) {
    to_exponents(n, s);  // validates shape
    MultiPoly out = MultiPoly::constant(n, 1);
    for (std::size_t i = 0; i < s.b.size(); ++i) {
        MultiPoly row(n);
        int bi = s.b[i];
        for (auto [j, coef] : {std::pair{bi - 1, Rat(-1)}, {bi, Rat(2)}, {bi + 1, Rat(-1)}}) {
            if (j < 1 || j > n) continue;
            Exponents e(n, 0);
            e[j - 1] = 1;
            row.add_term(e, coef);
        }
        for (int p = 0; p < s.c[i]; ++p) out = out * row;
    }
    return out;
}

MultiPoly apply_basis_change(int n, const MultiPoly& q) {
    if (q.arity() != n) throw invalid_parameters_error("apply_basis_change: arity mismatch");
    if (q.empty()) return q;
    if (!q.is_homogeneous(q.total_degree()))
        throw invalid_parameters_error("apply_basis_change: input must be homogeneous");
    Matrix b = matrix_B(n);
    std::vector<MultiPoly> images;
    images.reserve(n);
    for (int j = 0; j < n; ++j) {
        MultiPoly img(n);
        for (int i = 0; i < n; ++i) {
            Exponents e(n, 0);
            e[i] = 1;
            img.add_term(e, b[i][j]);
        }
        images.push_back(img);
    }
    return q.substitute(images);
}

}  // namespace eulab
