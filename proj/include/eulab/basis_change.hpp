#pragma once

#include <vector>

#include "eulab/multipoly.hpp"
#include "eulab/rational.hpp"

namespace eulab {

// sparse index form of a monomial S_{b_1}^{c_1}...S_{b_k}^{c_k}
// with 1 <= b_1 < ... < b_k <= n and all c_i >= 1
struct SparseMonomial {
    std::vector<int> b;
    std::vector<int> c;
};

SparseMonomial to_sparse(const Exponents& exp);
Exponents to_exponents(int n, const SparseMonomial& s);

using Matrix = std::vector<std::vector<Rat>>;

// tridiagonal change-of-basis matrix with 2 on the diagonal and -1 off it
Matrix matrix_A(int n);

// inverse matrix, entry (i,j) = min(i,j) * (n+1-max(i,j)) / (n+1)
Matrix matrix_B(int n);

// expansion of L^a = prod_i (sum_j B_ij S_j)^{a_i} on the S-monomial basis;
// the coefficient of S_b^c is the number written C_b^c(a)
MultiPoly expand_L_monomial(int n, const Composition& a);

// expansion of S_b^c = prod_i (-L_{b_i-1} + 2 L_{b_i} - L_{b_i+1})^{c_i}
// on the L-monomial basis, with L_0 = L_{n+1} = 0
MultiPoly expand_S_monomial(int n, const SparseMonomial& s);

// symmetric-power action of B on a homogeneous polynomial in the S-coordinates:
// substitutes y_j = sum_i B_ij x_i
MultiPoly apply_basis_change(int n, const MultiPoly& q);

}  // namespace eulab
