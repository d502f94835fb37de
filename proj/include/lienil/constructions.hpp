#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lienil/lie_algebra.hpp"

namespace lienil {

// Structure constants from matrix commutators [A, B] = AB - BA. Throws
// InvalidArgument if the matrices are dependent or not closed under the commutator.
AlgebraPtr matrix_lie_algebra(const FieldPtr& field, std::string name, std::vector<std::string> labels,
                              std::vector<Matrix> basis);

// Basis orders (row-major over matrix positions):
//   gl(n): E_ij for all i, j             gl(2) = (E11, E12, E21, E22)
//   t(n):  E_ij for i <= j               t(2)  = (E11, E12, E22)
//   u(n):  E_ij for i < j                u(3)  = (E12, E13, E23)
//   sl(n): E_ij for i != j, then H_i = E_ii - E_{i+1,i+1}
//                                        sl(2) = (E12, E21, H1)
AlgebraPtr gl(std::size_t n, const FieldPtr& field);
AlgebraPtr t(std::size_t n, const FieldPtr& field);
AlgebraPtr u(std::size_t n, const FieldPtr& field);
AlgebraPtr sl(std::size_t n, const FieldPtr& field);

// Basis {x, y}, [x, y] = y.
AlgebraPtr two_dim_nonabelian(const FieldPtr& field);
// Basis {e, f, g}, [e, f] = 0, [e, g] = e, [f, g] = f.
AlgebraPtr three_dim_example(const FieldPtr& field);
AlgebraPtr abelian(std::size_t n, const FieldPtr& field);

// Grammar: term ('+' term)*, term = gl:n | t:n | u:n | sl:n | ab:n | aff1 | ex3d | file:path.
// `field` may be null when every summand is a file carrying its own field.
AlgebraPtr parse_algebra_expr(std::string_view text, const FieldPtr& field);

}  // namespace lienil
