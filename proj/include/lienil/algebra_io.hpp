#pragma once

#include <string>
#include <string_view>

#include "lienil/lie_algebra.hpp"

namespace lienil {

// Text format:
//   field p^k
//   dim n
//   labels l1 ... ln        (optional)
//   sc i j k value          (1-based, nonzero constants only)
// Lines starting with '#' are comments. c_{ji}^k = -c_{ij}^k is filled in
// automatically and the result is validated.
AlgebraPtr parse_algebra_text(std::string_view text, std::string name = "file");
AlgebraPtr load_algebra_file(const std::string& path);
std::string write_algebra_text(const LieAlgebra& algebra);

}  // namespace lienil
