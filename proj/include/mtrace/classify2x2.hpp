#pragma once

#include <optional>
#include <string>

#include "mtrace/tracial.hpp"

namespace mtrace {

enum class CaseLabel { Dim1, Dim4, Dim2SplitDistinct, Dim2SplitJordan, Dim2Irreducible, Dim3 };
std::string to_string(CaseLabel label);

struct Classification {
  Verdict verdict;
  CaseLabel label;
  std::string explanation;
  std::optional<Mat> similarity;  // S with S^{-1} A S in the case's representative form
  std::optional<Mat> transformed_k;  // S^{-1} K S
};

/// Case analysis over the unital subalgebras of M_2(F); no search involved.
/// Throws WrongDimension when k != 2 and NotUnital when Tr(K) != 1.
Classification classify(const MatrixAlgebra& a, const Functional& phi);

}  // namespace mtrace
