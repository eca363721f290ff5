#include "mtrace/classify2x2.hpp"

#include <algorithm>

namespace mtrace {

namespace {

// S with S^{-1} A S upper triangular, for a 3-dimensional A: the first column spans the
// image of the radical, which is the unique A-invariant line.
Mat upper_triangularizer(const MatrixAlgebra& a) {
  const auto& field = a.field();
  const auto& els = a.elements();
  std::vector<Vec> constraints;
  for (const auto& y : els) {
    std::vector<Scalar> row;
    for (const auto& x : els) row.push_back(trace(x * y));
    constraints.emplace_back(field, std::move(row));
  }
  const auto null = solve_homogeneous(field, els.size(), constraints);
  auto n = Mat::zero(field, 2);
  for (std::size_t i = 0; i < els.size(); ++i) n += null.basis().at(0)[i] * els[i];
  auto v = n.column(0).is_zero() ? n.column(1) : n.column(0);
  auto line = rref(field, 2, std::vector<Vec>{v});
  auto columns = complete_basis(line);
  columns[0] = v;
  return Mat::from_columns(columns);
}

Mat first_unit_outside(const MatrixAlgebra& a) {
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      auto e = Mat::unit(a.field(), 2, i, j);
      if (!a.contains(e)) return e;
    }
  }
  throw Error(ErrorKind::PreconditionFailed, "algebra is all of M_2");
}

Verdict maximal() {
  Verdict v;
  v.outcome = Outcome::Maximal;
  v.branch = "classify2x2";
  return v;
}

Verdict not_maximal(Mat witness) {
  Verdict v;
  v.outcome = Outcome::NotMaximal;
  v.certificate = cert::WitnessExtension{std::move(witness)};
  v.branch = "classify2x2";
  return v;
}

Verdict not_tracial(Mat a, Mat b) {
  Verdict v;
  v.outcome = Outcome::NotTracial;
  v.certificate = cert::Violation{std::move(a), std::move(b)};
  v.branch = "classify2x2";
  return v;
}

}  // namespace

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Dim1: return "Dim1";
    case CaseLabel::Dim4: return "Dim4";
    case CaseLabel::Dim2SplitDistinct: return "Dim2SplitDistinct";
    case CaseLabel::Dim2SplitJordan: return "Dim2SplitJordan";
    case CaseLabel::Dim2Irreducible: return "Dim2Irreducible";
    case CaseLabel::Dim3: return "Dim3";
  }
  return "";
}

Classification classify(const MatrixAlgebra& a, const Functional& phi) {
  if (a.k() != 2 || phi.k() != 2) throw Error(ErrorKind::WrongDimension, "classify2x2 needs k = 2");
  if (a.field() != phi.field()) throw Error(ErrorKind::FieldMismatch, "algebra and functional fields differ");
  const auto& field = a.field();
  const auto kmat = phi.k_matrix();
  if (!trace(kmat).is_one()) throw Error(ErrorKind::NotUnital, "Tr(K) != 1");
  const bool half_trace = is_normalized_trace(phi);  // always false in characteristic 2
  auto conj = [&](const Mat& s, const Mat& m) { return s * m * inverse(s); };

  Classification out{maximal(), CaseLabel::Dim1, "", std::nullopt, std::nullopt};
  switch (a.dim()) {
    case 1:
      out.label = CaseLabel::Dim1;
      out.verdict = not_maximal(Mat::unit(field, 2, 0, 0));
      out.explanation = "scalars are abelian but not maximal abelian; every two-dimensional extension is tracial";
      return out;
    case 4: {
      out.label = CaseLabel::Dim4;
      if (half_trace) {
        out.explanation = "phi = (1/2)Tr is the only unital tracial functional on M_2";
        return out;
      }
      auto check = is_tracial(a, phi);
      out.verdict = not_tracial(check.violation->a, check.violation->b);
      out.explanation = field.characteristic() == 2
                            ? "characteristic 2: lambda Tr(1) = 0, so no unital tracial functional exists"
                            : "only phi = (1/2)Tr is tracial on M_2";
      return out;
    }
    case 3: {
      out.label = CaseLabel::Dim3;
      const auto s = upper_triangularizer(a);
      const auto kp = inverse(s) * kmat * s;
      out.similarity = s;
      out.transformed_k = kp;
      if (!kp(1, 0).is_zero()) {
        out.verdict = not_tracial(conj(s, Mat::unit(field, 2, 0, 0)), conj(s, Mat::unit(field, 2, 0, 1)));
        out.explanation = "similar to U_2, which is tracial only when phi(e12) = K'21 = 0";
        return out;
      }
      if (half_trace) {
        out.verdict = not_maximal(first_unit_outside(a));
        out.explanation = "phi = (1/2)Tr extends to all of M_2";
        return out;
      }
      out.explanation = "tracial since K'21 = 0; the only proper extension is M_2, tracial only for (1/2)Tr";
      return out;
    }
    default: break;
  }

  const auto& els = a.elements();
  const auto t = *std::find_if(els.begin(), els.end(), [](const Mat& m) { return !m.is_scalar(); });
  auto sim = similarity_to_canonical_2x2(t);
  const auto& s = sim.s;
  const auto kp = inverse(s) * kmat * s;
  out.similarity = s;
  out.transformed_k = kp;
  switch (sim.form.kind) {
    case CanonicalForm2x2::Kind::DiagDistinct:
      out.label = CaseLabel::Dim2SplitDistinct;
      if (kp(1, 0).is_zero()) {
        out.verdict = not_maximal(conj(s, Mat::unit(field, 2, 0, 1)));
        out.explanation = "similar to D_2 with phi(e12) = 0, so U_2 is a tracial extension";
      } else if (kp(0, 1).is_zero()) {
        out.verdict = not_maximal(conj(s, Mat::unit(field, 2, 1, 0)));
        out.explanation = "similar to D_2 with phi(e21) = 0, so L_2 is a tracial extension";
      } else {
        out.explanation = "similar to D_2 with phi(e12) != 0 and phi(e21) != 0";
      }
      return out;
    case CanonicalForm2x2::Kind::JordanRepeated:
      out.label = CaseLabel::Dim2SplitJordan;
      if (kp(1, 0).is_zero()) {
        out.verdict = not_maximal(conj(s, Mat::unit(field, 2, 0, 0)));
        out.explanation = "similar to T_2 with phi(e12) = 0, so U_2 is a tracial extension";
      } else {
        out.explanation = "similar to T_2 with phi(e12) != 0";
      }
      return out;
    case CanonicalForm2x2::Kind::CompanionIrreducible:
      out.label = CaseLabel::Dim2Irreducible;
      if (half_trace) {
        out.verdict = not_maximal(first_unit_outside(a));
        out.explanation = "a quadratic field inside M_2 with phi = (1/2)Tr, which extends to M_2";
      } else {
        out.explanation = "a quadratic field is a maximal subalgebra of M_2 and phi != (1/2)Tr";
      }
      return out;
  }
  return out;
}

}  // namespace mtrace
