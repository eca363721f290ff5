#include "mtrace/linalg.hpp"

#include <algorithm>

namespace mtrace {

namespace {

void require_dim(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

void require_field(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) throw Error(ErrorKind::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

}  // namespace

// ---------------------------------------------------------------- Vec

Vec::Vec(FieldSpec field, std::vector<Scalar> entries) : field_(field), entries_(std::move(entries)) {
  for (const auto& e : entries_) require_field(field_, e.field());
}

Vec Vec::zero(const FieldSpec& field, std::size_t d) {
  return Vec(field, std::vector<Scalar>(d, Scalar::zero(field)));
}

Vec Vec::unit(const FieldSpec& field, std::size_t d, std::size_t i) {
  auto v = zero(field, d);
  v[i] = Scalar::one(field);
  return v;
}

bool Vec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string Vec::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ", ";
    out += entries_[i].to_string();
  }
  return out + ")";
}

Vec& Vec::operator+=(const Vec& rhs) {
  require_field(field_, rhs.field_);
  require_dim(size() == rhs.size(), "vector lengths differ");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& rhs) {
  require_field(field_, rhs.field_);
  require_dim(size() == rhs.size(), "vector lengths differ");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

int compare(const Vec& a, const Vec& b) {
  require_dim(a.size() == b.size(), "vector lengths differ");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (int c = compare(a[i], b[i]); c != 0) return c;
  }
  return 0;
}

Scalar pairing(const Vec& x, const Vec& y) {
  require_field(x.field(), y.field());
  require_dim(x.size() == y.size(), "pairing of vectors with different lengths");
  auto acc = Scalar::zero(x.field());
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

// ---------------------------------------------------------------- Mat

Mat::Mat(FieldSpec field, std::size_t k, std::vector<Scalar> entries)
    : field_(field), k_(k), entries_(std::move(entries)) {
  require_dim(k_ >= 1 && entries_.size() == k_ * k_, "matrix needs k*k entries with k >= 1");
  for (const auto& e : entries_) require_field(field_, e.field());
}

Mat Mat::zero(const FieldSpec& field, std::size_t k) {
  return Mat(field, k, std::vector<Scalar>(k * k, Scalar::zero(field)));
}

Mat Mat::identity(const FieldSpec& field, std::size_t k) {
  auto m = zero(field, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Mat Mat::unit(const FieldSpec& field, std::size_t k, std::size_t i, std::size_t j) {
  auto m = zero(field, k);
  m(i, j) = Scalar::one(field);
  return m;
}

Mat Mat::from_columns(std::span<const Vec> columns) {
  require_dim(!columns.empty(), "no columns");
  const auto k = columns.size();
  auto m = zero(columns[0].field(), k);
  for (std::size_t j = 0; j < k; ++j) {
    require_dim(columns[j].size() == k, "column length differs from column count");
    for (std::size_t i = 0; i < k; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec Mat::column(std::size_t j) const {
  std::vector<Scalar> out;
  out.reserve(k_);
  for (std::size_t i = 0; i < k_; ++i) out.push_back((*this)(i, j));
  return Vec(field_, std::move(out));
}

bool Mat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::is_scalar() const {
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < k_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
      if (i == j && (*this)(i, i) != (*this)(0, 0)) return false;
    }
  }
  return true;
}

std::string Mat::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < k_; ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < k_; ++j) {
      if (j > 0) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

void Mat::check_compatible(const Mat& rhs) const {
  require_field(field_, rhs.field_);
  require_dim(k_ == rhs.k_, "matrix sizes differ");
}

Mat& Mat::operator+=(const Mat& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  a.check_compatible(b);
  const auto k = a.k_;
  auto out = Mat::zero(a.field_, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const auto& ail = a(i, l);
      if (ail.is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j) out(i, j) += ail * b(l, j);
    }
  }
  return out;
}

Vec operator*(const Mat& a, const Vec& x) {
  require_field(a.field_, x.field());
  require_dim(a.k_ == x.size(), "matrix-vector size mismatch");
  auto out = Vec::zero(a.field_, a.k_);
  for (std::size_t i = 0; i < a.k_; ++i) {
    for (std::size_t j = 0; j < a.k_; ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

Mat transpose(const Mat& m) {
  auto out = Mat::zero(m.field(), m.k());
  for (std::size_t i = 0; i < m.k(); ++i) {
    for (std::size_t j = 0; j < m.k(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

Scalar trace(const Mat& m) {
  auto acc = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.k(); ++i) acc += m(i, i);
  return acc;
}

Scalar determinant_2x2(const Mat& m) {
  require_dim(m.k() == 2, "determinant_2x2 on a " + std::to_string(m.k()) + "x" + std::to_string(m.k()) + " matrix");
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

Mat inverse(const Mat& m) {
  const auto k = m.k();
  const auto& f = m.field();
  auto a = m;
  auto inv = Mat::identity(f, k);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a(piv, col).is_zero()) ++piv;
    if (piv == k) throw Error(ErrorKind::Singular, "matrix " + m.to_string() + " is not invertible");
    if (piv != col) {
      for (std::size_t j = 0; j < k; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const auto scale = a(col, col).inverse();
    for (std::size_t j = 0; j < k; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const auto factor = a(r, col);
      for (std::size_t j = 0; j < k; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat outer(const Vec& x, const Vec& y) {
  require_field(x.field(), y.field());
  require_dim(x.size() == y.size(), "outer product of vectors with different lengths");
  auto out = Mat::zero(x.field(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out(i, j) = x[i] * y[j];
  }
  return out;
}

Vec vectorize(const Mat& m) {
  return Vec(m.field(), std::vector<Scalar>(m.entries().begin(), m.entries().end()));
}

Mat unvectorize(const Vec& v, std::size_t k) {
  require_dim(v.size() == k * k, "vector of length " + std::to_string(v.size()) + " is not " +
                                     std::to_string(k) + "x" + std::to_string(k));
  return Mat(v.field(), k, std::vector<Scalar>(v.entries().begin(), v.entries().end()));
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient_dim) { return Subspace(field, ambient_dim); }

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient_dim) {
  std::vector<Vec> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(Vec::unit(field, ambient_dim, i));
  return rref(field, ambient_dim, units);
}

Vec Subspace::reduce(const Vec& v) const {
  require_field(field_, v.field());
  require_dim(v.size() == ambient_dim_, "vector length " + std::to_string(v.size()) + " vs ambient dimension " +
                                            std::to_string(ambient_dim_));
  auto r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_dim_; ++j) r[j] -= c * basis_[i][j];
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Vec Subspace::combine(std::span<const Scalar> coefficients) const {
  require_dim(coefficients.size() == basis_.size(), "coefficient count differs from dimension");
  auto out = Vec::zero(field_, ambient_dim_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (coefficients[i].is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_dim_; ++j) out[j] += coefficients[i] * basis_[i][j];
  }
  return out;
}

std::string Subspace::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i > 0) out += ", ";
    out += basis_[i].to_string();
  }
  return out + "}";
}

int compare(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_ ? -1 : 1;
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (int c = compare(a.basis_[i], b.basis_[i]); c != 0) return c;
  }
  return 0;
}

Subspace rref(const FieldSpec& field, std::size_t d, std::span<const Vec> vectors) {
  Subspace out(field, d);
  std::vector<Vec> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    require_field(field, v.field());
    require_dim(v.size() == d, "vector of length " + std::to_string(v.size()) + " in F^" + std::to_string(d));
    if (!v.is_zero()) rows.push_back(v);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const auto scale = rows[rank][col].inverse();
    for (std::size_t j = col; j < d; ++j) rows[rank][j] *= scale;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const auto factor = rows[r][col];
      for (std::size_t j = col; j < d; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    out.pivots_.push_back(col);
    ++rank;
  }
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end());
  out.basis_ = std::move(rows);
  return out;
}

bool member(const Subspace& s, const Vec& v) { return s.contains(v); }

Subspace solve_homogeneous(const FieldSpec& field, std::size_t d, std::span<const Vec> constraints) {
  const auto echelon = rref(field, d, constraints);
  std::vector<bool> is_pivot(d, false);
  for (auto p : echelon.pivots()) is_pivot[p] = true;
  std::vector<Vec> null_basis;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    auto v = Vec::unit(field, d, free);
    for (std::size_t r = 0; r < echelon.dim(); ++r) v[echelon.pivots()[r]] = -echelon.basis()[r][free];
    null_basis.push_back(std::move(v));
  }
  return rref(field, d, null_basis);
}

Subspace annihilator(const Subspace& s) { return solve_homogeneous(s.field(), s.ambient_dim(), s.basis()); }

Subspace span_union(const Subspace& a, const Subspace& b) {
  require_dim(a.ambient_dim() == b.ambient_dim(), "ambient dimensions differ");
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return rref(a.field(), a.ambient_dim(), all);
}

std::vector<Vec> complete_basis(const Subspace& s) {
  std::vector<Vec> out = s.basis();
  auto current = s;
  for (std::size_t i = 0; i < s.ambient_dim() && out.size() < s.ambient_dim(); ++i) {
    auto e = Vec::unit(s.field(), s.ambient_dim(), i);
    if (current.contains(e)) continue;
    out.push_back(e);
    current = rref(s.field(), s.ambient_dim(), out);
  }
  return out;
}

}  // namespace mtrace
