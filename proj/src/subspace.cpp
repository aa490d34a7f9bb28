#include "lts/subspace.hpp"

#include <stdexcept>
#include <utility>

namespace lts {
namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace ambient dimension mismatch");
  if (!(a.field() == b.field())) throw std::invalid_argument("subspace field mismatch");
}

}  // namespace

Subspace::Subspace(Matrix basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(Field field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::whole(Field field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  Echelon e = rref(m);
  return Subspace(std::move(e.reduced), std::move(e.pivots));
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("contains: dimension mismatch");
  Vector w(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar c = w[pivots_[r]];
    if (!c.is_zero()) axpy(w, -c, basis_.row(r));
  }
  return lts::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw std::invalid_argument("contains: dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("coordinates: dimension mismatch");
  Vector coords;
  coords.reserve(dim());
  Vector rebuilt = zero_vector(field(), ambient_dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    coords.push_back(v[pivots_[r]]);
    axpy(rebuilt, coords.back(), basis_.row(r));
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(rebuilt[i] == v[i])) return std::nullopt;
  }
  return coords;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  Matrix stacked = a.basis();
  for (std::size_t r = 0; r < b.dim(); ++r) stacked.append_row(b.basis().row(r));
  return Subspace::row_space(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  const std::size_t n = a.ambient_dim();
  const Field field = a.field();
  // Zassenhaus: rows (a | a) and (b | 0); rows with vanishing left half span a ∩ b.
  Matrix block(field, 0, 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Vector row = a.basis_vector(r);
    row.insert(row.end(), row.begin(), row.end());
    block.append_row(row);
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    Vector row = b.basis_vector(r);
    row.resize(2 * n, field.zero());
    block.append_row(row);
  }
  const Echelon e = rref(block);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] < n) continue;
    auto row = e.reduced.row(r);
    rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return Subspace::span(field, n, rows);
}

Subspace kernel(const Matrix& m) {
  const Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> rows;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), n, free);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(r, free);
    rows.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, rows);
}

Subspace complete_complement(const Subspace& sub, const Subspace& within) {
  require_compatible(sub, within);
  if (!within.contains(sub)) throw std::invalid_argument("complete_complement: sub is not contained in within");
  Subspace running = sub;
  std::vector<Vector> chosen;
  for (std::size_t r = 0; r < within.dim() && running.dim() < within.dim(); ++r) {
    Vector candidate = within.basis_vector(r);
    if (running.contains(candidate)) continue;
    running = sum(running, Subspace::span(within.field(), within.ambient_dim(), {candidate}));
    chosen.push_back(std::move(candidate));
  }
  return Subspace::span(within.field(), within.ambient_dim(), chosen);
}

QuotientMap::QuotientMap(Subspace null_space, Subspace complement)
    : null_(std::move(null_space)), complement_(std::move(complement)) {
  if (null_.ambient_dim() != complement_.ambient_dim()) throw std::invalid_argument("QuotientMap: dimension mismatch");
  const std::size_t n = null_.ambient_dim();
  if (null_.dim() + complement_.dim() != n || !intersect(null_, complement_).is_zero()) {
    throw std::invalid_argument("QuotientMap: complement does not complete the null space");
  }
  Matrix full = complement_.basis();
  for (std::size_t r = 0; r < null_.dim(); ++r) full.append_row(null_.basis().row(r));
  const Matrix inv = inverse(full);
  projector_ = Matrix(null_.field(), n, complement_.dim());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < complement_.dim(); ++c) projector_.at(r, c) = inv.at(r, c);
  }
}

QuotientMap QuotientMap::greedy(const Subspace& null_space) {
  return QuotientMap(null_space,
                     complete_complement(null_space, Subspace::whole(null_space.field(), null_space.ambient_dim())));
}

Vector QuotientMap::project(std::span<const Scalar> v) const { return projector_.left_multiply(v); }

Vector QuotientMap::lift(std::span<const Scalar> coords) const { return complement_.basis().left_multiply(coords); }

}  // namespace lts
