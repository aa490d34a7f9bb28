#include "lts/embedding.hpp"

#include <stdexcept>

#include "lts/errors.hpp"

namespace lts {
namespace {

Subspace null_space_of(const GradedLTS& e) {
  const std::size_t n = e.dim();
  // Column i*n+j holds φ(b_i⊗b_j)(b_k) for all k, then ψ(b_i⊗b_j)(b_k) for all k.
  Matrix m(e.field(), 2 * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t col = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        const Vector& ph = e.basis_product(i, j, k);
        const Vector ps = e.basis_product(k, i, j) - e.basis_product(k, j, i);
        for (std::size_t l = 0; l < n; ++l) {
          m.at(k * n + l, col) = ph[l];
          m.at(n * n + k * n + l, col) = ps[l];
        }
      }
    }
  }
  return kernel(m);
}

std::string describe(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace

StandardEmbedding::StandardEmbedding(const GradedLTS& e)
    : system_(e), quotient_(QuotientMap::greedy(null_space_of(e))) {
  const std::size_t n = system_.dim();
  const std::size_t m = quotient_.dim();
  const Field field = system_.field();

  std::vector<Vector> reps(m);
  for (std::size_t r = 0; r < m; ++r) reps[r] = lift(unit_vector(field, m, r));

  even_table_.resize(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) even_table_[r * m + s] = project(tensor_bracket(reps[r], reps[s]));
  }
  right_action_.reserve(m);
  left_action_.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    Matrix right(field, 0, n);
    Matrix left(field, 0, n);
    for (std::size_t k = 0; k < n; ++k) {
      right.append_row(phi(reps[r], system_.unit(k)));
      left.append_row(psi(reps[r], system_.unit(k)));
    }
    right_action_.push_back(std::move(right));
    left_action_.push_back(std::move(left));
  }
  odd_table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) odd_table_[i * n + j] = project(unit_vector(field, n * n, i * n + j));
  }
}

StandardEmbedding StandardEmbedding::build(const GradedLTS& e) {
  StandardEmbedding emb(e);
  emb.certify_well_defined();
  emb.certify_leibniz();
  emb.build_grading();
  return emb;
}

Vector StandardEmbedding::tensor(const Vector& x, const Vector& y) const {
  const std::size_t n = system_.dim();
  Vector t = zero_vector(system_.field(), n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!y[j].is_zero()) t[i * n + j] = x[i] * y[j];
    }
  }
  return t;
}

Vector StandardEmbedding::phi(const Vector& t, const Vector& w) const {
  const std::size_t n = system_.dim();
  Vector out = system_.zero();
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (t[a].is_zero()) continue;
    axpy(out, t[a], system_.triple_product(system_.unit(a / n), system_.unit(a % n), w));
  }
  return out;
}

Vector StandardEmbedding::psi(const Vector& t, const Vector& z) const {
  const std::size_t n = system_.dim();
  Vector out = system_.zero();
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (t[a].is_zero()) continue;
    const Vector x = system_.unit(a / n);
    const Vector y = system_.unit(a % n);
    axpy(out, t[a], system_.triple_product(z, x, y) - system_.triple_product(z, y, x));
  }
  return out;
}

Vector StandardEmbedding::tensor_bracket(const Vector& t, const Vector& s) const {
  const std::size_t n = system_.dim();
  Vector out = zero_vector(system_.field(), n * n);
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (t[a].is_zero()) continue;
    const std::size_t x = a / n;
    const std::size_t y = a % n;
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (s[b].is_zero()) continue;
      const std::size_t u = b / n;
      const std::size_t v = b % n;
      const Scalar c = t[a] * s[b];
      // {x,y,u}⊗v - {x,y,v}⊗u
      const Vector& xyu = system_.basis_product(x, y, u);
      const Vector& xyv = system_.basis_product(x, y, v);
      for (std::size_t l = 0; l < n; ++l) {
        if (!xyu[l].is_zero()) out[l * n + v] += c * xyu[l];
        if (!xyv[l].is_zero()) out[l * n + u] -= c * xyv[l];
      }
    }
  }
  return out;
}

Vector StandardEmbedding::bracket_even(const Vector& x, const Vector& y) const {
  const std::size_t m = even_dim();
  Vector out = zero_vector(system_.field(), m);
  for (std::size_t r = 0; r < m; ++r) {
    if (x[r].is_zero()) continue;
    for (std::size_t s = 0; s < m; ++s) {
      if (!y[s].is_zero()) axpy(out, x[r] * y[s], even_table_[r * m + s]);
    }
  }
  return out;
}

Vector StandardEmbedding::act_right(const Vector& x, const Vector& w) const {
  Vector out = system_.zero();
  for (std::size_t r = 0; r < even_dim(); ++r) {
    if (!x[r].is_zero()) axpy(out, x[r], right_action_[r].left_multiply(w));
  }
  return out;
}

Vector StandardEmbedding::act_left(const Vector& z, const Vector& x) const {
  Vector out = system_.zero();
  for (std::size_t r = 0; r < even_dim(); ++r) {
    if (!x[r].is_zero()) axpy(out, x[r], left_action_[r].left_multiply(z));
  }
  return out;
}

Vector StandardEmbedding::bracket_odd(const Vector& z, const Vector& w) const {
  const std::size_t n = system_.dim();
  Vector out = zero_vector(system_.field(), even_dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!w[j].is_zero()) axpy(out, z[i] * w[j], odd_table_[i * n + j]);
    }
  }
  return out;
}

EmbeddingElement StandardEmbedding::bracket(const EmbeddingElement& a, const EmbeddingElement& b) const {
  return {bracket_even(a.even, b.even) + bracket_odd(a.odd, b.odd), act_right(a.even, b.odd) + act_left(a.odd, b.even)};
}

std::vector<EmbeddingElement> StandardEmbedding::basis() const {
  const Field field = system_.field();
  const std::size_t m = even_dim();
  const std::size_t n = system_.dim();
  std::vector<EmbeddingElement> out;
  for (std::size_t r = 0; r < m; ++r) out.push_back({unit_vector(field, m, r), zero_vector(field, n)});
  for (std::size_t i = 0; i < n; ++i) out.push_back({zero_vector(field, m), unit_vector(field, n, i)});
  return out;
}

void StandardEmbedding::certify_well_defined() {
  const std::size_t n = system_.dim();
  const Field field = system_.field();
  const Subspace& nul = null_space();
  for (std::size_t r = 0; r < nul.dim(); ++r) {
    const Vector nu = nul.basis_vector(r);
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_zero(phi(nu, system_.unit(k))) || !is_zero(psi(nu, system_.unit(k)))) {
        throw NotWellDefined("element " + describe(nu) + " of N acts nontrivially on E");
      }
    }
    for (std::size_t a = 0; a < n * n; ++a) {
      const Vector u = unit_vector(field, n * n, a);
      ++certificates_.well_defined_checks;
      if (!nul.contains(tensor_bracket(u, nu))) {
        throw NotWellDefined("[b_" + std::to_string(a / n) + "⊗b_" + std::to_string(a % n) + ", " + describe(nu) + "] leaves N");
      }
      if (!nul.contains(tensor_bracket(nu, u))) {
        throw NotWellDefined("[" + describe(nu) + ", b_" + std::to_string(a / n) + "⊗b_" + std::to_string(a % n) + "] leaves N");
      }
    }
  }
  certificates_.well_defined = true;
}

void StandardEmbedding::certify_leibniz() {
  const auto b = basis();
  for (std::size_t iy = 0; iy < b.size(); ++iy) {
    for (std::size_t iz = 0; iz < b.size(); ++iz) {
      const EmbeddingElement yz = bracket(b[iy], b[iz]);
      for (std::size_t ix = 0; ix < b.size(); ++ix) {
        ++certificates_.leibniz_triples;
        const EmbeddingElement lhs = bracket(yz, b[ix]);
        const EmbeddingElement yx_z = bracket(bracket(b[iy], b[ix]), b[iz]);
        const EmbeddingElement y_zx = bracket(b[iy], bracket(b[iz], b[ix]));
        if (lhs.even != yx_z.even + y_zx.even || lhs.odd != yx_z.odd + y_zx.odd) {
          throw LeibnizIdentityFailure("[[y,z],x] != [[y,x],z] + [y,[z,x]] for basis triple (y,z,x) = (" +
                                       std::to_string(iy) + "," + std::to_string(iz) + "," + std::to_string(ix) + ")");
        }
      }
    }
  }
  certificates_.leibniz = true;
}

void StandardEmbedding::build_grading() {
  const std::size_t n = system_.dim();
  const std::size_t m = even_dim();
  const auto& group = system_.group();
  std::map<GroupElement, std::vector<Vector>> generators;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& img = odd_table_[i * n + j];
      if (is_zero(img)) continue;
      generators[group.compose(system_.degree(i), system_.degree(j))].push_back(img);
    }
  }
  std::size_t total = 0;
  Subspace all = Subspace::zero(system_.field(), m);
  for (auto& [g, rows] : generators) {
    Subspace comp = Subspace::span(system_.field(), m, rows);
    if (!intersect(all, comp).is_zero()) {
      throw DecompositionFailure("L0_" + g.to_string() + " meets the sum of earlier components");
    }
    total += comp.dim();
    all = sum(all, comp);
    components_.emplace(g, std::move(comp));
  }
  if (total != m || !all.is_whole()) {
    throw DecompositionFailure("homogeneous components span " + std::to_string(all.dim()) + " of " + std::to_string(m) + " dimensions");
  }
  certificates_.direct_sum = true;
}

Subspace StandardEmbedding::l0_component(const GroupElement& g) const {
  const auto it = components_.find(g);
  return it == components_.end() ? Subspace::zero(system_.field(), even_dim()) : it->second;
}

std::vector<GroupElement> StandardEmbedding::support_sigma0() const {
  std::vector<GroupElement> out;
  for (const auto& [g, comp] : components_) {
    if (!system_.group().is_identity(g)) out.push_back(g);
  }
  return out;
}

std::vector<Violation> verify_l0_grading(const StandardEmbedding& emb) {
  std::vector<Violation> out;
  const auto& group = emb.system().group();
  const auto& comps = emb.l0_components();
  std::size_t gi = 0;
  for (const auto& [g, cg] : comps) {
    std::size_t hi = 0;
    for (const auto& [h, ch] : comps) {
      const Subspace target = emb.l0_component(group.compose(g, h));
      for (std::size_t r = 0; r < cg.dim(); ++r) {
        for (std::size_t s = 0; s < ch.dim(); ++s) {
          Vector br = emb.bracket_even(cg.basis_vector(r), ch.basis_vector(s));
          if (!target.contains(br)) out.push_back({"l0_grading", {gi, r, hi, s}, std::move(br)});
        }
      }
      ++hi;
    }
    ++gi;
  }
  return out;
}

}  // namespace lts
