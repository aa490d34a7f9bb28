#include "lts/triple_system.hpp"

#include <algorithm>
#include <stdexcept>

#include "lts/errors.hpp"

namespace lts {
namespace {

std::vector<std::size_t> support_of(const Vector& v) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) idx.push_back(i);
  }
  return idx;
}

std::string vector_to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace

GradedLTS::GradedLTS(AbelianGroup group, Field field, std::vector<GroupElement> degrees, StructureConstants constants)
    : group_(std::move(group)), field_(field), degrees_(std::move(degrees)) {
  const std::size_t n = degrees_.size();
  for (const GroupElement& g : degrees_) {
    if (!group_.is_canonical(g)) throw std::invalid_argument("degree " + g.to_string() + " is not a canonical element of " + group_.to_string());
  }
  for (auto& [key, terms] : constants) {
    for (std::size_t idx : key) {
      if (idx >= n) throw std::invalid_argument("structure constant index out of range");
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    SparseVector cleaned;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      if (terms[t].index >= n) throw std::invalid_argument("structure constant output index out of range");
      if (!(terms[t].coeff.field() == field_)) throw std::invalid_argument("structure constant from a different field");
      if (t > 0 && terms[t].index == terms[t - 1].index) throw std::invalid_argument("duplicate output index in structure constant");
      if (!terms[t].coeff.is_zero()) cleaned.push_back(terms[t]);
    }
    if (!cleaned.empty()) constants_.emplace(key, std::move(cleaned));
  }
  table_.assign(n * n * n, zero_vector(field_, n));
  for (const auto& [key, terms] : constants_) {
    Vector& v = table_[(key[0] * n + key[1]) * n + key[2]];
    for (const Term& t : terms) v[t.index] = t.coeff;
  }
}

Vector GradedLTS::triple_product(const Vector& x, const Vector& y, const Vector& z) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n || z.size() != n) throw std::invalid_argument("triple_product: dimension mismatch");
  Vector out = zero();
  const auto xs = support_of(x);
  const auto ys = support_of(y);
  const auto zs = support_of(z);
  for (std::size_t i : xs) {
    for (std::size_t j : ys) {
      const Scalar xy = x[i] * y[j];
      for (std::size_t k : zs) {
        const auto it = constants_.find({i, j, k});
        if (it == constants_.end()) continue;
        const Scalar c = xy * z[k];
        for (const Term& t : it->second) out[t.index] += c * t.coeff;
      }
    }
  }
  return out;
}

std::string Violation::to_string() const {
  std::string out = identity + " at (";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i]);
  }
  return out + ") residual " + vector_to_string(residual);
}

namespace {

/// Runs `residual(a,b,c,d,e)` over all quintuples and collects nonzero results.
template <typename F>
std::vector<Violation> sweep5(const GradedLTS& e, const std::string& name, F&& residual) {
  std::vector<Violation> out;
  const std::size_t n = e.dim();
  std::vector<Vector> unit(n);
  for (std::size_t i = 0; i < n; ++i) unit[i] = e.unit(i);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t x = 0; x < n; ++x) {
            Vector r = residual(unit, a, b, c, d, x);
            if (!is_zero(r)) out.push_back({name, {a, b, c, d, x}, std::move(r)});
          }
  return out;
}

}  // namespace

std::vector<Violation> verify_lts_axioms(const GradedLTS& e) {
  auto tp = [&](const Vector& x, const Vector& y, const Vector& z) { return e.triple_product(x, y, z); };
  auto first = sweep5(e, "axiom1", [&](const std::vector<Vector>& u, auto a, auto b, auto c, auto d, auto x) {
    const Vector lhs = tp(u[a], e.basis_product(b, c, d), u[x]);
    const Vector rhs = tp(e.basis_product(a, b, c), u[d], u[x]) - tp(e.basis_product(a, c, b), u[d], u[x]) -
                       tp(e.basis_product(a, d, b), u[c], u[x]) + tp(e.basis_product(a, d, c), u[b], u[x]);
    return lhs - rhs;
  });
  auto second = sweep5(e, "axiom2", [&](const std::vector<Vector>& u, auto a, auto b, auto c, auto d, auto x) {
    const Vector lhs = tp(u[a], u[b], e.basis_product(c, d, x));
    const Vector rhs = tp(e.basis_product(a, b, c), u[d], u[x]) - tp(e.basis_product(a, b, d), u[c], u[x]) -
                       tp(e.basis_product(a, b, x), u[c], u[d]) + tp(e.basis_product(a, b, x), u[d], u[c]);
    return lhs - rhs;
  });
  first.insert(first.end(), std::make_move_iterator(second.begin()), std::make_move_iterator(second.end()));
  return first;
}

std::vector<Violation> verify_fundamental_identity(const GradedLTS& e) {
  auto tp = [&](const Vector& x, const Vector& y, const Vector& z) { return e.triple_product(x, y, z); };
  return sweep5(e, "fundamental", [&](const std::vector<Vector>& u, auto a, auto b, auto c, auto d, auto x) {
    const Vector& cdx = e.basis_product(c, d, x);
    return tp(cdx, u[b], u[a]) - tp(cdx, u[a], u[b]) - tp(e.basis_product(c, b, a), u[d], u[x]) +
           tp(e.basis_product(c, a, b), u[d], u[x]) - tp(u[c], e.basis_product(a, b, d), u[x]) -
           tp(u[c], u[d], e.basis_product(a, b, x));
  });
}

std::vector<Violation> verify_grading(const GradedLTS& e) {
  std::vector<Violation> out;
  const auto& group = e.group();
  for (const auto& [key, terms] : e.constants()) {
    const GroupElement expected = group.compose(e.degree(key[0]), e.degree(key[1]), e.degree(key[2]));
    for (const Term& t : terms) {
      if (e.degree(t.index) == expected) continue;
      Vector r = e.zero();
      r[t.index] = t.coeff;
      out.push_back({"grading", {key[0], key[1], key[2], t.index}, std::move(r)});
    }
  }
  return out;
}

Subspace homogeneous_component(const GradedLTS& e, const GroupElement& g) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (e.degree(i) == g) rows.push_back(e.unit(i));
  }
  return Subspace::span(e.field(), e.dim(), rows);
}

std::map<GroupElement, Subspace> homogeneous_decomposition(const GradedLTS& e) {
  std::map<GroupElement, Subspace> out;
  for (const GroupElement& g : e.degrees()) {
    if (!out.contains(g)) out.emplace(g, homogeneous_component(e, g));
  }
  return out;
}

std::vector<GroupElement> support_sigma1(const GradedLTS& e) {
  std::vector<GroupElement> out;
  for (const auto& [g, comp] : homogeneous_decomposition(e)) {
    if (!e.group().is_identity(g)) out.push_back(g);
  }
  return out;
}

Subspace products_with(const GradedLTS& e, const Subspace& s) {
  std::vector<Vector> rows;
  const std::size_t n = e.dim();
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vector x = s.basis_vector(r);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector bj = e.unit(j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector bk = e.unit(k);
        for (Vector p : {e.triple_product(x, bj, bk), e.triple_product(bj, x, bk), e.triple_product(bj, bk, x)}) {
          if (!is_zero(p)) rows.push_back(std::move(p));
        }
      }
    }
  }
  return Subspace::span(e.field(), n, rows);
}

Subspace ideal_closure(const GradedLTS& e, const Subspace& s) {
  Subspace current = s;
  for (std::size_t step = 0; step <= e.dim(); ++step) {
    Subspace next = sum(current, products_with(e, current));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
  return current;
}

std::optional<ProductWitness> ideal_witness(const GradedLTS& e, const Subspace& i) {
  const std::size_t n = e.dim();
  for (std::size_t r = 0; r < i.dim(); ++r) {
    const Vector x = i.basis_vector(r);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector bj = e.unit(j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector bk = e.unit(k);
        Vector p = e.triple_product(x, bj, bk);
        if (!i.contains(p)) return ProductWitness{"{I,E,E}", {x, bj, bk}, std::move(p)};
        p = e.triple_product(bj, x, bk);
        if (!i.contains(p)) return ProductWitness{"{E,I,E}", {bj, x, bk}, std::move(p)};
        p = e.triple_product(bj, bk, x);
        if (!i.contains(p)) return ProductWitness{"{E,E,I}", {bj, bk, x}, std::move(p)};
      }
    }
  }
  return std::nullopt;
}

std::optional<ProductWitness> subsystem_witness(const GradedLTS& e, const Subspace& s) {
  std::vector<Vector> basis;
  for (std::size_t r = 0; r < s.dim(); ++r) basis.push_back(s.basis_vector(r));
  for (const Vector& x : basis)
    for (const Vector& y : basis)
      for (const Vector& z : basis) {
        Vector p = e.triple_product(x, y, z);
        if (!s.contains(p)) return ProductWitness{"{S,S,S}", {x, y, z}, std::move(p)};
      }
  return std::nullopt;
}

Subspace j_generators(const GradedLTS& e) {
  const std::size_t n = e.dim();
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector g = e.basis_product(a, b, c) - e.basis_product(a, c, b) + e.basis_product(b, c, a);
        if (!is_zero(g)) rows.push_back(std::move(g));
      }
  return Subspace::span(e.field(), n, rows);
}

Subspace compute_J(const GradedLTS& e) {
  Subspace j = ideal_closure(e, j_generators(e));
  const std::size_t n = e.dim();
  for (std::size_t r = 0; r < j.dim(); ++r) {
    const Vector x = j.basis_vector(r);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!is_zero(e.triple_product(e.unit(a), e.unit(b), x))) {
          throw CertificateFailure("JVanishing", "{E,E,J} != 0 at basis (" + std::to_string(a) + "," + std::to_string(b) + ") and J basis vector " + std::to_string(r));
        }
        if (!is_zero(e.triple_product(e.unit(a), x, e.unit(b)))) {
          throw CertificateFailure("JVanishing", "{E,J,E} != 0 at basis (" + std::to_string(a) + "," + std::to_string(b) + ") and J basis vector " + std::to_string(r));
        }
      }
    }
  }
  return j;
}

bool lie_triple_axioms_hold(const GradedLTS& e) {
  const std::size_t n = e.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        // {x,x,z} = 0 for all x, polarized so it is decided on basis vectors in every characteristic.
        if (a == b && !is_zero(e.basis_product(a, a, c))) return false;
        if (!is_zero(e.basis_product(a, b, c) + e.basis_product(b, a, c))) return false;
        if (!is_zero(e.basis_product(a, b, c) + e.basis_product(b, c, a) + e.basis_product(c, a, b))) return false;
      }
  return true;
}

bool is_lie_triple(const GradedLTS& e) {
  const bool via_j = compute_J(e).is_zero();
  const bool direct = lie_triple_axioms_hold(e);
  if (via_j != direct) {
    throw OracleDisagreement(std::string("J = 0 is ") + (via_j ? "true" : "false") + " but the direct Lie triple test says " +
                             (direct ? "true" : "false"));
  }
  return via_j;
}

Subspace annihilator(const GradedLTS& e) {
  const std::size_t n = e.dim();
  // Column x holds ({b_x,b_j,b_k}, {b_j,b_x,b_k}, {b_j,b_k,b_x}) stacked over (j,k).
  Matrix m(e.field(), 3 * n * n * n, n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (const Vector* p : {&e.basis_product(x, j, k), &e.basis_product(j, x, k), &e.basis_product(j, k, x)}) {
          for (std::size_t l = 0; l < n; ++l) m.at(row + l, x) = (*p)[l];
          row += n;
        }
  }
  return kernel(m);
}

}  // namespace lts
