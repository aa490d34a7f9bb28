#include "lts/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "lts/errors.hpp"
#include "lts/io.hpp"

#ifndef LTS_DEFAULT_FIXTURE_DIR
#define LTS_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace lts {

GradedLeibnizAlgebra::GradedLeibnizAlgebra(AbelianGroup group, Field field, std::vector<GroupElement> degrees,
                                           BracketConstants brackets)
    : group_(std::move(group)), field_(field), degrees_(std::move(degrees)) {
  const std::size_t n = dim();
  for (const GroupElement& g : degrees_) {
    if (!group_.is_canonical(g)) throw std::invalid_argument("degree " + g.to_string() + " is not canonical");
  }
  table_.assign(n * n, zero_vector(field_, n));
  for (auto& [key, terms] : brackets) {
    if (key[0] >= n || key[1] >= n) throw std::invalid_argument("bracket index out of range");
    SparseVector kept;
    Vector& dense = table_[key[0] * n + key[1]];
    for (const Term& t : terms) {
      if (t.index >= n) throw std::invalid_argument("bracket output index out of range");
      if (t.coeff.field() != field_) throw std::invalid_argument("bracket coefficient over the wrong field");
      if (!dense[t.index].is_zero()) throw std::invalid_argument("duplicate bracket output index");
      dense[t.index] = t.coeff;
      if (!t.coeff.is_zero()) kept.push_back(t);
    }
    std::sort(kept.begin(), kept.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    if (!kept.empty()) brackets_.emplace(key, std::move(kept));
  }
}

Vector GradedLeibnizAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out = zero_vector(field_, dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], basis_bracket(i, j));
    }
  }
  return out;
}

std::vector<Violation> verify_leibniz_identity(const GradedLeibnizAlgebra& a) {
  std::vector<Violation> out;
  const std::size_t n = a.dim();
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t x = 0; x < n; ++x) {
        const Vector bx = unit_vector(a.field(), n, x);
        const Vector by = unit_vector(a.field(), n, y);
        const Vector bz = unit_vector(a.field(), n, z);
        Vector r = a.bracket(a.basis_bracket(y, z), bx) - a.bracket(a.basis_bracket(y, x), bz) -
                   a.bracket(by, a.basis_bracket(z, x));
        if (!is_zero(r)) out.push_back({"leibniz", {y, z, x}, std::move(r)});
      }
    }
  }
  return out;
}

std::vector<Violation> verify_algebra_grading(const GradedLeibnizAlgebra& a) {
  std::vector<Violation> out;
  for (const auto& [key, terms] : a.brackets()) {
    const GroupElement expected = a.group().compose(a.degrees()[key[0]], a.degrees()[key[1]]);
    for (const Term& t : terms) {
      if (a.degrees()[t.index] != expected) {
        out.push_back({"grading", {key[0], key[1], t.index}, a.basis_bracket(key[0], key[1])});
      }
    }
  }
  return out;
}

GradedLTS from_leibniz_algebra(const GradedLeibnizAlgebra& a) {
  if (auto v = verify_leibniz_identity(a); !v.empty()) throw LeibnizIdentityFailure(v.front().to_string());
  if (auto v = verify_algebra_grading(a); !v.empty()) throw LeibnizIdentityFailure(v.front().to_string());
  const std::size_t n = a.dim();
  StructureConstants constants;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector v = a.bracket(a.basis_bracket(i, j), unit_vector(a.field(), n, k));
        SparseVector terms;
        for (std::size_t l = 0; l < n; ++l) {
          if (!v[l].is_zero()) terms.push_back({l, v[l]});
        }
        if (!terms.empty()) constants.emplace(TripleKey{i, j, k}, std::move(terms));
      }
    }
  }
  GradedLTS e(a.group(), a.field(), a.degrees(), std::move(constants));
  if (auto v = verify_lts_axioms(e); !v.empty()) throw CertificateFailure("Axioms", v.front().to_string());
  return e;
}

GradedLeibnizAlgebra sl2_algebra(const AbelianGroup& group, const std::vector<GroupElement>& degrees, Field field) {
  if (degrees.size() != 3) throw std::invalid_argument("sl2 needs three degrees");
  auto c = [&](long v) { return field.from_int(v); };
  BracketConstants b;
  b[{1, 0}] = {{0, c(2)}};
  b[{0, 1}] = {{0, c(-2)}};
  b[{1, 2}] = {{2, c(-2)}};
  b[{2, 1}] = {{2, c(2)}};
  b[{0, 2}] = {{1, c(1)}};
  b[{2, 0}] = {{1, c(-1)}};
  return GradedLeibnizAlgebra(group, field, degrees, std::move(b));
}

GradedLTS zero_system(std::size_t n, Field field) {
  const AbelianGroup z({0});
  return GradedLTS(z, field, std::vector<GroupElement>(n, z.identity()), {});
}

namespace {

StructureConstants shifted(const StructureConstants& c, std::size_t offset) {
  StructureConstants out;
  for (const auto& [key, terms] : c) {
    SparseVector t = terms;
    for (Term& term : t) term.index += offset;
    out.emplace(TripleKey{key[0] + offset, key[1] + offset, key[2] + offset}, std::move(t));
  }
  return out;
}

}  // namespace

GradedLTS direct_sum(const GradedLTS& a, const GradedLTS& b) {
  if (a.field() != b.field()) throw std::invalid_argument("direct sum over different fields");
  const AbelianGroup group = direct_product(a.group(), b.group());
  std::vector<GroupElement> degrees;
  auto join = [](const GroupElement& g, const GroupElement& h) {
    std::vector<std::int64_t> c = g.coords();
    c.insert(c.end(), h.coords().begin(), h.coords().end());
    return GroupElement(std::move(c));
  };
  for (const GroupElement& g : a.degrees()) degrees.push_back(join(g, b.group().identity()));
  for (const GroupElement& h : b.degrees()) degrees.push_back(join(a.group().identity(), h));
  StructureConstants c = a.constants();
  c.merge(shifted(b.constants(), a.dim()));
  return GradedLTS(group, a.field(), std::move(degrees), std::move(c));
}

GradedLTS direct_sum_same_group(const GradedLTS& a, const GradedLTS& b) {
  if (a.field() != b.field()) throw std::invalid_argument("direct sum over different fields");
  if (a.group() != b.group()) throw std::invalid_argument("direct sum over different groups");
  std::vector<GroupElement> degrees = a.degrees();
  degrees.insert(degrees.end(), b.degrees().begin(), b.degrees().end());
  StructureConstants c = a.constants();
  c.merge(shifted(b.constants(), a.dim()));
  return GradedLTS(a.group(), a.field(), std::move(degrees), std::move(c));
}

GradedLTS permute_basis(const GradedLTS& e, const std::vector<std::size_t>& perm) {
  const std::size_t n = e.dim();
  if (perm.size() != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || inv[perm[i]] != n) throw std::invalid_argument("not a permutation");
    inv[perm[i]] = i;
  }
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < n; ++i) degrees.push_back(e.degree(perm[i]));
  StructureConstants c;
  for (const auto& [key, terms] : e.constants()) {
    SparseVector t;
    for (const Term& term : terms) t.push_back({inv[term.index], term.coeff});
    std::sort(t.begin(), t.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
    c.emplace(TripleKey{inv[key[0]], inv[key[1]], inv[key[2]]}, std::move(t));
  }
  return GradedLTS(e.group(), e.field(), std::move(degrees), std::move(c));
}

GradedLTS regrade(const GradedLTS& e, AbelianGroup group, std::vector<GroupElement> degrees) {
  return GradedLTS(std::move(group), e.field(), std::move(degrees), e.constants());
}

std::filesystem::path fixture_directory() {
  if (const char* dir = std::getenv("LTS_FIXTURE_DIR"); dir && *dir) return dir;
  return LTS_DEFAULT_FIXTURE_DIR;
}

GradedLTS builtin(std::string_view name) {
  std::optional<GradedLTS> e;
  if (name.starts_with("zero_")) {
    const std::string digits(name.substr(5));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 3) {
      throw std::invalid_argument("unknown fixture " + std::string(name));
    }
    e = zero_system(std::stoul(digits));
  } else {
    static const char* names[] = {"sl2_Z", "disjoint_sum", "nonlie_J", "trivial_grading_sl2"};
    if (std::find(std::begin(names), std::end(names), name) == std::end(names)) {
      throw std::invalid_argument("unknown fixture " + std::string(name));
    }
    e = load_system(fixture_directory() / (std::string(name) + ".json"));
  }
  if (auto v = verify_lts_axioms(*e); !v.empty()) throw CertificateFailure("Axioms", v.front().to_string());
  if (auto v = verify_grading(*e); !v.empty()) throw CertificateFailure("Grading", v.front().to_string());
  return std::move(*e);
}

std::vector<std::string> builtin_names() {
  return {"zero_3", "sl2_Z", "disjoint_sum", "nonlie_J", "trivial_grading_sl2"};
}

}  // namespace lts
