#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lts/fixtures.hpp"
#include "lts/triple_system.hpp"

namespace lts::testing {

/// Dense naive evaluation straight from the structure constants, used as an
/// independent oracle against the library's tables.
class NaiveProduct {
 public:
  explicit NaiveProduct(const GradedLTS& e) : e_(e), n_(e.dim()) {
    coeff_.assign(n_ * n_ * n_ * n_, e.field().zero());
    for (const auto& [key, terms] : e.constants()) {
      for (const Term& t : terms) coeff_[((key[0] * n_ + key[1]) * n_ + key[2]) * n_ + t.index] = t.coeff;
    }
  }
  Vector operator()(const Vector& x, const Vector& y, const Vector& z) const {
    Vector out(n_, e_.field().zero());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) {
          const Scalar s = x[i] * y[j] * z[k];
          if (s.is_zero()) continue;
          for (std::size_t l = 0; l < n_; ++l) out[l] = out[l] + s * coeff_[((i * n_ + j) * n_ + k) * n_ + l];
        }
    return out;
  }

 private:
  const GradedLTS& e_;
  std::size_t n_;
  std::vector<Scalar> coeff_;
};

/// Both defining identities and the grading, by naive evaluation.
inline bool naive_is_graded_lts(const GradedLTS& e) {
  const NaiveProduct p(e);
  const std::size_t n = e.dim();
  std::vector<Vector> u;
  for (std::size_t i = 0; i < n; ++i) u.push_back(e.unit(i));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Vector abc = p(u[a], u[b], u[c]);
        for (std::size_t l = 0; l < n; ++l) {
          if (!abc[l].is_zero() && e.degree(l) != e.group().compose(e.degree(a), e.degree(b), e.degree(c))) return false;
        }
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t f = 0; f < n; ++f) {
            const Vector lhs1 = p(u[a], p(u[b], u[c], u[d]), u[f]);
            const Vector rhs1 = p(p(u[a], u[b], u[c]), u[d], u[f]) - p(p(u[a], u[c], u[b]), u[d], u[f]) -
                                p(p(u[a], u[d], u[b]), u[c], u[f]) + p(p(u[a], u[d], u[c]), u[b], u[f]);
            if (lhs1 != rhs1) return false;
            const Vector lhs2 = p(u[a], u[b], p(u[c], u[d], u[f]));
            const Vector rhs2 = p(p(u[a], u[b], u[c]), u[d], u[f]) - p(p(u[a], u[b], u[d]), u[c], u[f]) -
                                p(p(u[a], u[b], u[f]), u[c], u[d]) + p(p(u[a], u[b], u[f]), u[d], u[c]);
            if (lhs2 != rhs2) return false;
          }
      }
  return true;
}

inline Scalar random_scalar(std::mt19937_64& rng, Field field, long bound = 3) {
  std::uniform_int_distribution<long> num(-bound, bound);
  if (!field.is_rational()) return field.from_int(num(rng));
  std::uniform_int_distribution<long> den(1, 3);
  return Scalar(field.from_int(num(rng))) / field.from_int(den(rng));
}

inline Vector random_vector(std::mt19937_64& rng, Field field, std::size_t n, long bound = 3) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(rng, field, bound));
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, Field field, std::size_t rows, std::size_t cols) {
  std::vector<Vector> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(random_vector(rng, field, cols));
  return Matrix::from_rows(field, cols, r);
}

/// Random matrix of rank at most `rank`, as a product of thin factors.
inline Matrix random_low_rank(std::mt19937_64& rng, Field field, std::size_t rows, std::size_t cols, std::size_t rank) {
  return random_matrix(rng, field, rows, rank) * random_matrix(rng, field, rank, cols);
}

inline GradedLTS sl2_graded(const AbelianGroup& group, const GroupElement& e_degree, Field field = Field::rational()) {
  return from_leibniz_algebra(sl2_algebra(group, {e_degree, group.identity(), group.inverse(e_degree)}, field));
}

/// sl2 plus its 2-dimensional module V with [V, sl2] = V acting on the right
/// and [sl2, V] = [V, V] = 0. Basis e, h, f, v+, v-; Z-degrees 2, 0, -2, 1, -1
/// scaled by `step`.
inline GradedLeibnizAlgebra hemisemidirect_sl2(const AbelianGroup& group, const GroupElement& step,
                                                Field field = Field::rational()) {
  auto c = [&](long v) { return field.from_int(v); };
  auto times = [&](long k) {
    GroupElement g = group.identity();
    const GroupElement base = k < 0 ? group.inverse(step) : step;
    for (long i = 0; i < std::labs(k); ++i) g = group.compose(g, base);
    return g;
  };
  BracketConstants b;
  b[{1, 0}] = {{0, c(2)}};
  b[{0, 1}] = {{0, c(-2)}};
  b[{1, 2}] = {{2, c(-2)}};
  b[{2, 1}] = {{2, c(2)}};
  b[{0, 2}] = {{1, c(1)}};
  b[{2, 0}] = {{1, c(-1)}};
  // v . y = -(y v) for the standard representation.
  b[{4, 0}] = {{3, c(-1)}};
  b[{3, 2}] = {{4, c(-1)}};
  b[{3, 1}] = {{3, c(-1)}};
  b[{4, 1}] = {{4, c(1)}};
  return GradedLeibnizAlgebra(group, field, {times(2), times(0), times(-2), times(1), times(-1)}, std::move(b));
}

/// Homomorphic image of a Z^r grading: coordinate-wise scaling by nonzero
/// integers followed by reduction into the target moduli.
inline GradedLTS relabel(const GradedLTS& e, const std::vector<std::int64_t>& scale, const AbelianGroup& target) {
  std::vector<GroupElement> degrees;
  for (const GroupElement& g : e.degrees()) {
    std::vector<std::int64_t> c;
    for (std::size_t i = 0; i < g.rank(); ++i) c.push_back(g.coords()[i] * scale[i]);
    degrees.push_back(target.element(std::move(c)));
  }
  return regrade(e, target, std::move(degrees));
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

struct Variant {
  std::string description;
  GradedLTS system;
};

/// Randomized direct sums of sl2 copies, the hemisemidirect system and the
/// non-Lie fixture, with shuffled bases and relabeled gradings.
inline std::vector<Variant> random_variants(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  const AbelianGroup z({0});
  const Field q = Field::rational();
  std::vector<Variant> out;
  while (out.size() < count) {
    const std::size_t parts = 1 + rng() % 3;
    std::string desc;
    std::optional<GradedLTS> acc;
    bool product_group = rng() % 2 == 0;
    for (std::size_t p = 0; p < parts; ++p) {
      const long step = 1 + static_cast<long>(rng() % 3);
      std::optional<GradedLTS> piece;
      switch (rng() % 4) {
        case 0:
        case 1:
          piece = sl2_graded(z, z.element({step}), q);
          desc += "sl2(" + std::to_string(step) + ")";
          break;
        case 2:
          piece = from_leibniz_algebra(hemisemidirect_sl2(z, z.element({step}), q));
          desc += "sl2+V(" + std::to_string(step) + ")";
          break;
        default:
          piece = builtin("nonlie_J");
          desc += "nonlie_J";
          break;
      }
      desc += p + 1 < parts ? (product_group ? " x " : " + ") : "";
      if (!acc) acc = std::move(piece);
      else acc = product_group ? direct_sum(*acc, *piece) : direct_sum_same_group(*acc, *piece);
    }
    GradedLTS e = permute_basis(*acc, random_permutation(rng, acc->dim()));
    const std::size_t rank = e.group().factors();
    if (rng() % 2 == 0) {
      std::vector<std::int64_t> scale(rank);
      std::vector<std::int64_t> moduli(rank);
      for (std::size_t i = 0; i < rank; ++i) {
        scale[i] = 1 + static_cast<std::int64_t>(rng() % 3);
        const std::int64_t m = static_cast<std::int64_t>(rng() % 6);
        moduli[i] = m == 1 ? 0 : m;
      }
      e = relabel(e, scale, AbelianGroup(moduli));
      desc += ", regraded by " + e.group().to_string();
    }
    if (e.dim() > 9) continue;
    out.push_back({desc, std::move(e)});
  }
  return out;
}

}  // namespace lts::testing
