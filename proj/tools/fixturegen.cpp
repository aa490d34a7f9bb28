// Regenerates the shipped fixture files. The non-Lie example comes from an
// exhaustive search over 3-dimensional right Leibniz algebras whose brackets
// of basis vectors are 0 or a basis vector, keeping the first whose triple
// system is not Lie, involves every basis vector and admits a nontrivial
// Z-grading.
#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "lts/fixtures.hpp"
#include "lts/io.hpp"

namespace {

constexpr std::size_t kDim = 3;
constexpr std::size_t kPairs = kDim * kDim;
constexpr int kDegreeBound = 3;

/// table[i*3+j] = 0 for a zero bracket, l+1 for [b_i,b_j] = b_l.
using Table = std::array<int, kPairs>;

using Dense = std::array<int, kDim>;

Dense bracket(const Table& t, const Dense& x, const Dense& y) {
  Dense out{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      const int v = t[i * kDim + j];
      if (v) out[v - 1] += x[i] * y[j];
    }
  }
  return out;
}

Dense unit(std::size_t i) {
  Dense d{};
  d[i] = 1;
  return d;
}

bool right_leibniz(const Table& t) {
  for (std::size_t y = 0; y < kDim; ++y) {
    for (std::size_t z = 0; z < kDim; ++z) {
      for (std::size_t x = 0; x < kDim; ++x) {
        const Dense lhs = bracket(t, bracket(t, unit(y), unit(z)), unit(x));
        const Dense a = bracket(t, bracket(t, unit(y), unit(x)), unit(z));
        const Dense b = bracket(t, unit(y), bracket(t, unit(z), unit(x)));
        for (std::size_t l = 0; l < kDim; ++l) {
          if (lhs[l] != a[l] + b[l]) return false;
        }
      }
    }
  }
  return true;
}

Dense triple(const Table& t, std::size_t a, std::size_t b, std::size_t c) {
  return bracket(t, bracket(t, unit(a), unit(b)), unit(c));
}

/// First (a,b,c) with {a,b,c} - {a,c,b} + {b,c,a} != 0.
std::optional<std::array<std::size_t, 3>> nonlie_generator(const Table& t) {
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t b = 0; b < kDim; ++b) {
      for (std::size_t c = 0; c < kDim; ++c) {
        const Dense x = triple(t, a, b, c);
        const Dense y = triple(t, a, c, b);
        const Dense z = triple(t, b, c, a);
        for (std::size_t l = 0; l < kDim; ++l) {
          if (x[l] - y[l] + z[l] != 0) return std::array<std::size_t, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

/// Integer degrees in [-3,3] making the bracket graded, with at least one
/// nonzero degree; smallest total weight first, then lexicographic.
std::optional<std::array<int, kDim>> nontrivial_grading(const Table& t) {
  std::optional<std::array<int, kDim>> best;
  int best_weight = 0;
  for (int d0 = -kDegreeBound; d0 <= kDegreeBound; ++d0) {
    for (int d1 = -kDegreeBound; d1 <= kDegreeBound; ++d1) {
      for (int d2 = -kDegreeBound; d2 <= kDegreeBound; ++d2) {
        const std::array<int, kDim> d{d0, d1, d2};
        const int weight = std::abs(d0) + std::abs(d1) + std::abs(d2);
        if (weight == 0) continue;
        bool graded = true;
        for (std::size_t i = 0; i < kDim && graded; ++i) {
          for (std::size_t j = 0; j < kDim && graded; ++j) {
            const int v = t[i * kDim + j];
            if (v && d[v - 1] != d[i] + d[j]) graded = false;
          }
        }
        if (graded && (!best || weight < best_weight)) {
          best = d;
          best_weight = weight;
        }
      }
    }
  }
  return best;
}

/// Every basis vector occurs as an argument or output of a nonzero triple.
bool all_involved(const Table& t) {
  std::array<bool, kDim> seen{};
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t b = 0; b < kDim; ++b) {
      for (std::size_t c = 0; c < kDim; ++c) {
        const Dense x = triple(t, a, b, c);
        bool nonzero = false;
        for (std::size_t l = 0; l < kDim; ++l) {
          if (x[l]) seen[l] = nonzero = true;
        }
        if (nonzero) seen[a] = seen[b] = seen[c] = true;
      }
    }
  }
  return seen[0] && seen[1] && seen[2];
}

struct SearchResult {
  Table table{};
  std::array<int, kDim> degrees{};
  std::array<std::size_t, 3> generator{};
  std::size_t tables_scanned = 0;
  std::size_t leibniz_tables = 0;
};

std::optional<SearchResult> search_nonlie() {
  SearchResult r;
  std::size_t total = 1;
  for (std::size_t i = 0; i < kPairs; ++i) total *= kDim + 1;
  for (std::size_t code = 0; code < total; ++code) {
    Table t{};
    std::size_t c = code;
    for (std::size_t i = 0; i < kPairs; ++i) {
      t[i] = static_cast<int>(c % (kDim + 1));
      c /= kDim + 1;
    }
    ++r.tables_scanned;
    if (!right_leibniz(t)) continue;
    ++r.leibniz_tables;
    const auto gen = nonlie_generator(t);
    if (!gen || !all_involved(t)) continue;
    const auto degrees = nontrivial_grading(t);
    if (!degrees) continue;
    r.table = t;
    r.degrees = *degrees;
    r.generator = *gen;
    return r;
  }
  return std::nullopt;
}

lts::GradedLeibnizAlgebra to_algebra(const SearchResult& r) {
  const lts::Field q = lts::Field::rational();
  const lts::AbelianGroup z({0});
  std::vector<lts::GroupElement> degrees;
  for (int d : r.degrees) degrees.push_back(z.element({d}));
  lts::BracketConstants b;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (const int v = r.table[i * kDim + j]) b[{i, j}] = {{static_cast<std::size_t>(v - 1), q.one()}};
    }
  }
  return lts::GradedLeibnizAlgebra(z, q, degrees, b);
}

void write(const std::filesystem::path& dir, const std::string& name, const lts::GradedLTS& e) {
  lts::save_system(dir / (name + ".json"), e);
  std::cout << "wrote " << (dir / (name + ".json")).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate fixture files"};
  std::filesystem::path out = lts::fixture_directory();
  app.add_option("--out", out, "output directory");
  CLI11_PARSE(app, argc, argv);
  std::filesystem::create_directories(out);

  const lts::AbelianGroup z({0});
  const lts::GradedLTS sl2 = lts::from_leibniz_algebra(lts::sl2_algebra(z, {z.element({1}), z.element({0}), z.element({-1})}));
  write(out, "sl2_Z", sl2);
  write(out, "disjoint_sum", lts::direct_sum(sl2, sl2));
  const lts::AbelianGroup trivial(std::vector<std::int64_t>{});
  write(out, "trivial_grading_sl2",
        lts::from_leibniz_algebra(lts::sl2_algebra(trivial, {trivial.identity(), trivial.identity(), trivial.identity()})));
  write(out, "zero_3", lts::zero_system(3));

  const auto found = search_nonlie();
  if (!found) {
    std::cerr << "search found no candidate\n";
    return 1;
  }
  const lts::GradedLeibnizAlgebra algebra = to_algebra(*found);
  const lts::GradedLTS nonlie = lts::from_leibniz_algebra(algebra);
  write(out, "nonlie_J", nonlie);

  const lts::Subspace j = lts::compute_J(nonlie);
  nlohmann::ordered_json cert;
  nlohmann::ordered_json brackets = nlohmann::ordered_json::array();
  for (const auto& [key, terms] : algebra.brackets()) {
    brackets.push_back({{"args", key}, {"out", terms.front().index}});
  }
  nlohmann::ordered_json jbasis = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < j.dim(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const lts::Scalar& s : j.basis_vector(r)) row.push_back(s.to_string());
    jbasis.push_back(row);
  }
  const auto& g = found->generator;
  const lts::Vector gen = nonlie.triple_product(nonlie.unit(g[0]), nonlie.unit(g[1]), nonlie.unit(g[2])) -
                          nonlie.triple_product(nonlie.unit(g[0]), nonlie.unit(g[2]), nonlie.unit(g[1])) +
                          nonlie.triple_product(nonlie.unit(g[1]), nonlie.unit(g[2]), nonlie.unit(g[0]));
  nlohmann::ordered_json genv = nlohmann::ordered_json::array();
  for (const lts::Scalar& s : gen) genv.push_back(s.to_string());
  cert["search"] = {{"dimension", kDim},
                    {"bracket_values", "0 or a single basis vector"},
                    {"tables_scanned", found->tables_scanned},
                    {"right_leibniz_tables_before_hit", found->leibniz_tables},
                    {"degree_bound", kDegreeBound}};
  cert["algebra"] = {{"brackets", brackets}, {"degrees", found->degrees}};
  cert["checks"] = {{"leibniz_identity_triples", kDim * kDim * kDim},
                    {"leibniz_identity_violations", lts::verify_leibniz_identity(algebra).size()},
                    {"axiom_quintuples", 2 * kDim * kDim * kDim * kDim * kDim},
                    {"axiom_violations", lts::verify_lts_axioms(nonlie).size()},
                    {"fundamental_identity_violations", lts::verify_fundamental_identity(nonlie).size()},
                    {"grading_violations", lts::verify_grading(nonlie).size()}};
  cert["generator"] = {{"args", g}, {"value", genv}};
  cert["J"] = {{"dim", j.dim()}, {"basis", jbasis}};
  cert["lie_triple_axioms_hold"] = lts::lie_triple_axioms_hold(nonlie);
  std::ofstream(out / "nonlie_J.certificate.json") << cert.dump(2) << "\n";
  std::cout << "wrote " << (out / "nonlie_J.certificate.json").string() << "\n";
  return 0;
}
