// End-to-end acceptance run: one PASS/FAIL line per criterion.
// usage: acceptance <lts binary> <test data dir>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lts/commands.hpp"
#include "lts/connectivity.hpp"
#include "lts/decomposition.hpp"
#include "lts/embedding.hpp"
#include "lts/errors.hpp"
#include "lts/fixtures.hpp"
#include "lts/io.hpp"
#include "support.hpp"

using namespace lts;
namespace fs = std::filesystem;

namespace {

constexpr double kAxiomSecondsLimit = 5.0;
constexpr int kMutantsPerFixture = 20;
constexpr std::size_t kRandomVariants = 24;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      note.str("");
      note << why;
    }
  }
};

int failed_criteria = 0;

void report(int number, const std::string& title, Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << number << " " << title << ": " << o.note.str() << std::endl;
  if (!o.pass) ++failed_criteria;
}

template <typename F>
void guarded(Outcome& o, F&& body) {
  try {
    body();
  } catch (const std::exception& ex) {
    o.require(false, std::string("exception: ") + ex.what());
  }
}

std::vector<Vector> units(const GradedLTS& e) {
  std::vector<Vector> u;
  for (std::size_t i = 0; i < e.dim(); ++i) u.push_back(e.unit(i));
  return u;
}

std::vector<Vector> basis_of(const Subspace& s) {
  std::vector<Vector> b;
  for (std::size_t i = 0; i < s.dim(); ++i) b.push_back(s.basis_vector(i));
  return b;
}

/// {I,E,E}, {E,I,E}, {E,E,I} inside I, by naive evaluation.
bool naive_is_ideal(const GradedLTS& e, const Subspace& i) {
  const lts::testing::NaiveProduct p(e);
  const auto u = units(e);
  for (const Vector& x : basis_of(i))
    for (const Vector& y : u)
      for (const Vector& z : u) {
        if (!i.contains(p(x, y, z)) || !i.contains(p(y, x, z)) || !i.contains(p(y, z, x))) return false;
      }
  return true;
}

/// {x,x,z} = 0 and the cyclic sum on basis vectors, by naive evaluation.
bool naive_lie_triple(const GradedLTS& e) {
  const lts::testing::NaiveProduct p(e);
  const auto u = units(e);
  for (const Vector& a : u)
    for (const Vector& b : u)
      for (const Vector& c : u) {
        if (!is_zero(p(a, a, c)) || !is_zero(p(a, b, c) + p(b, a, c))) return false;
        if (!is_zero(p(a, b, c) + p(b, c, a) + p(c, a, b))) return false;
      }
  return true;
}

int run_status(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

std::vector<GradedLTS> fixtures() {
  std::vector<GradedLTS> out;
  for (const std::string& name : builtin_names()) out.push_back(builtin(name));
  return out;
}

void criterion_axioms() {
  Outcome o;
  guarded(o, [&] {
    std::mt19937_64 rng(1);
    const Field q = Field::rational();
    double slowest = 0;
    int mutants = 0, invalid = 0, detected = 0, valid = 0;
    for (const std::string& name : builtin_names()) {
      const GradedLTS e = builtin(name);
      o.require(e.dim() <= 6, name + " exceeds dimension 6");
      const auto start = std::chrono::steady_clock::now();
      const bool clean = verify_lts_axioms(e).empty() && verify_fundamental_identity(e).empty();
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      slowest = std::max(slowest, seconds);
      o.require(clean, name + " reports a violation");
      o.require(seconds < kAxiomSecondsLimit, name + " took too long");

      const std::size_t n = e.dim();
      if (n == 0) continue;
      for (int trial = 0; trial < kMutantsPerFixture; ++trial) {
        StructureConstants c = e.constants();
        const TripleKey key{rng() % n, rng() % n, rng() % n};
        const std::size_t l = rng() % n;
        const Scalar delta = q.from_int(static_cast<long>(rng() % 3) + 1);
        SparseVector& t = c[key];
        auto it = std::find_if(t.begin(), t.end(), [&](const Term& term) { return term.index == l; });
        if (it == t.end()) {
          t.push_back({l, delta});
        } else {
          it->coeff = it->coeff + delta;
          if (it->coeff.is_zero()) t.erase(it);
        }
        std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
        if (t.empty()) c.erase(key);
        const GradedLTS m(e.group(), e.field(), e.degrees(), c);
        const bool flagged = !verify_lts_axioms(m).empty() || !verify_grading(m).empty();
        const bool oracle_valid = lts::testing::naive_is_graded_lts(m);
        ++mutants;
        o.require(flagged == !oracle_valid, name + ": verifier and naive oracle disagree on a mutant");
        if (oracle_valid) {
          ++valid;
        } else {
          ++invalid;
          if (flagged) ++detected;
        }
      }
    }
    o.note << "all fixtures clean, slowest " << slowest << " s (limit " << kAxiomSecondsLimit << " s); " << detected << "/"
           << invalid << " invalid mutants detected, " << valid << "/" << mutants
           << " mutants were themselves graded LTSs and agree with the oracle";
    o.require(detected == invalid, "undetected corruption");
  });
  report(1, "axioms and mutation detection", o);
}

void criterion_j_ideal() {
  Outcome o;
  guarded(o, [&] {
    std::size_t count = 0;
    for (const std::string& name : builtin_names()) {
      const GradedLTS e = builtin(name);
      const Subspace j = compute_J(e);
      const lts::testing::NaiveProduct p(e);
      const auto u = units(e);
      for (const Vector& x : basis_of(j))
        for (const Vector& a : u)
          for (const Vector& b : u) {
            o.require(is_zero(p(a, b, x)) && is_zero(p(a, x, b)), name + ": J does not vanish");
          }
      o.require(naive_is_ideal(e, j), name + ": J is not an ideal");
      const bool lie = is_lie_triple(e);
      o.require(lie == naive_lie_triple(e), name + ": J test disagrees with the Lie triple oracle");
      if (name == "nonlie_J") o.require(!lie && j.dim() > 0, "nonlie_J reported as Lie triple");
      ++count;
    }
    o.note << count << " fixtures, {E,E,J} = {E,J,E} = 0, J = 0 iff Lie triple, nonlie_J dim J = "
           << compute_J(builtin("nonlie_J")).dim();
  });
  report(2, "J ideal", o);
}

void criterion_embedding() {
  Outcome o;
  guarded(o, [&] {
    std::size_t triples = 0;
    for (const std::string& name : builtin_names()) {
      const GradedLTS e = builtin(name);
      const StandardEmbedding emb = StandardEmbedding::build(e);
      const auto& c = emb.certificates();
      o.require(c.well_defined && c.leibniz && c.direct_sum, name + ": embedding certificate failed");
      o.require(verify_l0_grading(emb).empty(), name + ": L0 grading violated");

      // N is killed by both maps and is a two-sided ideal of the tensor bracket.
      const std::size_t t = emb.tensor_dim();
      for (const Vector& v : basis_of(emb.null_space())) {
        for (const Vector& w : units(e)) {
          o.require(is_zero(emb.phi(v, w)) && is_zero(emb.psi(v, w)), name + ": N outside ker phi ∩ ker psi");
        }
        for (std::size_t k = 0; k < t; ++k) {
          const Vector s = unit_vector(e.field(), t, k);
          o.require(emb.null_space().contains(emb.tensor_bracket(v, s)), name + ": [N, T] not in N");
          o.require(emb.null_space().contains(emb.tensor_bracket(s, v)), name + ": [T, N] not in N");
        }
      }
      const auto b = emb.basis();
      for (const auto& x : b)
        for (const auto& y : b)
          for (const auto& z : b) {
            const auto lhs = emb.bracket(emb.bracket(y, z), x);
            const auto r1 = emb.bracket(emb.bracket(y, x), z);
            const auto r2 = emb.bracket(y, emb.bracket(z, x));
            o.require(lhs.even == r1.even + r2.even && lhs.odd == r1.odd + r2.odd, name + ": Leibniz identity fails");
            ++triples;
          }
    }
    o.note << "well-defined, direct L0 grading and " << triples << " basis triples satisfy the right Leibniz identity";
  });
  report(3, "standard embedding", o);
}

void criterion_connectivity() {
  Outcome o;
  guarded(o, [&] {
    const std::map<std::string, std::size_t> expected{{"sl2_Z", 1}, {"disjoint_sum", 2}, {"zero_3", 0}};
    std::ostringstream counts;
    for (const std::string& name : builtin_names()) {
      const GradedLTS e = builtin(name);
      const StandardEmbedding emb = StandardEmbedding::build(e);
      const SupportData sup = SupportData::from(e, emb);
      const auto classes = connection_classes(sup);
      std::set<GroupElement> seen;
      std::size_t total = 0;
      for (const auto& c : classes) {
        total += c.members.size();
        seen.insert(c.members.begin(), c.members.end());
        for (const auto& h : c.members) {
          const GroupElement inv = sup.group.inverse(h);
          if (sup.in_sigma1(inv)) o.require(c.contains(inv), name + ": class not closed under inverses");
        }
      }
      o.require(total == sup.sigma1.size() && seen == std::set<GroupElement>(sup.sigma1.begin(), sup.sigma1.end()),
                name + ": classes do not partition the support");
      for (const auto& g : sup.sigma1)
        for (const auto& h : sup.sigma1) {
          const bool gh = are_connected(sup, g, h);
          o.require(gh == are_connected(sup, h, g), name + ": connection is not symmetric");
          for (const auto& k : sup.sigma1) {
            if (gh && are_connected(sup, h, k)) o.require(are_connected(sup, g, k), name + ": not transitive");
          }
        }
      if (auto it = expected.find(name); it != expected.end()) {
        o.require(classes.size() == it->second, name + ": wrong class count");
        counts << name << "=" << classes.size() << " ";
      }
    }
    o.note << "partition, symmetry, transitivity and inverse closure hold; " << counts.str();
  });
  report(4, "connectivity", o);
}

void criterion_class_ideals() {
  Outcome o;
  guarded(o, [&] {
    std::vector<GradedLTS> systems = fixtures();
    for (const auto& v : lts::testing::random_variants(5, kRandomVariants)) systems.push_back(v.system);
    std::size_t ideals = 0;
    for (const GradedLTS& e : systems) {
      const StandardEmbedding emb = StandardEmbedding::build(e);
      for (const ClassIdeal& c : decompose(e, emb).ideals) {
        o.require(c.ideal && naive_is_ideal(e, c.total), "class ideal fails the ideal test");
        ++ideals;
      }
    }
    o.note << ideals << " class ideals over " << systems.size() << " systems (" << kRandomVariants << " random variants)";
    o.require(systems.size() >= 20 + builtin_names().size(), "too few variants");
  });
  report(5, "class subspaces are ideals", o);
}

void criterion_spanning() {
  Outcome o;
  guarded(o, [&] {
    std::vector<GradedLTS> systems = fixtures();
    for (const auto& v : lts::testing::random_variants(6, kRandomVariants)) systems.push_back(v.system);
    std::size_t pairs = 0;
    for (const GradedLTS& e : systems) {
      const StandardEmbedding emb = StandardEmbedding::build(e);
      const DecompositionReport r = decompose(e, emb);
      Subspace total = r.U;
      for (const auto& c : r.ideals) total = sum(total, c.total);
      o.require(total == Subspace::whole(e.field(), e.dim()) && r.spans, "U + sum of class ideals is not E");
      const lts::testing::NaiveProduct p(e);
      const auto u = units(e);
      for (std::size_t a = 0; a < r.ideals.size(); ++a)
        for (std::size_t b = 0; b < r.ideals.size(); ++b) {
          if (a == b) continue;
          // {I,I',E}, {I,E,I'}, {E,I,I'}; both orders come from the (b, a) pass.
          for (const Vector& x : basis_of(r.ideals[a].total))
            for (const Vector& y : basis_of(r.ideals[b].total))
              for (const Vector& z : u) {
                o.require(is_zero(p(x, y, z)) && is_zero(p(x, z, y)) && is_zero(p(z, x, y)), "cross-class product");
              }
          ++pairs;
        }
      for (const auto& entry : r.orthogonality) o.require(entry.holds, "orthogonality certificate failed");
    }
    const GradedLTS d = builtin("disjoint_sum");
    const DecompositionReport r = decompose(d, StandardEmbedding::build(d));
    const auto u = units(d);
    const Subspace first = Subspace::span(d.field(), 6, {u[0], u[1], u[2]});
    const Subspace second = Subspace::span(d.field(), 6, {u[3], u[4], u[5]});
    o.require(r.ideals.size() == 2, "disjoint_sum does not have two class ideals");
    if (r.ideals.size() == 2) {
      const bool matches = (r.ideals[0].total == first && r.ideals[1].total == second) ||
                           (r.ideals[0].total == second && r.ideals[1].total == first);
      o.require(matches, "disjoint_sum ideals differ from the summands");
    }
    o.note << systems.size() << " systems span E, " << pairs
           << " ordered class pairs orthogonal, disjoint_sum ideals equal the summands";
  });
  report(6, "spanning and orthogonality", o);
}

void criterion_direct_sum() {
  Outcome o;
  guarded(o, [&] {
    std::vector<std::string> applied;
    std::vector<GradedLTS> systems = fixtures();
    for (const auto& v : lts::testing::random_variants(7, kRandomVariants)) systems.push_back(v.system);
    std::size_t variants_applied = 0;
    for (std::size_t i = 0; i < systems.size(); ++i) {
      const GradedLTS& e = systems[i];
      const DecompositionReport r = decompose(e, StandardEmbedding::build(e));
      const bool applies = r.tight && annihilator(e).is_zero();
      o.require(applies == r.corollary_applies, "corollary applicability misreported");
      if (!applies) continue;
      std::size_t dims = 0;
      for (const auto& c : r.ideals) dims += c.total.dim();
      o.require(dims == e.dim(), "dimensions do not add up");
      for (std::size_t a = 0; a < r.ideals.size(); ++a)
        for (std::size_t b = a + 1; b < r.ideals.size(); ++b) {
          o.require(intersect(r.ideals[a].total, r.ideals[b].total).is_zero(), "class ideals intersect");
        }
      o.require(r.direct_sum == true, "direct sum not recorded");
      if (i < builtin_names().size()) {
        applied.push_back(builtin_names()[i]);
      } else {
        ++variants_applied;
      }
    }
    o.require(!applied.empty(), "no fixture satisfies the hypotheses");
    o.note << "applies to";
    for (const auto& a : applied) o.note << " " << a;
    o.note << " and " << variants_applied << " variants; E is the direct sum of the class ideals in each case";
  });
  report(7, "direct sum under tightness and zero annihilator", o);
}

void criterion_lemmas() {
  Outcome o;
  guarded(o, [&] {
    const GradedLTS e = builtin("disjoint_sum");
    const StandardEmbedding emb = StandardEmbedding::build(e);
    const SupportData sup = SupportData::from(e, emb);
    const LemmaReport r = verify_structure_lemmas(e, emb, sup, connection_classes(sup));
    std::size_t least = std::numeric_limits<std::size_t>::max();
    for (const LemmaResult& l : r.results) {
      o.require(l.failures == 0, l.id + " fails");
      o.require(l.nonvacuous >= 1, l.id + " has no nonvacuous instance");
      least = std::min(least, l.nonvacuous);
    }
    o.require(r.all_hold(), "lemma report does not hold");
    o.note << r.results.size() << " statements hold on disjoint_sum, each with at least " << least
           << " nonvacuous instance(s)";
  });
  report(8, "structure lemmas", o);
}

void criterion_determinism(const fs::path& cli, const fs::path& tmp) {
  Outcome o;
  guarded(o, [&] {
    std::size_t count = 0;
    for (const std::string& name : builtin_names()) {
      const fs::path input = fixture_directory() / (name + ".json");
      std::string hashes[2];
      for (int run = 0; run < 2; ++run) {
        const fs::path out = tmp / (name + "." + std::to_string(run) + ".json");
        const int code =
            run_status(quoted(cli) + " decompose --seed 0 --json " + quoted(out) + " " + quoted(input) + " >/dev/null 2>&1");
        o.require(code == kExitPass, name + ": decompose did not exit 0");
        hashes[run] = sha256_hex(read_file(out));
      }
      o.require(hashes[0] == hashes[1], name + ": reports differ");
      ++count;
    }
    o.note << count << " fixtures, two runs each, identical SHA-256 of the JSON report";
  });
  report(9, "determinism", o);
}

void criterion_cli(const fs::path& cli, const fs::path& data, const fs::path& tmp) {
  Outcome o;
  guarded(o, [&] {
    struct Case {
      fs::path input;
      int expected;
    };
    std::vector<Case> cases;
    for (const std::string& name : builtin_names()) {
      const fs::path p = fixture_directory() / (name + ".json");
      if (fs::exists(p)) cases.push_back({p, kExitPass});
    }
    cases.push_back({data / "sl2_corrupted.json", kExitCertificateFailure});
    for (const char* f : {"truncated.json", "zero_denominator.json", "index_out_of_range.json", "unknown_key.json"}) {
      cases.push_back({data / f, kExitInputError});
    }
    cases.push_back({tmp / "missing.json", kExitInputError});
    std::size_t runs = 0;
    for (const char* cmd : {"verify", "analyze", "embed", "decompose"}) {
      for (const Case& c : cases) {
        const int code = run_status(quoted(cli) + " " + cmd + " " + quoted(c.input) + " >/dev/null 2>&1");
        o.require(code == c.expected, std::string(cmd) + " " + c.input.filename().string() + " exited " +
                                          std::to_string(code) + ", want " + std::to_string(c.expected));
        ++runs;
      }
    }
    o.require(run_status(quoted(cli) + " >/dev/null 2>&1") == kExitInputError, "missing subcommand not rejected");
    o.note << runs + 1 << " invocations over pass (0), certificate failure (1) and malformed (2) inputs";
  });
  report(10, "CLI exit codes", o);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <lts binary> <test data dir>\n";
    return 2;
  }
  const fs::path cli = argv[1];
  const fs::path data = argv[2];
  const fs::path tmp = fs::temp_directory_path() / ("lts_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(tmp);

  criterion_axioms();
  criterion_j_ideal();
  criterion_embedding();
  criterion_connectivity();
  criterion_class_ideals();
  criterion_spanning();
  criterion_direct_sum();
  criterion_lemmas();
  criterion_determinism(cli, tmp);
  criterion_cli(cli, data, tmp);

  fs::remove_all(tmp);
  std::cout << (10 - failed_criteria) << "/10 criteria passed" << std::endl;
  return failed_criteria == 0 ? 0 : 1;
}
