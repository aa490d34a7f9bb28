#include "lts/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "lts/errors.hpp"

namespace lts {
namespace {

constexpr std::size_t kMaxFailureExamples = 5;

/// Basis indices grouped by degree.
class DegreeIndex {
 public:
  explicit DegreeIndex(const GradedLTS& e) {
    for (std::size_t i = 0; i < e.dim(); ++i) by_degree_[e.degree(i)].push_back(i);
  }
  const std::vector<std::size_t>& operator()(const GroupElement& g) const {
    static const std::vector<std::size_t> empty;
    auto it = by_degree_.find(g);
    return it == by_degree_.end() ? empty : it->second;
  }

 private:
  std::map<GroupElement, std::vector<std::size_t>> by_degree_;
};

/// Nonzero products {b_i,b_j,b_k} over the given index sets.
std::vector<Vector> basis_products(const GradedLTS& e, const std::vector<std::size_t>& is,
                                   const std::vector<std::size_t>& js, const std::vector<std::size_t>& ks) {
  std::vector<Vector> out;
  for (std::size_t i : is) {
    for (std::size_t j : js) {
      for (std::size_t k : ks) {
        const Vector& p = e.basis_product(i, j, k);
        if (!is_zero(p)) out.push_back(p);
      }
    }
  }
  return out;
}

std::vector<Vector> subspace_basis(const Subspace& s) {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(s.basis_vector(r));
  return out;
}

std::vector<Vector> unit_vectors(const GradedLTS& e, const std::vector<std::size_t>& idx) {
  std::vector<Vector> out;
  for (std::size_t i : idx) out.push_back(e.unit(i));
  return out;
}

std::vector<GroupElement> with_identity(const AbelianGroup& group, const std::vector<GroupElement>& s) {
  std::vector<GroupElement> out = s;
  out.push_back(group.identity());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LemmaResult named(std::string id, std::string statement) {
  LemmaResult r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  return r;
}

std::string vector_string(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s + "]";
}

}  // namespace

Subspace class_core_span(const GradedLTS& e, const ConnectionClass& cls) {
  const DegreeIndex idx(e);
  const AbelianGroup& group = e.group();
  std::vector<Vector> products;
  const std::vector<GroupElement> ks = with_identity(group, cls.members);
  for (const GroupElement& h : cls.members) {
    for (const GroupElement& k : ks) {
      auto p = basis_products(e, idx(h), idx(k), idx(group.inverse(group.compose(h, k))));
      products.insert(products.end(), p.begin(), p.end());
    }
  }
  return Subspace::span(e.field(), e.dim(), products);
}

ClassIdeal class_ideal(const GradedLTS& e, const ConnectionClass& cls) {
  ClassIdeal out;
  out.cls = cls;
  out.core = class_core_span(e, cls);
  if (!homogeneous_component(e, e.group().identity()).contains(out.core)) {
    throw IdealCertificateFailure("core of class " + cls.representative.to_string() + " leaves E_1");
  }
  std::vector<Vector> vertex;
  for (const GroupElement& h : cls.members) {
    const Subspace c = homogeneous_component(e, h);
    for (std::size_t r = 0; r < c.dim(); ++r) vertex.push_back(c.basis_vector(r));
  }
  out.vertex = Subspace::span(e.field(), e.dim(), vertex);
  out.total = sum(out.core, out.vertex);
  if (out.total.dim() != out.core.dim() + out.vertex.dim()) {
    throw IdealCertificateFailure("core and vertex of class " + cls.representative.to_string() + " intersect");
  }
  if (auto w = subsystem_witness(e, out.total)) {
    throw IdealCertificateFailure("class " + cls.representative.to_string() + " is not a subsystem: " + w->slot +
                                  " gives " + vector_string(w->product));
  }
  out.subsystem = true;
  if (auto w = ideal_witness(e, out.total)) {
    throw IdealCertificateFailure("class " + cls.representative.to_string() + " is not an ideal: " + w->slot +
                                  " gives " + vector_string(w->product));
  }
  out.ideal = true;
  return out;
}

namespace {

OrthogonalityEntry check_orthogonal(const GradedLTS& e, std::size_t a, const Subspace& ia, std::size_t b,
                                    const Subspace& ib) {
  OrthogonalityEntry entry;
  entry.first = a;
  entry.second = b;
  std::vector<Vector> units;
  for (std::size_t i = 0; i < e.dim(); ++i) units.push_back(e.unit(i));

  auto sweep = [&](const std::string& slot, const std::vector<Vector>& xs, const std::vector<Vector>& ys,
                   const std::vector<Vector>& zs) {
    for (const Vector& x : xs) {
      for (const Vector& y : ys) {
        for (const Vector& z : zs) {
          ++entry.products_checked;
          Vector p = e.triple_product(x, y, z);
          if (entry.holds && !is_zero(p)) {
            entry.holds = false;
            entry.witness = ProductWitness{slot, {x, y, z}, std::move(p)};
          }
        }
      }
    }
  };
  const std::vector<Vector> ba = subspace_basis(ia);
  const std::vector<Vector> bb = subspace_basis(ib);
  const std::string na = "I" + std::to_string(a);
  const std::string nb = "I" + std::to_string(b);
  sweep("{" + na + ",E," + nb + "}", ba, units, bb);
  sweep("{" + na + "," + nb + ",E}", ba, bb, units);
  sweep("{E," + na + "," + nb + "}", units, ba, bb);
  sweep("{" + nb + ",E," + na + "}", bb, units, ba);
  sweep("{" + nb + "," + na + ",E}", bb, ba, units);
  sweep("{E," + nb + "," + na + "}", units, bb, ba);
  return entry;
}

}  // namespace

DecompositionReport decompose(const GradedLTS& e, const StandardEmbedding& emb, const ObstructionOptions& options) {
  DecompositionReport r;
  const AbelianGroup& group = e.group();
  const DegreeIndex idx(e);
  r.supports = SupportData::from(e, emb);
  r.classes = connection_classes(r.supports);

  r.identity_component = homogeneous_component(e, group.identity());
  std::vector<Vector> products;
  const std::vector<GroupElement> hs = with_identity(group, r.supports.sigma1);
  for (const GroupElement& g : r.supports.sigma1) {
    for (const GroupElement& h : hs) {
      auto p = basis_products(e, idx(g), idx(h), idx(group.inverse(group.compose(g, h))));
      products.insert(products.end(), p.begin(), p.end());
    }
  }
  r.tight_span = Subspace::span(e.field(), e.dim(), products);
  if (!r.identity_component.contains(r.tight_span)) {
    throw DecompositionFailure("products of opposite degrees leave E_1");
  }
  r.U = complete_complement(r.tight_span, r.identity_component);
  r.tight = r.tight_span == r.identity_component;

  for (const ConnectionClass& cls : r.classes) r.ideals.push_back(class_ideal(e, cls));

  Subspace total = r.U;
  std::size_t dim_sum = 0;
  for (const ClassIdeal& ci : r.ideals) {
    total = sum(total, ci.total);
    dim_sum += ci.total.dim();
  }
  r.spans = total.is_whole();

  for (std::size_t a = 0; a < r.ideals.size(); ++a) {
    for (std::size_t b = a + 1; b < r.ideals.size(); ++b) {
      r.orthogonality.push_back(check_orthogonal(e, a, r.ideals[a].total, b, r.ideals[b].total));
    }
  }

  r.pairwise_intersections_zero = true;
  for (std::size_t a = 0; a < r.ideals.size(); ++a) {
    for (std::size_t b = a + 1; b < r.ideals.size(); ++b) {
      if (!intersect(r.ideals[a].total, r.ideals[b].total).is_zero()) r.pairwise_intersections_zero = false;
    }
  }

  r.annihilator = annihilator(e);
  r.corollary_applies = r.tight && r.annihilator.is_zero();
  if (r.corollary_applies) r.direct_sum = r.U.is_zero() && dim_sum == e.dim();

  r.obstructions = simplicity_obstruction(e, r, options);
  return r;
}

bool DecompositionReport::certified() const {
  for (const ClassIdeal& ci : ideals) {
    if (!ci.ideal || !ci.subsystem) return false;
  }
  for (const OrthogonalityEntry& o : orthogonality) {
    if (!o.holds) return false;
  }
  if (!spans) return false;
  if (corollary_applies && !(direct_sum.value_or(false) && pairwise_intersections_zero)) return false;
  return true;
}

bool LemmaReport::all_hold() const {
  return std::all_of(results.begin(), results.end(), [](const LemmaResult& r) { return r.failures == 0; });
}

namespace {

class LemmaRunner {
 public:
  LemmaRunner(const GradedLTS& e, const StandardEmbedding& emb, const SupportData& sup,
              const std::vector<ConnectionClass>& classes)
      : e_(e), emb_(emb), sup_(sup), classes_(classes), idx_(e), group_(e.group()) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (const GroupElement& g : classes[c].members) class_of_[g] = c;
    }
    odd_or_one_ = with_identity(group_, sup.sigma1);
  }

  LemmaReport run() {
    LemmaReport report;
    report.results.push_back(connected_if_product_even());
    report.results.push_back(connected_if_even_times_odd());
    report.results.push_back(connected_if_both_even());
    report.results.push_back(unconnected_brackets_vanish());
    report.results.push_back(inverse_pair_triple_vanishes());
    for (int slot = 0; slot < 3; ++slot) report.results.push_back(triple_degrees_stay_in_class(slot));
    for (int slot = 0; slot < 3; ++slot) report.results.push_back(nested_degrees_stay_in_class(slot));
    for (int which = 0; which < 3; ++which) report.results.push_back(core_products_vanish(which));
    return report;
  }

 private:
  bool connected(const GroupElement& g, const GroupElement& h) const {
    return class_of_.at(g) == class_of_.at(h);
  }
  bool in_class_or_one(std::size_t c, const GroupElement& g) const {
    return group_.is_identity(g) || classes_[c].contains(g);
  }
  bool even(const GroupElement& g) const { return sup_.pm_sigma0.contains(g); }
  bool odd(const GroupElement& g) const { return sup_.pm_sigma1.contains(g); }

  static void record(LemmaResult& r, bool nonvacuous, bool holds, LemmaInstance inst) {
    ++r.checked;
    if (nonvacuous) {
      ++r.nonvacuous;
      if (!r.example) r.example = inst;
    }
    if (!holds) {
      ++r.failures;
      if (r.failure_examples.size() < kMaxFailureExamples) r.failure_examples.push_back(std::move(inst));
    }
  }

  LemmaResult implication(std::string id, std::string statement,
                          const std::function<bool(const GroupElement&, const GroupElement&)>& premise) {
    LemmaResult r = named(std::move(id), std::move(statement));
    for (const GroupElement& g : sup_.sigma1) {
      for (const GroupElement& h : sup_.sigma1) {
        const bool p = premise(g, h);
        record(r, p, !p || connected(g, h), {{g, h}, p ? "premise holds" : "premise fails"});
      }
    }
    return r;
  }

  LemmaResult connected_if_product_even() {
    return implication("connected_if_product_even", "g, h in S1 and gh in ±S0 ∪ {1} imply h ~ g",
                       [&](const GroupElement& g, const GroupElement& h) {
                         const GroupElement gh = group_.compose(g, h);
                         return even(gh) || group_.is_identity(gh);
                       });
  }

  LemmaResult connected_if_even_times_odd() {
    return implication("connected_if_even_times_odd", "g, h in S1, g in ±S0 and gh in ±S1 ∪ {1} imply h ~ g",
                       [&](const GroupElement& g, const GroupElement& h) {
                         const GroupElement gh = group_.compose(g, h);
                         return even(g) && (odd(gh) || group_.is_identity(gh));
                       });
  }

  LemmaResult connected_if_both_even() {
    return implication("connected_if_both_even", "g, h in S1 ∩ ±S0 and gh in ±S0 ∪ {1} imply h ~ g",
                       [&](const GroupElement& g, const GroupElement& h) {
                         const GroupElement gh = group_.compose(g, h);
                         return even(g) && even(h) && (even(gh) || group_.is_identity(gh));
                       });
  }

  LemmaResult unconnected_brackets_vanish() {
    LemmaResult r = named("unconnected_brackets_vanish",
                  "g, h in S1 not connected imply [E_g, E_h] = [L0_g, E_h] = [L0_g, L0_h] = 0");
    for (const GroupElement& g : sup_.sigma1) {
      for (const GroupElement& h : sup_.sigma1) {
        if (connected(g, h)) continue;
        const auto& eg = idx_(g);
        const auto& eh = idx_(h);
        const std::vector<Vector> lg = subspace_basis(emb_.l0_component(g));
        const std::vector<Vector> lh = subspace_basis(emb_.l0_component(h));
        std::string detail;
        for (std::size_t i : eg) {
          for (std::size_t j : eh) {
            if (detail.empty() && !is_zero(emb_.bracket_odd(e_.unit(i), e_.unit(j)))) {
              detail = "[b" + std::to_string(i) + ", b" + std::to_string(j) + "] != 0";
            }
          }
        }
        for (std::size_t x = 0; x < lg.size(); ++x) {
          for (std::size_t j : eh) {
            if (detail.empty() && !is_zero(emb_.act_right(lg[x], e_.unit(j)))) {
              detail = "[L0_g basis " + std::to_string(x) + ", b" + std::to_string(j) + "] != 0";
            }
          }
          for (std::size_t y = 0; y < lh.size(); ++y) {
            if (detail.empty() && !is_zero(emb_.bracket_even(lg[x], lh[y]))) {
              detail = "[L0_g basis " + std::to_string(x) + ", L0_h basis " + std::to_string(y) + "] != 0";
            }
          }
        }
        const bool holds = detail.empty();
        if (holds) {
          detail = "dim E_g=" + std::to_string(eg.size()) + ", dim E_h=" + std::to_string(eh.size()) +
                   ", dim L0_g=" + std::to_string(lg.size()) + ", dim L0_h=" + std::to_string(lh.size());
        }
        record(r, !eg.empty() && !eh.empty(), holds, {{g, h}, detail});
      }
    }
    return r;
  }

  LemmaResult inverse_pair_triple_vanishes() {
    LemmaResult r = named("inverse_pair_triple_vanishes", "g, h in S1 not connected imply {E_g, E_g^-1, E_h} = 0");
    for (const GroupElement& g : sup_.sigma1) {
      for (const GroupElement& h : sup_.sigma1) {
        if (connected(g, h)) continue;
        const GroupElement ginv = group_.inverse(g);
        const bool holds = basis_products(e_, idx_(g), idx_(ginv), idx_(h)).empty();
        record(r, !idx_(ginv).empty(), holds, {{g, ginv, h}, holds ? "product is zero" : "product is nonzero"});
      }
    }
    return r;
  }

  static constexpr const char* kSlotNames[3] = {"first", "middle", "last"};

  LemmaResult triple_degrees_stay_in_class(int slot) {
    static const char* statements[3] = {
        "g in [g0], h, k in S1 ∪ {1}, {E_g, E_h, E_k} != 0 imply h, k, ghk in [g0] ∪ {1}",
        "g in [g0], h, k in S1 ∪ {1}, {E_h, E_g, E_k} != 0 imply h, k, hgk in [g0] ∪ {1}",
        "g in [g0], h, k in S1 ∪ {1}, {E_h, E_k, E_g} != 0 imply h, k, hkg in [g0] ∪ {1}"};
    LemmaResult r = named(std::string("triple_degrees_stay_in_class.") + kSlotNames[slot], statements[slot]);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      for (const GroupElement& g : classes_[c].members) {
        for (const GroupElement& h : odd_or_one_) {
          for (const GroupElement& k : odd_or_one_) {
            std::vector<GroupElement> args;
            if (slot == 0) args = {g, h, k};
            if (slot == 1) args = {h, g, k};
            if (slot == 2) args = {h, k, g};
            const bool nonzero = !basis_products(e_, idx_(args[0]), idx_(args[1]), idx_(args[2])).empty();
            const GroupElement out = group_.compose(g, h, k);
            const bool holds = !nonzero || (in_class_or_one(c, h) && in_class_or_one(c, k) && in_class_or_one(c, out));
            args.push_back(out);
            record(r, nonzero, holds, {args, nonzero ? "product is nonzero" : "product is zero"});
          }
        }
      }
    }
    return r;
  }

  /// Class triples (g, h, k) with g, k in [g0], h in [g0] ∪ {1}, ghk = 1, and
  /// the span of {E_g, E_h, E_k}.
  template <typename F>
  void for_each_core_triple(F&& f) {
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      for (const GroupElement& g : classes_[c].members) {
        for (const GroupElement& k : classes_[c].members) {
          const GroupElement h = group_.inverse(group_.compose(g, k));
          if (!in_class_or_one(c, h)) continue;
          const Subspace p = Subspace::span(e_.field(), e_.dim(), basis_products(e_, idx_(g), idx_(h), idx_(k)));
          f(c, g, h, k, subspace_basis(p));
        }
      }
    }
  }

  LemmaResult nested_degrees_stay_in_class(int slot) {
    static const char* statements[3] = {
        "g, k in [g0], h in [g0] ∪ {1}, ghk = 1, l, m in S1 ∪ {1}, {{E_g,E_h,E_k},E_l,E_m} != 0 imply l, m, lm in "
        "[g0] ∪ {1}",
        "g, k in [g0], h in [g0] ∪ {1}, ghk = 1, l, m in S1 ∪ {1}, {E_l,{E_g,E_h,E_k},E_m} != 0 imply l, m, lm in "
        "[g0] ∪ {1}",
        "g, k in [g0], h in [g0] ∪ {1}, ghk = 1, l, m in S1 ∪ {1}, {E_l,E_m,{E_g,E_h,E_k}} != 0 imply l, m, lm in "
        "[g0] ∪ {1}"};
    LemmaResult r = named(std::string("nested_degrees_stay_in_class.") + kSlotNames[slot], statements[slot]);
    for_each_core_triple([&](std::size_t c, const GroupElement& g, const GroupElement& h, const GroupElement& k,
                             const std::vector<Vector>& p) {
      for (const GroupElement& l : odd_or_one_) {
        for (const GroupElement& m : odd_or_one_) {
          bool nonzero = false;
          for (const Vector& x : p) {
            for (std::size_t i : idx_(l)) {
              for (std::size_t j : idx_(m)) {
                const Vector bl = e_.unit(i);
                const Vector bm = e_.unit(j);
                Vector out;
                if (slot == 0) out = e_.triple_product(x, bl, bm);
                if (slot == 1) out = e_.triple_product(bl, x, bm);
                if (slot == 2) out = e_.triple_product(bl, bm, x);
                if (!is_zero(out)) nonzero = true;
              }
            }
          }
          const bool holds =
              !nonzero || (in_class_or_one(c, l) && in_class_or_one(c, m) && in_class_or_one(c, group_.compose(l, m)));
          record(r, nonzero, holds, {{g, h, k, l, m}, nonzero ? "product is nonzero" : "product is zero"});
        }
      }
    });
    return r;
  }

  LemmaResult core_products_vanish(int which) {
    static const char* ids[3] = {"class_core_bracket_odd_vanishes", "class_core_bracket_even_vanishes",
                                 "class_core_triple_vanishes"};
    static const char* statements[3] = {
        "g, k in [g0], h in [g0] ∪ {1}, ghk = 1, h' in S1 outside [g0] imply [{E_g,E_h,E_k}, E_h'] = 0",
        "g, k in [g0], h in [g0] ∪ {1}, ghk = 1, h' in S1 outside [g0] imply [{E_g,E_h,E_k}, L0_h'] = 0",
        "g, k in [g0], h in [g0] ∪ {1}, ghk = 1, h' in S1 outside [g0] imply {{E_g,E_h,E_k}, E_1, E_h'} = 0"};
    LemmaResult r = named(ids[which], statements[which]);
    const std::vector<Vector> e1 = unit_vectors(e_, idx_(group_.identity()));
    for_each_core_triple([&](std::size_t c, const GroupElement& g, const GroupElement& h, const GroupElement& k,
                             const std::vector<Vector>& p) {
      for (const GroupElement& hb : sup_.sigma1) {
        if (classes_[c].contains(hb)) continue;
        const std::vector<Vector> ehb = unit_vectors(e_, idx_(hb));
        std::vector<Vector> lhb;
        if (which == 1) lhb = subspace_basis(emb_.l0_component(hb));
        bool holds = true;
        bool nonvacuous = !p.empty();
        for (const Vector& x : p) {
          if (which == 0) {
            for (const Vector& w : ehb) holds = holds && is_zero(emb_.bracket_odd(x, w));
          } else if (which == 1) {
            for (const Vector& y : lhb) holds = holds && is_zero(emb_.act_left(x, y));
          } else {
            for (const Vector& u : e1) {
              for (const Vector& w : ehb) holds = holds && is_zero(e_.triple_product(x, u, w));
            }
          }
        }
        if (which == 1) nonvacuous = nonvacuous && !lhb.empty();
        if (which == 2) nonvacuous = nonvacuous && !e1.empty();
        record(r, nonvacuous, holds,
               {{g, h, k, hb}, "dim of product span " + std::to_string(p.size()) + (holds ? ", vanishes" : ", nonzero")});
      }
    });
    return r;
  }

  const GradedLTS& e_;
  const StandardEmbedding& emb_;
  const SupportData& sup_;
  const std::vector<ConnectionClass>& classes_;
  DegreeIndex idx_;
  const AbelianGroup& group_;
  std::map<GroupElement, std::size_t> class_of_;
  std::vector<GroupElement> odd_or_one_;
};

}  // namespace

LemmaReport verify_structure_lemmas(const GradedLTS& e, const StandardEmbedding& emb, const SupportData& sup,
                                    const std::vector<ConnectionClass>& classes) {
  return LemmaRunner(e, emb, sup, classes).run();
}

std::vector<Obstruction> simplicity_obstruction(const GradedLTS& e, const DecompositionReport& report,
                                                const ObstructionOptions& options) {
  std::vector<Obstruction> out;
  const Field field = e.field();
  const std::size_t n = e.dim();
  const Subspace zero = Subspace::zero(field, n);
  const Subspace whole = Subspace::whole(field, n);
  const Subspace j = compute_J(e);
  auto trivial = [&](const Subspace& s) { return s == zero || s == j || s == whole; };

  if (e.has_zero_product()) out.push_back({"zero_product", "the triple product vanishes identically", std::nullopt});

  std::vector<Subspace> found;
  for (const ClassIdeal& ci : report.ideals) {
    if (!trivial(ci.total)) {
      found.push_back(ci.total);
      out.push_back({"proper_class_ideal",
                     "ideal of class " + ci.cls.representative.to_string() + " has dimension " +
                         std::to_string(ci.total.dim()) + " and is neither 0, J nor E",
                     ci.total});
    }
  }
  if (report.classes.size() > 1) {
    out.push_back({"multiple_classes", std::to_string(report.classes.size()) + " connection classes", std::nullopt});
  }
  if (!report.tight) {
    out.push_back({"not_tight",
                   "E_1 has dimension " + std::to_string(report.identity_component.dim()) +
                       " but products of opposite degrees span only " + std::to_string(report.tight_span.dim()),
                   report.U});
  }

  std::vector<Vector> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(e.unit(i));
  if (n > 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long> coeff(-3, 3);
    while (probes.size() < n + options.random_probes) {
      Vector v(n, field.zero());
      for (std::size_t i = 0; i < n; ++i) v[i] = field.from_int(coeff(rng));
      if (!is_zero(v)) probes.push_back(std::move(v));
    }
  }
  for (std::size_t p = 0; p < probes.size(); ++p) {
    Subspace ideal = ideal_closure(e, Subspace::span(field, n, {probes[p]}));
    if (trivial(ideal) || std::find(found.begin(), found.end(), ideal) != found.end()) continue;
    found.push_back(ideal);
    out.push_back({"probe_ideal",
                   "ideal generated by " + vector_string(probes[p]) + " has dimension " + std::to_string(ideal.dim()),
                   std::move(ideal)});
  }
  return out;
}

}  // namespace lts
