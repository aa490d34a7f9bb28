#include "lts/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "lts/embedding.hpp"
#include "lts/errors.hpp"
#include "lts/triple_system.hpp"

namespace lts {

SupportData SupportData::from_sets(AbelianGroup group, std::vector<GroupElement> sigma1, std::vector<GroupElement> sigma0) {
  SupportData sup;
  std::sort(sigma1.begin(), sigma1.end());
  sigma1.erase(std::unique(sigma1.begin(), sigma1.end()), sigma1.end());
  std::sort(sigma0.begin(), sigma0.end());
  sigma0.erase(std::unique(sigma0.begin(), sigma0.end()), sigma0.end());
  for (const GroupElement& g : sigma1) {
    sup.pm_sigma1.insert(g);
    sup.pm_sigma1.insert(group.inverse(g));
  }
  for (const GroupElement& g : sigma0) {
    sup.pm_sigma0.insert(g);
    sup.pm_sigma0.insert(group.inverse(g));
  }
  sup.group = std::move(group);
  sup.sigma1 = std::move(sigma1);
  sup.sigma0 = std::move(sigma0);
  return sup;
}

SupportData SupportData::from(const GradedLTS& e, const StandardEmbedding& emb) {
  return from_sets(e.group(), support_sigma1(e), emb.support_sigma0());
}

bool SupportData::in_sigma1(const GroupElement& g) const {
  return std::binary_search(sigma1.begin(), sigma1.end(), g);
}

ConnectionTree::ConnectionTree(const SupportData& sup, const GroupElement& g) : root_(g) {
  if (!sup.in_sigma1(g)) throw std::invalid_argument(g.to_string() + " is not in the support");
  std::vector<GroupElement> steps(sup.pm_sigma1.begin(), sup.pm_sigma1.end());
  steps.push_back(sup.group.identity());
  std::sort(steps.begin(), steps.end());

  parent_.emplace(g, std::nullopt);
  std::deque<GroupElement> queue{g};
  while (!queue.empty()) {
    const GroupElement q = queue.front();
    queue.pop_front();
    for (const GroupElement& a : steps) {
      const GroupElement qa = sup.group.compose(q, a);
      if (!sup.pm_sigma0.contains(qa)) continue;
      for (const GroupElement& b : steps) {
        GroupElement qab = sup.group.compose(qa, b);
        if (!sup.pm_sigma1.contains(qab) || parent_.contains(qab)) continue;
        parent_.emplace(qab, Link{q, a, b});
        queue.push_back(std::move(qab));
      }
    }
  }
}

std::set<GroupElement> ConnectionTree::reached() const {
  std::set<GroupElement> out;
  for (const auto& [q, link] : parent_) out.insert(q);
  return out;
}

std::optional<Connection> ConnectionTree::path_to(const GroupElement& q) const {
  if (!reaches(q)) return std::nullopt;
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  GroupElement cur = q;
  while (const auto& link = parent_.at(cur)) {
    pairs.emplace_back(link->a, link->b);
    cur = link->previous;
  }
  Connection seq{root_};
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    seq.push_back(it->first);
    seq.push_back(it->second);
  }
  return seq;
}

std::set<GroupElement> connection_closure(const SupportData& sup, const GroupElement& g) {
  return ConnectionTree(sup, g).reached();
}

bool are_connected(const SupportData& sup, const GroupElement& g, const GroupElement& h) {
  if (!sup.in_sigma1(h)) throw std::invalid_argument(h.to_string() + " is not in the support");
  const ConnectionTree tree(sup, g);
  return tree.reaches(h) || tree.reaches(sup.group.inverse(h));
}

std::optional<Connection> connection_witness(const SupportData& sup, const GroupElement& g, const GroupElement& h) {
  if (!sup.in_sigma1(h)) throw std::invalid_argument(h.to_string() + " is not in the support");
  const ConnectionTree tree(sup, g);
  if (auto p = tree.path_to(h)) return p;
  return tree.path_to(sup.group.inverse(h));
}

bool ConnectionClass::contains(const GroupElement& g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

std::vector<ConnectionClass> connection_classes(const SupportData& sup) {
  std::map<GroupElement, std::set<GroupElement>> related;
  std::map<GroupElement, ConnectionTree> trees;
  for (const GroupElement& g : sup.sigma1) {
    ConnectionTree tree(sup, g);
    std::set<GroupElement> rel;
    for (const GroupElement& h : sup.sigma1) {
      if (tree.reaches(h) || tree.reaches(sup.group.inverse(h))) rel.insert(h);
    }
    related.emplace(g, std::move(rel));
    trees.emplace(g, std::move(tree));
  }

  for (const GroupElement& g : sup.sigma1) {
    const auto& rg = related.at(g);
    if (!rg.contains(g)) throw EquivalenceFailure("reflexivity fails at " + g.to_string());
    for (const GroupElement& h : rg) {
      if (!related.at(h).contains(g)) {
        throw EquivalenceFailure("symmetry fails: " + g.to_string() + " ~ " + h.to_string() + " but not conversely");
      }
      for (const GroupElement& k : related.at(h)) {
        if (!rg.contains(k)) {
          throw EquivalenceFailure("transitivity fails: " + g.to_string() + " ~ " + h.to_string() + " ~ " + k.to_string());
        }
      }
      const GroupElement hinv = sup.group.inverse(h);
      if (sup.in_sigma1(hinv) && !rg.contains(hinv)) {
        throw EquivalenceFailure("inverse closure fails: " + h.to_string() + " in [" + g.to_string() + "] but not its inverse");
      }
    }
  }

  std::vector<ConnectionClass> classes;
  std::set<GroupElement> assigned;
  for (const GroupElement& g : sup.sigma1) {
    if (assigned.contains(g)) continue;
    ConnectionClass cls;
    cls.representative = g;
    cls.members.assign(related.at(g).begin(), related.at(g).end());
    const ConnectionTree& tree = trees.at(g);
    for (const GroupElement& h : cls.members) {
      assigned.insert(h);
      if (h == g) continue;
      auto path = tree.path_to(h);
      if (!path) path = tree.path_to(sup.group.inverse(h));
      cls.witnesses.emplace(h, std::move(*path));
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace lts
