#include "lts/abelian_group.hpp"

#include <charconv>
#include <stdexcept>

namespace lts {

std::string GroupElement::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out + "]";
}

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  for (std::int64_t m : moduli_) {
    if (m < 0 || m == 1) throw std::invalid_argument("group modulus must be 0 or >= 2, got " + std::to_string(m));
  }
}

GroupElement AbelianGroup::identity() const { return GroupElement(std::vector<std::int64_t>(moduli_.size(), 0)); }

GroupElement AbelianGroup::element(std::vector<std::int64_t> coords) const {
  if (coords.size() != moduli_.size()) throw std::invalid_argument("group element has wrong number of coordinates");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::int64_t m = moduli_[i];
    if (m >= 2) {
      coords[i] %= m;
      if (coords[i] < 0) coords[i] += m;
    }
  }
  return GroupElement(std::move(coords));
}

bool AbelianGroup::is_canonical(const GroupElement& g) const {
  return g.rank() == moduli_.size() && element(g.coords()) == g;
}

bool AbelianGroup::is_identity(const GroupElement& g) const {
  require_member(g);
  for (std::int64_t c : g.coords()) {
    if (c != 0) return false;
  }
  return true;
}

void AbelianGroup::require_member(const GroupElement& g) const {
  if (g.rank() != moduli_.size()) throw std::invalid_argument("element " + g.to_string() + " is not in group " + to_string());
}

GroupElement AbelianGroup::compose(const GroupElement& g, const GroupElement& h) const {
  require_member(g);
  require_member(h);
  std::vector<std::int64_t> c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = g.coords()[i] + h.coords()[i];
  return element(std::move(c));
}

GroupElement AbelianGroup::inverse(const GroupElement& g) const {
  require_member(g);
  std::vector<std::int64_t> c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -g.coords()[i];
  return element(std::move(c));
}

GroupElement AbelianGroup::parse(std::string_view text) const {
  auto fail = [&]() -> GroupElement {
    throw std::invalid_argument("malformed group element \"" + std::string(text) + "\"");
  };
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') return fail();
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<std::int64_t> coords;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view piece = body.substr(0, comma);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty()) return fail();
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) return fail();
  }
  return element(std::move(coords));
}

std::string AbelianGroup::to_string() const {
  if (moduli_.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += " x ";
    out += moduli_[i] == 0 ? std::string("Z") : "Z/" + std::to_string(moduli_[i]);
  }
  return out;
}

AbelianGroup direct_product(const AbelianGroup& g, const AbelianGroup& h) {
  std::vector<std::int64_t> m = g.moduli();
  m.insert(m.end(), h.moduli().begin(), h.moduli().end());
  return AbelianGroup(std::move(m));
}

}  // namespace lts
