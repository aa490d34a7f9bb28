#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lts {

/// Coordinates of an element of Z^a x Z/m_1 x ... in canonical form.
///
/// Ordering is lexicographic on the coordinate vector; every canonical
/// representative and deterministic iteration order in the library uses it.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
  std::size_t rank() const noexcept { return coords_.size(); }

  /// "[1,-1]"
  std::string to_string() const;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// A finitely generated abelian group given by its cyclic factors; modulus 0
/// is an infinite cyclic factor, m >= 2 is Z/m.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Throws std::invalid_argument if some modulus is negative or equal to 1.
  explicit AbelianGroup(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
  std::size_t factors() const noexcept { return moduli_.size(); }

  GroupElement identity() const;
  /// Reduces arbitrary integer coordinates to canonical form.
  GroupElement element(std::vector<std::int64_t> coords) const;
  GroupElement reduce(const GroupElement& g) const { return element(g.coords()); }
  bool is_canonical(const GroupElement& g) const;
  bool is_identity(const GroupElement& g) const;

  GroupElement compose(const GroupElement& g, const GroupElement& h) const;
  GroupElement compose(const GroupElement& g, const GroupElement& h, const GroupElement& k) const {
    return compose(compose(g, h), k);
  }
  GroupElement inverse(const GroupElement& g) const;

  /// Parses "[a,b,...]" and reduces it; throws std::invalid_argument.
  GroupElement parse(std::string_view text) const;

  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  void require_member(const GroupElement& g) const;
  std::vector<std::int64_t> moduli_;
};

/// Direct product G x H, with elements concatenated in that order.
AbelianGroup direct_product(const AbelianGroup& g, const AbelianGroup& h);

}  // namespace lts
