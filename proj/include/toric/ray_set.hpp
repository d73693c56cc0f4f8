#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace toric {

/// A subset of the ordered rays {0, ..., n-1}, n <= 63. Used for faces of a cone
/// (identified by their ray sets) and for faces of the simplex over the rays.
class RaySet {
 public:
  static constexpr std::size_t kMaxRays = 63;

  constexpr RaySet() = default;
  constexpr explicit RaySet(std::uint64_t bits) : bits_(bits) {}

  static constexpr RaySet full(std::size_t n) {
    return RaySet(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
  }
  static constexpr RaySet single(std::size_t i) { return RaySet(std::uint64_t{1} << i); }
  static RaySet of(std::initializer_list<std::size_t> indices) {
    RaySet s;
    for (auto i : indices) s = s.with(i);
    return s;
  }
  static RaySet of(const std::vector<std::size_t>& indices) {
    RaySet s;
    for (auto i : indices) s = s.with(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(RaySet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr RaySet with(std::size_t i) const { return RaySet(bits_ | (std::uint64_t{1} << i)); }
  constexpr RaySet without(std::size_t i) const { return RaySet(bits_ & ~(std::uint64_t{1} << i)); }

  /// Number of members smaller than i.
  constexpr std::size_t position_of(std::size_t i) const {
    return static_cast<std::size_t>(std::popcount(bits_ & ((std::uint64_t{1} << i) - 1)));
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  /// 1-based labels as printed to users, e.g. "{2,4}".
  std::string label() const {
    std::string s = "{";
    bool first = true;
    for (auto i : indices()) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
    return s + "}";
  }

  friend constexpr RaySet operator&(RaySet a, RaySet b) { return RaySet(a.bits_ & b.bits_); }
  friend constexpr RaySet operator|(RaySet a, RaySet b) { return RaySet(a.bits_ | b.bits_); }
  friend constexpr RaySet operator-(RaySet a, RaySet b) { return RaySet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(RaySet a, RaySet b) = default;
  friend constexpr auto operator<=>(RaySet a, RaySet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Orders by cardinality first, then by bit pattern.
struct GradedOrder {
  bool operator()(RaySet a, RaySet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

}  // namespace toric

template <>
struct std::hash<toric::RaySet> {
  std::size_t operator()(toric::RaySet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
