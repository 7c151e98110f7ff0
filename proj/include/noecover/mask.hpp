#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace noecover {

// Subset of a ground set of at most 32 elements, one bit per element.
// Canonical order between subsets is the numeric order of the bit patterns.
class SubsetMask {
public:
  constexpr SubsetMask() = default;
  constexpr SubsetMask(std::uint32_t bits, int width) : bits_(bits), width_(width) {
    assert(width >= 0 && width <= 32);
    assert(width == 32 || (bits >> width) == 0);
  }

  static constexpr SubsetMask empty_set(int width) { return {0, width}; }
  static constexpr SubsetMask full_set(int width) {
    return {width == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << width) - 1, width};
  }
  static SubsetMask of(const std::vector<int>& elems, int width) {
    std::uint32_t b = 0;
    for (int e : elems) b |= std::uint32_t{1} << e;
    return {b, width};
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int width() const { return width_; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_full() const { return *this == full_set(width_); }

  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr SubsetMask with(int e) const { return {bits_ | (std::uint32_t{1} << e), width_}; }
  constexpr SubsetMask without(int e) const { return {bits_ & ~(std::uint32_t{1} << e), width_}; }

  constexpr bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(SubsetMask o) const { return subset_of(o) && bits_ != o.bits_; }

  constexpr SubsetMask complement() const { return {full_set(width_).bits_ & ~bits_, width_}; }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    assert(a.width_ == b.width_);
    return {a.bits_ | b.bits_, a.width_};
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    assert(a.width_ == b.width_);
    return {a.bits_ & b.bits_, a.width_};
  }
  // Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) {
    assert(a.width_ == b.width_);
    return {a.bits_ & ~b.bits_, a.width_};
  }

  friend constexpr bool operator==(SubsetMask a, SubsetMask b) {
    return a.bits_ == b.bits_ && a.width_ == b.width_;
  }
  friend constexpr bool operator!=(SubsetMask a, SubsetMask b) { return !(a == b); }
  friend constexpr bool operator<(SubsetMask a, SubsetMask b) { return a.bits_ < b.bits_; }

  // Elements as ascending indices.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint32_t r = bits_; r != 0; r &= r - 1) out.push_back(std::countr_zero(r));
    return out;
  }
  int least_element() const {
    assert(bits_ != 0);
    return std::countr_zero(bits_);
  }

private:
  std::uint32_t bits_ = 0;
  int width_ = 0;
};

// Calls f on every submask of m in ascending numeric order, ∅ and m included.
template <typename F>
void for_each_submask(SubsetMask m, F&& f) {
  const std::uint32_t bits = m.bits();
  std::uint32_t s = 0;
  while (true) {
    f(SubsetMask{s, m.width()});
    if (s == bits) break;
    s = (s - bits) & bits;
  }
}

// Calls f on every width-bit mask in ascending numeric order.
template <typename F>
void for_each_mask(int width, F&& f) {
  const std::uint64_t end = std::uint64_t{1} << width;
  for (std::uint64_t b = 0; b < end; ++b) f(SubsetMask{static_cast<std::uint32_t>(b), width});
}

} // namespace noecover
