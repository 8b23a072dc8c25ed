#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace submwp {

/// Subset of a ground set with at most 64 elements, bit i = element i.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool contains(Mask m, int i) { return (m >> i) & 1u; }
inline Mask with(Mask m, int i) { return m | (Mask{1} << i); }
inline Mask without(Mask m, int i) { return m & ~(Mask{1} << i); }
inline Mask single(int i) { return Mask{1} << i; }

/// Ordered finite ground set. Identifiers are opaque strings; iteration order
/// (index 0..n-1) is fixed at construction and used everywhere masks appear.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a named element; DomainError if absent.
  int index(const std::string& name) const;
  bool has(const std::string& name) const { return index_.count(name) != 0; }

  Mask full() const {
    return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1;
  }

  Mask mask_of(const std::vector<std::string>& members) const;
  std::vector<std::string> names_of(Mask m) const;

  bool operator==(const GroundSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace submwp
