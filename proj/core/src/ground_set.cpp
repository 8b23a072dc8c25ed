#include "submwp/ground_set.hpp"

#include "submwp/errors.hpp"

namespace submwp {

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 64)
    throw CapacityError("ground sets above 64 elements are unsupported", names_.size());
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw DomainError("duplicate ground element '" + names_[i] + "'");
  }
}

int GroundSet::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw DomainError("element '" + name + "' not in ground set");
  return it->second;
}

Mask GroundSet::mask_of(const std::vector<std::string>& members) const {
  Mask m = 0;
  for (const auto& s : members) m = with(m, index(s));
  return m;
}

std::vector<std::string> GroundSet::names_of(Mask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i)
    if (contains(m, i)) out.push_back(names_[i]);
  return out;
}

}  // namespace submwp
