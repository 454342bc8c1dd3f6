#include "prext/family.hpp"

#include <stdexcept>
#include <string>

namespace prext {

void Family::validate_shape(const Graph& host) const {
  VertexSet seen;
  for (int j = 1; j <= size(); ++j) {
    const VertexSet& c = class_at(j);
    if (c.empty())
      throw std::invalid_argument("class " + std::to_string(j) + " is empty");
    if (!c.is_subset_of(host.vertices()))
      throw std::invalid_argument("class " + std::to_string(j) +
                                  " has a vertex id out of range");
    if (c.intersects(seen))
      throw std::invalid_argument("class " + std::to_string(j) +
                                  " overlaps an earlier class");
    seen |= c;
  }
}

void StableFamily::validate(const Graph& host) const {
  validate_shape(host);
  for (int j = 1; j <= size(); ++j)
    if (!is_stable(host, class_at(j)))
      throw std::invalid_argument("class " + std::to_string(j) +
                                  " is not a stable set");
}

void CliqueFamily::validate(const Graph& host) const {
  validate_shape(host);
  for (int j = 1; j <= size(); ++j)
    if (!is_clique(host, class_at(j)))
      throw std::invalid_argument("class " + std::to_string(j) +
                                  " is not a clique");
}

StableFamily as_stable(const CliqueFamily& q) { return StableFamily(q.classes()); }
CliqueFamily as_clique(const StableFamily& q) { return CliqueFamily(q.classes()); }

}  // namespace prext
