#include "segre/quiver/quiver.hpp"

#include <functional>

namespace segre::quiver {

void Quiver::validate() const {
  for (const auto& a : arrows)
    if (a.source < 0 || a.target < 0 || static_cast<std::size_t>(a.source) >= vertices ||
        static_cast<std::size_t>(a.target) >= vertices)
      throw Error("arrow " + a.label + " has an invalid endpoint");
  if (!vertex_labels.empty() && vertex_labels.size() != vertices) throw Error("vertex label count mismatch");
}

bool Quiver::is_acyclic() const {
  std::vector<int> state(vertices, 0);  // 0 unseen, 1 on stack, 2 done
  std::function<bool(int)> visit = [&](int v) {
    state[static_cast<std::size_t>(v)] = 1;
    for (const auto& a : arrows) {
      if (a.source != v) continue;
      const int s = state[static_cast<std::size_t>(a.target)];
      if (s == 1 || (s == 0 && !visit(a.target))) return false;
    }
    state[static_cast<std::size_t>(v)] = 2;
    return true;
  };
  for (std::size_t v = 0; v < vertices; ++v)
    if (state[v] == 0 && !visit(static_cast<int>(v))) return false;
  return true;
}

std::optional<int> Quiver::arrow_index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == label) return static_cast<int>(i);
  return std::nullopt;
}

}  // namespace segre::quiver
