#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segre/exact/matrix.hpp"

namespace segre::quiver {

using exact::Matrix;
using exact::Scalar;
using IntMatrix = std::vector<std::vector<long>>;

struct Arrow {
  int source, target;
  std::string label;
};

struct Quiver {
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<std::string> vertex_labels;

  // Throws segre::Error on invalid vertex indices.
  void validate() const;
  bool is_acyclic() const;
  std::optional<int> arrow_index(const std::string& label) const;
};

// Arrow indices in traversal order: the first arrow starts the path.
// The trivial path at vertex v is stored as {-1 - v}.
using Path = std::vector<int>;
inline Path trivial_path(int v) { return {-1 - v}; }
inline bool is_trivial(const Path& p) { return p.size() == 1 && p[0] < 0; }
inline std::size_t path_length(const Path& p) { return is_trivial(p) ? 0 : p.size(); }
// Linear combination of length-2 paths.
using Relation = std::vector<std::pair<Scalar, Path>>;

using DimVector = std::vector<long>;

}  // namespace segre::quiver
