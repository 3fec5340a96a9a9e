#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segre/ktheory/classes.hpp"

namespace segre::ktheory {

struct LabeledClass {
  std::string label;
  KClass cls;
};

struct Collection {
  std::string name;
  Ambient ambient = Ambient::Surface;
  std::vector<LabeledClass> items;
  std::vector<std::size_t> blocks;  // block sizes summing to items.size()
};

std::vector<std::string> builtin_collection_names();
// Throws segre::Error for unknown names.
Collection builtin_collection(const std::string& name);

struct GramMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<long>> entries;
  std::vector<std::size_t> blocks;

  bool unit_diagonal() const;
  // G[j][i] = 0 for i < j.
  bool unitriangular() const;
  // Each block's Gram is the identity.
  bool blocks_orthogonal() const;
  // Diagonal blocks all equal the first one (blocks of equal size).
  bool rectangular() const;
  std::vector<std::vector<long>> block(std::size_t k) const;
  std::string to_string() const;
};

// Throws segre::Error for mixed ambients.
GramMatrix gram(const Collection& c);

enum class Direction { Left, Right };
// Left at i: (E, F) -> (F - chi(E,F) E, E). Right at i: (E, F) -> (F, E - chi(E,F) F).
// Throws for i + 1 >= size.
Collection mutate(const Collection& c, std::size_t index, Direction dir);

struct MutationStep {
  std::size_t index;
  Direction dir;
};
Collection mutate_sequence(Collection c, const std::vector<MutationStep>& steps);

// The published sequences with their expected endpoints.
struct SequenceResult {
  std::string name;
  Collection result;
  Collection expected;
  bool matches = false;  // classes agree up to sign, blockwise up to order
  std::vector<std::string> notes;
};
SequenceResult three_block_from_karpov_nogin();
SequenceResult quiver_center_from_orlov();
// Right mutation of the first object through the rest of orlov_X: expected O(2s).
SequenceResult serre_endpoint_from_orlov();

// chi(E,F) == sign * chi(F, E (x) omega) for all pairs; returns the failing pairs.
std::vector<std::string> serre_self_test(const Collection& c);

struct ConsistencyReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool pass() const;
};
ConsistencyReport consistency_checks();

// Matrix of a collection change: rows express the classes of b in terms of a.
// std::nullopt when some class of b is not an integer combination of a.
std::optional<std::vector<std::vector<long>>> change_of_basis(const Collection& from, const Collection& to);

}  // namespace segre::ktheory
