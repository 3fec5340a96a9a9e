#include "segre/ktheory/collections.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace segre::ktheory {

namespace {

using Div = BlowupClass::Divisor;

const std::vector<std::string> kNames = {"three_block", "karpov_nogin", "orlov_X", "quiver_center",
                                         "bundle_lefschetz", "orlov_blowup", "blowup_14"};

SurfaceKClass O(const PicClass& d = {}) { return SurfaceKClass::line_bundle(d); }
PicClass h() { return PicClass::h(); }
PicClass e(int i) { return PicClass::e(i); }
PicClass esum() { return PicClass::e_sum(); }
PicClass K() { return PicClass::canonical(); }

std::string idx(int i) { return std::to_string(i); }

// The 3-block collection on S with its labels.
std::vector<std::pair<std::string, SurfaceKClass>> three_block_items() {
  std::vector<std::pair<std::string, SurfaceKClass>> v{{"O", O()}};
  for (int i = 1; i <= 4; ++i) v.push_back({"O(h-e" + idx(i) + ")", O(h() - e(i))});
  v.push_back({"O(2h-e)", O(h() * 2 - esum())});
  v.push_back({"U2^v", SurfaceKClass::u2_dual()});
  return v;
}

Collection bundle_from_surface(std::string name, const std::vector<std::pair<std::string, SurfaceKClass>>& base,
                               const std::vector<std::size_t>& blocks) {
  Collection c{std::move(name), Ambient::BundleX, {}, {}};
  for (long k = 0; k < 2; ++k) {
    for (const auto& [label, cls] : base) {
      std::string l = "p*" + label;
      if (k) l += "(s)";
      c.items.push_back({l, BundleXClass::pullback(cls) * BundleXClass::xi_power(k)});
    }
    c.blocks.insert(c.blocks.end(), blocks.begin(), blocks.end());
  }
  return c;
}

LabeledClass bl(std::string label, const Div& d) { return {std::move(label), BlowupClass::line_bundle(d)}; }

std::vector<std::vector<long>> pairing_matrix(const std::vector<LabeledClass>& items) {
  std::vector<std::vector<long>> m(items.size(), std::vector<long>(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j) m[i][j] = chi(items[i].cls, items[j].cls);
  return m;
}

void require_uniform(const Collection& c) {
  for (const auto& it : c.items)
    if (ambient_of(it.cls) != c.ambient) throw Error("collection " + c.name + " mixes ambients at " + it.label);
}

// Compares two collections blockwise (using b's block sizes), classes up to sign and order inside a block.
bool blockwise_match(const Collection& a, const Collection& b, std::vector<std::string>& notes) {
  if (a.items.size() != b.items.size()) {
    notes.push_back("sizes differ");
    return false;
  }
  std::size_t start = 0;
  bool ok = true;
  for (std::size_t size : b.blocks) {
    std::vector<bool> used(size, false);
    for (std::size_t j = start; j < start + size; ++j) {
      bool found = false;
      for (std::size_t i = start; i < start + size && !found; ++i)
        if (!used[i - start] && equal_up_to_sign(a.items[i].cls, b.items[j].cls)) found = used[i - start] = true;
      if (!found) {
        notes.push_back("missing " + b.items[j].label + " in block starting at " + std::to_string(start));
        ok = false;
      }
    }
    start += size;
  }
  return ok;
}

}  // namespace

std::vector<std::string> builtin_collection_names() { return kNames; }

Collection builtin_collection(const std::string& name) {
  if (name == "three_block") {
    Collection c{name, Ambient::Surface, {}, {1, 5, 1}};
    for (const auto& [l, cls] : three_block_items()) c.items.push_back({l, cls});
    return c;
  }
  if (name == "karpov_nogin") {
    Collection c{name, Ambient::Surface, {{"O", O()}, {"F", SurfaceKClass::u2_dual()}, {"O(h)", O(h())}}, {1, 1, 5}};
    for (int i = 1; i <= 4; ++i) c.items.push_back({"O(e" + idx(i) + "-K-h)", O(e(i) - K() - h())});
    return c;
  }
  if (name == "orlov_X") {
    auto c = bundle_from_surface(name, three_block_items(), {7});
    return c;
  }
  if (name == "quiver_center") {
    Collection c{name, Ambient::BundleX, {}, {6, 1}};
    for (int i = 1; i <= 4; ++i) c.items.push_back({"O(h-e" + idx(i) + ")", BundleXClass::line_bundle(h() - e(i), 0)});
    c.items.push_back({"O(2h-e)", BundleXClass::line_bundle(h() * 2 - esum(), 0)});
    c.items.push_back({"O(3h-e-s)", BundleXClass::line_bundle(h() * 3 - esum(), -1)});
    c.items.push_back({"p*U2^v", BundleXClass::pullback(SurfaceKClass::u2_dual())});
    return c;
  }
  if (name == "bundle_lefschetz") {
    std::vector<std::pair<std::string, SurfaceKClass>> base;
    for (int i = 1; i <= 4; ++i) base.push_back({"O_e" + idx(i) + "(-1)", SurfaceKClass::curve_sheaf(i, -1)});
    base.push_back({"O", O()});
    base.push_back({"O(h)", O(h())});
    base.push_back({"O(2h)", O(h() * 2)});
    return bundle_from_surface(name, base, {7});
  }
  if (name == "orlov_blowup") {
    Collection c{name, Ambient::BlowupX, {}, {4, 10}};
    c.items.push_back(bl("O", {0, 0, 0, 0, 0, 0}));
    for (long a = 1; a <= 3; ++a) c.items.push_back(bl("O(" + std::to_string(a) + "H)", {a, 0, 0, 0, 0, 0}));
    for (int i = 1; i <= 5; ++i) {
      c.items.push_back({"O_E" + idx(i), BlowupClass::exceptional_sheaf(i, 0)});
      c.items.push_back({"O_E" + idx(i) + "(-E" + idx(i) + ")", BlowupClass::exceptional_sheaf(i, -1)});
    }
    return c;
  }
  if (name == "blowup_14") {
    Collection c{name, Ambient::BlowupX, {}, {7, 7}};
    c.items.push_back(bl("O", {0, 0, 0, 0, 0, 0}));
    c.items.push_back(bl("O(H)", {1, 0, 0, 0, 0, 0}));
    for (int i = 1; i <= 5; ++i) c.items.push_back({"O_E" + idx(i), BlowupClass::exceptional_sheaf(i, 0)});
    c.items.push_back(bl("O(2H-E)", {2, 1, 1, 1, 1, 1}));
    c.items.push_back(bl("O(3H-E)", {3, 1, 1, 1, 1, 1}));
    for (int i = 1; i <= 5; ++i)
      c.items.push_back({"O_E" + idx(i) + "(-E" + idx(i) + ")", BlowupClass::exceptional_sheaf(i, -1)});
    return c;
  }
  throw Error("unknown collection '" + name + "'");
}

bool GramMatrix::unit_diagonal() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i][i] != 1) return false;
  return true;
}

bool GramMatrix::unitriangular() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (entries[i][j] != 0) return false;
  return unit_diagonal();
}

std::vector<std::vector<long>> GramMatrix::block(std::size_t k) const {
  const std::size_t start = std::accumulate(blocks.begin(), blocks.begin() + static_cast<long>(k), std::size_t{0});
  std::vector<std::vector<long>> b;
  for (std::size_t i = start; i < start + blocks[k]; ++i)
    b.emplace_back(entries[i].begin() + static_cast<long>(start), entries[i].begin() + static_cast<long>(start + blocks[k]));
  return b;
}

bool GramMatrix::blocks_orthogonal() const {
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto b = block(k);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b[i][j] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

bool GramMatrix::rectangular() const {
  if (blocks.size() < 2) return false;
  for (std::size_t k = 1; k < blocks.size(); ++k)
    if (blocks[k] != blocks[0] || block(k) != block(0)) return false;
  return true;
}

std::string GramMatrix::to_string() const {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& l : labels) width = std::max(width, l.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    os << labels[i] << std::string(width - labels[i].size() + 1, ' ');
    for (long v : entries[i]) {
      const std::string s = std::to_string(v);
      os << std::string(4 - std::min<std::size_t>(4, s.size()), ' ') << s;
    }
    os << "\n";
  }
  return os.str();
}

GramMatrix gram(const Collection& c) {
  require_uniform(c);
  GramMatrix g;
  for (const auto& it : c.items) g.labels.push_back(it.label);
  g.entries = pairing_matrix(c.items);
  g.blocks = c.blocks;
  if (std::accumulate(g.blocks.begin(), g.blocks.end(), std::size_t{0}) != c.items.size()) g.blocks = {c.items.size()};
  return g;
}

Collection mutate(const Collection& c, std::size_t index, Direction dir) {
  if (index + 1 >= c.items.size())
    throw Error("mutation index " + std::to_string(index) + " out of range for " + std::to_string(c.items.size()) + " objects");
  Collection out = c;
  const auto& E = c.items[index];
  const auto& F = c.items[index + 1];
  const long x = chi(E.cls, F.cls);
  if (dir == Direction::Left) {
    out.items[index] = {"L_{" + E.label + "}" + F.label, add(F.cls, scale(E.cls, -x))};
    out.items[index + 1] = E;
  } else {
    out.items[index] = F;
    out.items[index + 1] = {"R_{" + F.label + "}" + E.label, add(E.cls, scale(F.cls, -x))};
  }
  return out;
}

Collection mutate_sequence(Collection c, const std::vector<MutationStep>& steps) {
  for (const auto& s : steps) c = mutate(c, s.index, s.dir);
  return c;
}

SequenceResult three_block_from_karpov_nogin() {
  std::vector<MutationStep> steps;
  // Move the last block to the front one object at a time.
  for (std::size_t k = 1; k <= 5; ++k) {
    steps.push_back({k, Direction::Left});
    steps.push_back({k - 1, Direction::Left});
  }
  // Then move the structure sheaf back in front of that block.
  for (std::size_t k = 5; k-- > 0;) steps.push_back({k, Direction::Right});
  SequenceResult r{"karpov_nogin -> three_block", mutate_sequence(builtin_collection("karpov_nogin"), steps),
                   builtin_collection("three_block"), false, {}};
  r.matches = blockwise_match(r.result, r.expected, r.notes);
  return r;
}

SequenceResult serre_endpoint_from_orlov() {
  const Collection orlov = builtin_collection("orlov_X");
  std::vector<MutationStep> steps;
  for (std::size_t k = 0; k + 1 < orlov.items.size(); ++k) steps.push_back({k, Direction::Right});
  Collection expected{"orlov_X rotated", Ambient::BundleX, {}, {}};
  for (std::size_t k = 1; k < orlov.items.size(); ++k) expected.items.push_back(orlov.items[k]);
  expected.items.push_back({"O(2s)", BundleXClass::xi_power(2)});
  expected.blocks = std::vector<std::size_t>(orlov.items.size(), 1);
  SequenceResult r{"orlov_X: R O_X -> O(2s)", mutate_sequence(orlov, steps), expected, false, {}};
  r.matches = blockwise_match(r.result, r.expected, r.notes);
  return r;
}

SequenceResult quiver_center_from_orlov() {
  const Collection orlov = builtin_collection("orlov_X");
  std::vector<MutationStep> steps;
  for (std::size_t k = 0; k + 1 < orlov.items.size(); ++k) steps.push_back({k, Direction::Right});
  steps.push_back({5, Direction::Left});
  steps.push_back({12, Direction::Left});
  const Collection center = builtin_collection("quiver_center");
  Collection expected{"quiver_center + twist", Ambient::BundleX, center.items, {}};
  for (const auto& it : center.items) expected.items.push_back({it.label + "(s)", polarisation_twist(it.cls)});
  expected.blocks = {6, 1, 6, 1};
  SequenceResult r{"orlov_X -> quiver_center", mutate_sequence(orlov, steps), expected, false, {}};
  r.matches = blockwise_match(r.result, r.expected, r.notes);
  const KClass target = BundleXClass::line_bundle(PicClass::h() * 3 - PicClass::e_sum(), -1);
  const bool kernel = equal_up_to_sign(r.result.items[5].cls, target);
  r.notes.push_back(std::string("mutated kernel ") + (kernel ? "equals" : "differs from") + " [O(3h-e-s)]");
  r.matches = r.matches && kernel;
  return r;
}

std::vector<std::string> serre_self_test(const Collection& c) {
  require_uniform(c);
  std::vector<std::string> failures;
  const int sign = serre_sign(c.ambient);
  for (const auto& a : c.items) {
    const KClass twisted = serre_twist(a.cls);
    for (const auto& b : c.items)
      if (chi(a.cls, b.cls) != sign * chi(b.cls, twisted)) failures.push_back("(" + a.label + ", " + b.label + ")");
  }
  return failures;
}

bool ConsistencyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

ConsistencyReport consistency_checks() {
  ConsistencyReport r;
  const auto u2 = SurfaceKClass::u2(), u2d = SurfaceKClass::u2_dual(), u3 = SurfaceKClass::u3(), q3 = SurfaceKClass::q3();
  const auto Kc = PicClass::canonical();
  r.checks.push_back({"K^2 = 5", dot(Kc, Kc) == 5});
  r.checks.push_back({"c1(U2) + c1(U2^v) = 0", u2.c1 + u2d.c1 == PicClass{}});
  r.checks.push_back({"c1(U2) = K", u2.c1 == Kc});
  r.checks.push_back({"c2(U2^v) = 2", (dot(u2d.c1, u2d.c1) - u2d.ch2_twice) == 4});
  r.checks.push_back({"U2 + Q3 = O^5", u2 + q3 == SurfaceKClass::structure_sheaf() * 5});
  r.checks.push_back({"c1(U3) = K", u3.c1 == Kc});
  r.checks.push_back({"c1(U3) = -c1(U2^v)", u3.c1 == -u2d.c1});
  r.checks.push_back({"rank U3 = 3", u3.rank == 3});
  const auto s = gram(builtin_collection("three_block"));
  const auto x = gram(builtin_collection("orlov_X"));
  const auto xp = gram(builtin_collection("orlov_blowup"));
  r.checks.push_back({"rank K(S) = 7", s.unitriangular() && s.entries.size() == 7});
  r.checks.push_back({"rank K(X) = 14 = 2 x 7", x.unitriangular() && x.entries.size() == 2 * s.entries.size()});
  r.checks.push_back({"rank K(X') = 14", xp.unitriangular() && xp.entries.size() == 14});
  r.checks.push_back({"rank K(Y) = 21 = 3 x 7", 3 * s.entries.size() == 21});
  return r;
}

std::optional<std::vector<std::vector<long>>> change_of_basis(const Collection& from, const Collection& to) {
  const auto g = gram(from);
  if (!g.unitriangular()) throw Error("change_of_basis needs an exceptional source collection");
  const std::size_t n = from.items.size();
  std::vector<std::vector<long>> m;
  for (const auto& t : to.items) {
    std::vector<long> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = chi(from.items[i].cls, t.cls);
    // Solve G c = v by back substitution.
    std::vector<long> c(n);
    for (std::size_t i = n; i-- > 0;) {
      long s = v[i];
      for (std::size_t k = i + 1; k < n; ++k) s -= g.entries[i][k] * c[k];
      c[i] = s;
    }
    KClass sum = scale(from.items.front().cls, 0);
    for (std::size_t k = 0; k < n; ++k) sum = add(sum, scale(from.items[k].cls, c[k]));
    if (!numerically_equal(sum, t.cls)) return std::nullopt;
    m.push_back(c);
  }
  return m;
}

}  // namespace segre::ktheory
