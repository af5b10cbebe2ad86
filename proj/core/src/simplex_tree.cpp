#include "csd/simplex_tree.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "csd/diagram.hpp"
#include "csd/errors.hpp"

namespace csd {

const SimplexTree::Node* SimplexTree::locate(const Simplex& s) const {
  const Node* node = &root_;
  for (Vertex v : s) {
    auto it = node->children.find(v);
    if (it == node->children.end()) return nullptr;
    node = it->second.get();
  }
  return node;
}

bool SimplexTree::contains(const Simplex& s) const { return locate(s) != nullptr; }

std::optional<Level> SimplexTree::find(const Simplex& s) const {
  const Node* node = locate(s);
  if (!node) return std::nullopt;
  return node->value;
}

Level SimplexTree::filtration(const Simplex& s) const {
  auto f = find(s);
  if (!f) throw NotInComplex("simplex " + to_string(s) + " is not in the tree");
  return *f;
}

void SimplexTree::insert(const Simplex& s, Level level) {
  if (auto existing = find(s); existing && *existing < level) {
    throw MonotonicityError("simplex " + to_string(s) + " already stored at " +
                            std::to_string(*existing) + " < " + std::to_string(level));
  }
  insert_faces(root_, s, 0, level);
}

// Every face of s is a word s[i0] < s[i1] < ...; walking children in vertex
// order from `node` visits each face of s[from..] appended to node's word once.
void SimplexTree::insert_faces(Node& node, const Simplex& s, std::size_t from, Level level) {
  for (std::size_t i = from; i < s.size(); ++i) {
    auto& slot = node.children[s[i]];
    if (!slot) {
      slot = std::make_unique<Node>();
      slot->value = level;
      ++nodes_;
    } else {
      slot->value = std::min(slot->value, level);
    }
    insert_faces(*slot, s, i + 1, level);
  }
}

SimplexTree expand(const CriticalSimplexDiagram& diagram) {
  std::vector<const std::pair<const Label, Star>*> order;
  order.reserve(diagram.stars().size());
  for (const auto& entry : diagram.stars()) order.push_back(&entry);
  // stars() ascends by label; walk it backwards for descending levels
  SimplexTree tree;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& [label, st] = **it;
    if (auto existing = tree.find(st.simplex); existing && *existing <= label.level) continue;
    tree.insert(st.simplex, label.level);
  }
  return tree;
}

}  // namespace csd
