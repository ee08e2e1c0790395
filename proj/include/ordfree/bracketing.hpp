#pragma once

#include <memory>
#include <vector>

#include "ordfree/group.hpp"

namespace ordfree {

/// Binary bracketing of the factors 0..k-1 of a flat free product: a
/// binary tree whose leaves are the factor indices in order.
class Bracketing {
 public:
  static Bracketing leaf(int index);
  static Bracketing node(Bracketing left, Bracketing right);
  /// ((0 1) 2) 3 ... the association the iterated construction uses.
  static Bracketing left_assoc(int leaf_count);
  /// All bracketings of `leaf_count` factors (Catalan many).
  static std::vector<Bracketing> all(int leaf_count);

  bool is_leaf() const;
  int leaf_index() const;
  Bracketing left() const;
  Bracketing right() const;
  int leaf_count() const;
  /// Smallest factor index under this node.
  int first_leaf() const;

 private:
  struct Node;
  explicit Bracketing(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// The nested group this bracketing carves out of a flat free product:
/// every internal node becomes a two-factor free product.
Group bracketed_group(const Group& flat, const Bracketing& b);

/// Image of a flat reduced word under the canonical regrouping
/// isomorphism onto the bracketed group.
Element to_bracketed(const Group& flat, const Bracketing& b,
                     const Element& word);

}  // namespace ordfree
