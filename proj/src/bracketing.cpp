#include "ordfree/bracketing.hpp"

namespace ordfree {

struct Bracketing::Node {
  int leaf_index = -1;  // -1 for internal nodes
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  int leaf_count = 1;
  int first_leaf = 0;
};

Bracketing Bracketing::leaf(int index) {
  auto n = std::make_shared<Node>();
  n->leaf_index = index;
  n->first_leaf = index;
  return Bracketing(std::move(n));
}

Bracketing Bracketing::node(Bracketing left, Bracketing right) {
  auto n = std::make_shared<Node>();
  n->left = left.node_;
  n->right = right.node_;
  n->leaf_count = left.leaf_count() + right.leaf_count();
  n->first_leaf = left.first_leaf();
  return Bracketing(std::move(n));
}

Bracketing Bracketing::left_assoc(int leaf_count) {
  if (leaf_count < 1) throw ShapeMismatchError("bracketing needs a factor");
  Bracketing acc = leaf(0);
  for (int i = 1; i < leaf_count; ++i) acc = node(acc, leaf(i));
  return acc;
}

namespace {

std::vector<Bracketing> all_in_range(int lo, int hi) {
  std::vector<Bracketing> out;
  if (hi - lo == 1) {
    out.push_back(Bracketing::leaf(lo));
    return out;
  }
  for (int split = lo + 1; split < hi; ++split) {
    for (const auto& l : all_in_range(lo, split))
      for (const auto& r : all_in_range(split, hi))
        out.push_back(Bracketing::node(l, r));
  }
  return out;
}

}  // namespace

std::vector<Bracketing> Bracketing::all(int leaf_count) {
  if (leaf_count < 1) throw ShapeMismatchError("bracketing needs a factor");
  return all_in_range(0, leaf_count);
}

bool Bracketing::is_leaf() const { return node_->leaf_index >= 0; }

int Bracketing::leaf_index() const {
  if (!is_leaf()) throw ShapeMismatchError("not a bracketing leaf");
  return node_->leaf_index;
}

Bracketing Bracketing::left() const {
  if (is_leaf()) throw ShapeMismatchError("bracketing leaf has no children");
  return Bracketing(node_->left);
}

Bracketing Bracketing::right() const {
  if (is_leaf()) throw ShapeMismatchError("bracketing leaf has no children");
  return Bracketing(node_->right);
}

int Bracketing::leaf_count() const { return node_->leaf_count; }

int Bracketing::first_leaf() const { return node_->first_leaf; }

Group bracketed_group(const Group& flat, const Bracketing& b) {
  if (!flat.is_free_product())
    throw ShapeMismatchError("bracketing needs a free product");
  if (b.is_leaf()) return flat.child(static_cast<std::size_t>(b.leaf_index()));
  return Group::free_product(
      {bracketed_group(flat, b.left()), bracketed_group(flat, b.right())});
}

namespace {

// Wraps an element of flat factor `target` into the bracketed group by
// injecting along the path from the root to that leaf.
Element inject_along(const Group& flat, const Bracketing& b, int target,
                     const Element& e) {
  if (b.is_leaf()) {
    if (b.leaf_index() != target)
      throw ShapeMismatchError("factor is not under this bracketing node");
    return e;
  }
  Group here = bracketed_group(flat, b);
  if (target < b.right().first_leaf())
    return inject(here, 0, inject_along(flat, b.left(), target, e));
  return inject(here, 1, inject_along(flat, b.right(), target, e));
}

}  // namespace

Element to_bracketed(const Group& flat, const Bracketing& b,
                     const Element& word) {
  if (b.leaf_count() != static_cast<int>(flat.arity()))
    throw ShapeMismatchError("bracketing does not cover all factors");
  Group target = bracketed_group(flat, b);
  Element acc = identity(target);
  for (const auto& s : word.syllables()) {
    acc = multiply(target, acc,
                   inject_along(flat, b, static_cast<int>(s.factor),
                                s.element));
  }
  return acc;
}

}  // namespace ordfree
