#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ordfree/order.hpp"

namespace ordfree::detail {

/// Compiled comparison node. Composite nodes hold their children directly;
/// only leaves talk to the CompareContext.
class OrderNode {
 public:
  virtual ~OrderNode() = default;
  virtual Verdict compare(const Element& a, const Element& b,
                          CompareContext* ctx) const = 0;
};

using NodePtr = std::shared_ptr<const OrderNode>;

/// Validates `o` against `g` and builds the evaluator. `path` is the leaf
/// path prefix certificates will report for base orderings below here.
NodePtr compile(const Ordering& o, const Group& g, const LeafPath& path);

}  // namespace ordfree::detail
