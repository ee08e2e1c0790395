#include "ordfree/order.hpp"

#include <utility>

#include "ordfree/bracketing.hpp"
#include "ordfree/polymat.hpp"
#include "ordfree/ring.hpp"
#include "order_node.hpp"

namespace ordfree {

Ordering::Ordering(OrderKind kind, std::vector<Ordering> children,
                   std::vector<std::vector<BigInt>> rows)
    : kind_(kind), children_(std::move(children)), rows_(std::move(rows)) {}

Ordering Ordering::int_std() { return Ordering(OrderKind::IntStd, {}, {}); }
Ordering Ordering::int_rev() { return Ordering(OrderKind::IntRev, {}, {}); }
Ordering Ordering::klein_left() {
  return Ordering(OrderKind::KleinLeft, {}, {});
}

Ordering Ordering::lex(std::vector<Ordering> children) {
  return Ordering(OrderKind::Lex, std::move(children), {});
}

Ordering Ordering::vec_lex(std::vector<std::vector<BigInt>> rows) {
  return Ordering(OrderKind::VecLex, {}, std::move(rows));
}

Ordering Ordering::bergman(std::vector<Ordering> children) {
  return Ordering(OrderKind::Bergman, std::move(children), {});
}

Ordering Ordering::product_pullback(Ordering product_order) {
  return Ordering(OrderKind::ProductPullback, {std::move(product_order)}, {});
}

Ordering Ordering::standard(const Group& g) {
  switch (g.kind()) {
    case GroupKind::Integers:
      return int_std();
    case GroupKind::KleinBottle:
      return klein_left();
    case GroupKind::DirectProduct:
    case GroupKind::FreeProduct: {
      std::vector<Ordering> children;
      children.reserve(g.arity());
      for (const auto& c : g.children()) children.push_back(standard(c));
      return g.is_direct_product() ? lex(std::move(children))
                                   : bergman(std::move(children));
    }
  }
  throw ShapeMismatchError("unknown group kind");
}

const Ordering& Ordering::child(std::size_t i) const {
  if (i >= children_.size())
    throw ShapeMismatchError("ordering child index out of range");
  return children_[i];
}

bool Ordering::is_leaf() const {
  switch (kind_) {
    case OrderKind::IntStd:
    case OrderKind::IntRev:
    case OrderKind::KleinLeft:
    case OrderKind::VecLex:
      return true;
    default:
      return false;
  }
}

bool Ordering::operator==(const Ordering& other) const {
  return kind_ == other.kind_ && children_ == other.children_ &&
         rows_ == other.rows_;
}

// ---------------------------------------------------------------------------
// Certificates

std::string Certificate::key(const LeafPath& leaf, const Element& lhs,
                             const Element& rhs) {
  std::string k;
  for (int i : leaf) {
    k += std::to_string(i);
    k += ',';
  }
  k += '|';
  k += encode(lhs);
  k += '|';
  k += encode(rhs);
  return k;
}

Certificate Certificate::from_entries(std::vector<CertificateEntry> entries) {
  Certificate c;
  for (auto& e : entries) c.add(e.leaf, e.lhs, e.rhs, e.verdict);
  return c;
}

void Certificate::add(const LeafPath& leaf, const Element& lhs,
                      const Element& rhs, Verdict verdict) {
  std::string k = key(leaf, lhs, rhs);
  auto it = index_.find(k);
  if (it != index_.end()) {
    if (entries_[it->second].verdict != verdict)
      throw InternalError("conflicting certificate entries for one query");
    return;
  }
  index_.emplace(std::move(k), entries_.size());
  entries_.push_back({leaf, lhs, rhs, verdict});
}

std::optional<Verdict> Certificate::find(const LeafPath& leaf,
                                         const Element& lhs,
                                         const Element& rhs) const {
  auto it = index_.find(key(leaf, lhs, rhs));
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].verdict;
}

CompareContext CompareContext::recording(Certificate& out) {
  CompareContext ctx;
  ctx.record_ = &out;
  return ctx;
}

CompareContext CompareContext::replaying(const Certificate& source) {
  CompareContext ctx;
  ctx.source_ = &source;
  return ctx;
}

std::optional<Verdict> CompareContext::replay_answer(const LeafPath& leaf,
                                                     const Element& lhs,
                                                     const Element& rhs) {
  if (!source_) return std::nullopt;
  auto v = source_->find(leaf, lhs, rhs);
  if (!v)
    throw MissingAnswerError(
        "certificate does not answer a query the evaluation needs");
  ++replayed_;
  return v;
}

void CompareContext::record(const LeafPath& leaf, const Element& lhs,
                            const Element& rhs, Verdict verdict) {
  if (record_) record_->add(leaf, lhs, rhs, verdict);
}

// ---------------------------------------------------------------------------
// Evaluator nodes

namespace detail {

namespace {

class LeafNode : public OrderNode {
 public:
  explicit LeafNode(LeafPath path) : path_(std::move(path)) {}

  Verdict compare(const Element& a, const Element& b,
                  CompareContext* ctx) const final {
    if (ctx) {
      if (auto replayed = ctx->replay_answer(path_, a, b)) return *replayed;
      Verdict v = answer(a, b);
      ctx->record(path_, a, b, v);
      return v;
    }
    return answer(a, b);
  }

 protected:
  virtual Verdict answer(const Element& a, const Element& b) const = 0;

 private:
  LeafPath path_;
};

class IntStdNode final : public LeafNode {
 public:
  using LeafNode::LeafNode;

 protected:
  Verdict answer(const Element& a, const Element& b) const override {
    return verdict_of(a.int_value(), b.int_value());
  }
};

class IntRevNode final : public LeafNode {
 public:
  using LeafNode::LeafNode;

 protected:
  Verdict answer(const Element& a, const Element& b) const override {
    return flip(verdict_of(a.int_value(), b.int_value()));
  }
};

class KleinLeftNode final : public LeafNode {
 public:
  KleinLeftNode(LeafPath path)
      : LeafNode(std::move(path)), group_(Group::klein_bottle()) {}

 protected:
  Verdict answer(const Element& a, const Element& b) const override {
    // a < b iff a^-1 b lies in the cone {y^m x^n : n > 0, or n = 0, m > 0}.
    Element d = multiply(group_, inverse(group_, a), b);
    const auto& k = d.klein_part();
    if (k.x_exp != 0)
      return k.x_exp > 0 ? Verdict::Less : Verdict::Greater;
    if (k.y_exp != 0)
      return k.y_exp > 0 ? Verdict::Less : Verdict::Greater;
    return Verdict::Equal;
  }

 private:
  Group group_;
};

class VecLexNode final : public LeafNode {
 public:
  VecLexNode(LeafPath path, std::vector<std::vector<BigInt>> rows)
      : LeafNode(std::move(path)), rows_(std::move(rows)) {}

 protected:
  Verdict answer(const Element& a, const Element& b) const override {
    for (const auto& row : rows_) {
      Verdict v = verdict_of(dot(row, a), dot(row, b));
      if (v != Verdict::Equal) return v;
    }
    return Verdict::Equal;
  }

 private:
  static BigInt dot(const std::vector<BigInt>& row, const Element& t) {
    const auto& comps = t.components();
    if (comps.size() != row.size())
      throw ShapeMismatchError("tuple arity does not match VecLex rows");
    BigInt sum = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
      sum += row[i] * comps[i].int_value();
    return sum;
  }

  std::vector<std::vector<BigInt>> rows_;
};

class LexNode final : public OrderNode {
 public:
  explicit LexNode(std::vector<NodePtr> children)
      : children_(std::move(children)) {}

  Verdict compare(const Element& a, const Element& b,
                  CompareContext* ctx) const override {
    const auto& ca = a.components();
    const auto& cb = b.components();
    if (ca.size() != children_.size() || cb.size() != children_.size())
      throw ShapeMismatchError("tuple arity does not match the product");
    for (std::size_t i = 0; i < children_.size(); ++i) {
      Verdict v = children_[i]->compare(ca[i], cb[i], ctx);
      if (v != Verdict::Equal) return v;
    }
    return Verdict::Equal;
  }

 private:
  std::vector<NodePtr> children_;
};

// x < y iff rho(y) - rho(x) is a positive matrix under the product order.
class BergmanNode final : public OrderNode {
 public:
  BergmanNode(Group fp2, NodePtr product_order)
      : group_(std::move(fp2)), product_order_(std::move(product_order)) {}

  Verdict compare(const Element& a, const Element& b,
                  CompareContext* ctx) const override {
    if (a == b) return Verdict::Equal;
    PolyMatrix2 diff = mat_sub(rho(group_, b), rho(group_, a));
    Sign s = mat_sign(
        [this, ctx](const Element& x, const Element& y) {
          return product_order_->compare(x, y, ctx);
        },
        diff);
    switch (s) {
      case Sign::Positive:
        return Verdict::Less;
      case Sign::Negative:
        return Verdict::Greater;
      default:
        throw InternalError(
            "distinct reduced words with equal matrix images");
    }
  }

 private:
  Group group_;
  NodePtr product_order_;
};

// Flat n-ary free product compared through the left-associated nesting.
class RegroupNode final : public OrderNode {
 public:
  RegroupNode(Group flat, Bracketing bracketing, NodePtr nested)
      : flat_(std::move(flat)),
        bracketing_(std::move(bracketing)),
        nested_(std::move(nested)) {}

  Verdict compare(const Element& a, const Element& b,
                  CompareContext* ctx) const override {
    return nested_->compare(to_bracketed(flat_, bracketing_, a),
                            to_bracketed(flat_, bracketing_, b), ctx);
  }

 private:
  Group flat_;
  Bracketing bracketing_;
  NodePtr nested_;
};

LeafPath extend(const LeafPath& path, int i) {
  LeafPath p = path;
  p.push_back(i);
  return p;
}

// Exact rank over Q by fraction-free elimination.
int rational_rank(std::vector<std::vector<BigInt>> m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t j = r + 1; j < rows; ++j) {
      if (m[j][c] == 0) continue;
      BigInt lead = m[r][c];
      BigInt factor = m[j][c];
      for (std::size_t cc = 0; cc < cols; ++cc)
        m[j][cc] = m[j][cc] * lead - m[r][cc] * factor;
    }
    ++r;
    ++rank;
  }
  return rank;
}

NodePtr compile_bergman(const Ordering& o, const Group& g,
                        const LeafPath& path) {
  if (!g.is_free_product())
    throw ShapeMismatchError("bergman ordering needs a free product");
  if (o.children().size() != g.arity())
    throw ShapeMismatchError(
        "bergman ordering arity does not match the free product");
  const std::size_t k = g.arity();

  Group acc_group = g.child(0);
  NodePtr acc = compile(o.child(0), acc_group, extend(path, 0));
  for (std::size_t i = 1; i < k; ++i) {
    NodePtr factor = compile(o.child(i), g.child(i), extend(path, int(i)));
    std::vector<NodePtr> lex_children{acc, factor};
    NodePtr product = std::make_shared<LexNode>(std::move(lex_children));
    Group fp2 = Group::free_product({acc_group, g.child(i)});
    acc = std::make_shared<BergmanNode>(fp2, std::move(product));
    acc_group = std::move(fp2);
  }
  if (k == 2) return acc;
  return std::make_shared<RegroupNode>(
      g, Bracketing::left_assoc(static_cast<int>(k)), std::move(acc));
}

}  // namespace

NodePtr compile(const Ordering& o, const Group& g, const LeafPath& path) {
  switch (o.kind()) {
    case OrderKind::IntStd:
      if (!g.is_integers())
        throw ShapeMismatchError("std ordering needs the integers");
      return std::make_shared<IntStdNode>(path);
    case OrderKind::IntRev:
      if (!g.is_integers())
        throw ShapeMismatchError("rev ordering needs the integers");
      return std::make_shared<IntRevNode>(path);
    case OrderKind::KleinLeft:
      if (!g.is_klein_bottle())
        throw ShapeMismatchError("kleft ordering needs the Klein bottle");
      return std::make_shared<KleinLeftNode>(path);
    case OrderKind::Lex: {
      if (!g.is_direct_product())
        throw ShapeMismatchError("lex ordering needs a direct product");
      if (o.children().size() != g.arity())
        throw ShapeMismatchError(
            "lex ordering arity does not match the direct product");
      std::vector<NodePtr> children;
      children.reserve(g.arity());
      for (std::size_t i = 0; i < g.arity(); ++i)
        children.push_back(compile(o.child(i), g.child(i),
                                   extend(path, int(i))));
      return std::make_shared<LexNode>(std::move(children));
    }
    case OrderKind::VecLex: {
      if (!g.is_direct_product())
        throw ShapeMismatchError("veclex ordering needs a direct product");
      for (const auto& c : g.children())
        if (!c.is_integers())
          throw ShapeMismatchError(
              "veclex ordering needs a direct product of integers");
      for (const auto& row : o.rows())
        if (row.size() != g.arity())
          throw ShapeMismatchError("veclex row width does not match");
      if (rational_rank(o.rows()) != static_cast<int>(g.arity()))
        throw DegenerateVecLexError(
            "veclex rows do not span; the order would be partial");
      return std::make_shared<VecLexNode>(path, o.rows());
    }
    case OrderKind::Bergman:
      return compile_bergman(o, g, path);
    case OrderKind::ProductPullback: {
      if (!g.is_free_product() || g.arity() != 2)
        throw ShapeMismatchError(
            "pullback ordering needs a two-factor free product");
      Group product = Group::direct_product(g.children());
      NodePtr inner = compile(o.child(0), product, extend(path, 0));
      return std::make_shared<BergmanNode>(g, std::move(inner));
    }
  }
  throw ShapeMismatchError("unknown ordering kind");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public entry points

void validate(const Ordering& o, const Group& g) {
  detail::compile(o, g, {});
}

bool is_bi_invariant(const Ordering& o) {
  switch (o.kind()) {
    case OrderKind::IntStd:
    case OrderKind::IntRev:
    case OrderKind::VecLex:
      return true;
    case OrderKind::KleinLeft:
      return false;
    default:
      for (const auto& c : o.children())
        if (!is_bi_invariant(c)) return false;
      return true;
  }
}

CompiledOrder::CompiledOrder(Ordering ordering, Group group)
    : ordering_(std::move(ordering)),
      group_(std::move(group)),
      bi_invariant_(ordfree::is_bi_invariant(ordering_)),
      root_(detail::compile(ordering_, group_, {})) {}

Verdict CompiledOrder::compare(const Element& lhs, const Element& rhs,
                               CompareContext* ctx) const {
  return root_->compare(lhs, rhs, ctx);
}

Verdict compare(const Ordering& o, const Group& g, const Element& lhs,
                const Element& rhs, CompareContext* ctx) {
  return CompiledOrder(o, g).compare(lhs, rhs, ctx);
}

Verdict replay(const Certificate& cert, const Ordering& o, const Group& g,
               const Element& lhs, const Element& rhs) {
  CompareContext ctx = CompareContext::replaying(cert);
  return CompiledOrder(o, g).compare(lhs, rhs, &ctx);
}

LeafInfo leaf_at(const Ordering& o, const Group& g, const LeafPath& path) {
  const Ordering* cur = &o;
  Group cur_group = g;
  int offset = 0;
  for (int raw : path) {
    if (raw < 0) throw ShapeMismatchError("negative leaf path index");
    auto idx = static_cast<std::size_t>(raw);
    switch (cur->kind()) {
      case OrderKind::Lex:
      case OrderKind::Bergman: {
        offset += cur_group.generator_offset(idx);
        cur_group = cur_group.child(idx);
        cur = &cur->child(idx);
        break;
      }
      case OrderKind::ProductPullback: {
        if (idx != 0)
          throw ShapeMismatchError("pullback has a single child at index 0");
        cur_group = Group::direct_product(cur_group.children());
        cur = &cur->child(0);
        break;
      }
      default:
        throw ShapeMismatchError("leaf path descends below a base ordering");
    }
  }
  if (!cur->is_leaf())
    throw ShapeMismatchError("leaf path stops at a composite ordering");
  return {*cur, cur_group, offset};
}

bool certificate_is_sound(const Certificate& cert, const Ordering& o,
                          const Group& g) {
  for (const auto& entry : cert.entries()) {
    LeafInfo info = leaf_at(o, g, entry.leaf);
    if (compare(info.ordering, info.group, entry.lhs, entry.rhs) !=
        entry.verdict)
      return false;
  }
  return true;
}

}  // namespace ordfree
