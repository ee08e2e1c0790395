#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordfree/group.hpp"
#include "ordfree/verdict.hpp"

namespace ordfree {

enum class OrderKind {
  IntStd,           // usual order of Z
  IntRev,           // reversed order of Z
  KleinLeft,        // left-only cone on the Klein bottle group
  Lex,              // lexicographic order of a direct product
  VecLex,           // row-vector lexicographic order on Z^n
  Bergman,          // matrix-embedding order of a free product
  ProductPullback,  // free-product order driven by an arbitrary order on
                    // the direct product of the two factors
};

/// Recursive ordering recipe whose tree matches a Group shape. Leaves
/// (IntStd, IntRev, KleinLeft, VecLex) answer comparisons directly and are
/// the units certificates record; composite nodes combine their children.
class Ordering {
 public:
  static Ordering int_std();
  static Ordering int_rev();
  static Ordering klein_left();
  static Ordering lex(std::vector<Ordering> children);
  static Ordering vec_lex(std::vector<std::vector<BigInt>> rows);
  static Ordering bergman(std::vector<Ordering> children);
  static Ordering product_pullback(Ordering product_order);

  /// Default recipe for a shape: std on Z leaves, kleft on Klein bottles,
  /// lex on direct products, bergman on free products.
  static Ordering standard(const Group& g);

  OrderKind kind() const { return kind_; }
  const std::vector<Ordering>& children() const { return children_; }
  const Ordering& child(std::size_t i) const;
  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }
  bool is_leaf() const;

  bool operator==(const Ordering& other) const;

 private:
  Ordering(OrderKind kind, std::vector<Ordering> children,
           std::vector<std::vector<BigInt>> rows);

  OrderKind kind_;
  std::vector<Ordering> children_;
  std::vector<std::vector<BigInt>> rows_;  // VecLex only
};

/// Position of a base (leaf) ordering inside an ordering tree: the list of
/// child indices from the root. A ProductPullback node has one child, its
/// product order, at index 0.
using LeafPath = std::vector<int>;

struct CertificateEntry {
  LeafPath leaf;
  Element lhs;
  Element rhs;
  Verdict verdict;
};

/// Ordered log of the base-ordering comparisons one evaluation consumed.
/// Entries are deduplicated by (leaf, lhs, rhs); order of first use is
/// preserved.
class Certificate {
 public:
  Certificate() = default;
  static Certificate from_entries(std::vector<CertificateEntry> entries);

  void add(const LeafPath& leaf, const Element& lhs, const Element& rhs,
           Verdict verdict);
  std::optional<Verdict> find(const LeafPath& leaf, const Element& lhs,
                              const Element& rhs) const;

  const std::vector<CertificateEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  static std::string key(const LeafPath& leaf, const Element& lhs,
                         const Element& rhs);

  std::vector<CertificateEntry> entries_;
  std::map<std::string, std::size_t> index_;
};

/// Side channel for one comparison. In recording mode every base-ordering
/// query is appended to a certificate; in replay mode queries are answered
/// from a certificate and never reach the base orderings (a missing answer
/// throws MissingAnswerError). Single-owner per comparison.
class CompareContext {
 public:
  static CompareContext recording(Certificate& out);
  static CompareContext replaying(const Certificate& source);

  bool is_replay() const { return source_ != nullptr; }
  /// Number of replay queries answered from the certificate.
  std::size_t replayed_queries() const { return replayed_; }

  /// Called by leaf orderings. In replay mode returns the stored verdict or
  /// throws; in recording mode returns nullopt and expects record() next.
  std::optional<Verdict> replay_answer(const LeafPath& leaf,
                                       const Element& lhs, const Element& rhs);
  void record(const LeafPath& leaf, const Element& lhs, const Element& rhs,
              Verdict verdict);

 private:
  CompareContext() = default;
  Certificate* record_ = nullptr;
  const Certificate* source_ = nullptr;
  std::size_t replayed_ = 0;
};

/// Checks that the ordering tree matches the group shape, and that VecLex
/// rows span. Throws ShapeMismatchError or DegenerateVecLexError.
void validate(const Ordering& o, const Group& g);

/// True when the order is invariant under multiplication on both sides;
/// false when only left-invariant (any KleinLeft leaf poisons the tree).
bool is_bi_invariant(const Ordering& o);

/// Strict total order comparison. Equal iff the normal forms coincide.
/// Base-ordering queries flow through `ctx` when provided.
Verdict compare(const Ordering& o, const Group& g, const Element& lhs,
                const Element& rhs, CompareContext* ctx = nullptr);

/// Recomputes compare(o, g, lhs, rhs) answering every base-ordering query
/// from the certificate alone. Throws MissingAnswerError if the certificate
/// lacks an answer the evaluation needs.
Verdict replay(const Certificate& cert, const Ordering& o, const Group& g,
               const Element& lhs, const Element& rhs);

namespace detail {
class OrderNode;
}

/// Validated ordering bound to its group, reusable across many compares.
class CompiledOrder {
 public:
  CompiledOrder(Ordering ordering, Group group);

  Verdict compare(const Element& lhs, const Element& rhs,
                  CompareContext* ctx = nullptr) const;
  bool bi_invariant() const { return bi_invariant_; }
  const Ordering& ordering() const { return ordering_; }
  const Group& group() const { return group_; }

 private:
  Ordering ordering_;
  Group group_;
  bool bi_invariant_;
  std::shared_ptr<const detail::OrderNode> root_;
};

/// The base ordering a certificate path points at, together with the group
/// it compares and the global index of that group's first generator.
struct LeafInfo {
  Ordering ordering;
  Group group;
  int generator_offset;
};

LeafInfo leaf_at(const Ordering& o, const Group& g, const LeafPath& path);

/// True when every entry's verdict matches a direct comparison in the base
/// ordering the entry's path points at.
bool certificate_is_sound(const Certificate& cert, const Ordering& o,
                          const Group& g);

}  // namespace ordfree
