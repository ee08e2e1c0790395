#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ordfree/bigint.hpp"
#include "ordfree/errors.hpp"

namespace ordfree {

enum class GroupKind { Integers, KleinBottle, DirectProduct, FreeProduct };

/// Shape of a group built from Z and the Klein bottle group
/// <x,y | xyx^-1 = y^-1> by finite direct and free products.
///
/// Leaf generators are numbered globally left to right. Integers
/// contributes one generator; KleinBottle contributes two, the y-type
/// generator first and the x-type generator second.
class Group {
 public:
  static Group integers();
  static Group klein_bottle();
  static Group direct_product(std::vector<Group> children);
  static Group free_product(std::vector<Group> children);

  GroupKind kind() const { return kind_; }
  bool is_integers() const { return kind_ == GroupKind::Integers; }
  bool is_klein_bottle() const { return kind_ == GroupKind::KleinBottle; }
  bool is_direct_product() const { return kind_ == GroupKind::DirectProduct; }
  bool is_free_product() const { return kind_ == GroupKind::FreeProduct; }

  const std::vector<Group>& children() const { return children_; }
  const Group& child(std::size_t i) const;
  std::size_t arity() const { return children_.size(); }

  int generator_count() const { return generators_; }
  /// Global index of the first generator belonging to child `i`.
  int generator_offset(std::size_t i) const;

  bool operator==(const Group& other) const;

 private:
  Group(GroupKind kind, std::vector<Group> children);

  GroupKind kind_;
  std::vector<Group> children_;
  int generators_ = 0;
};

struct Syllable;

/// Normal-form element of a group described by a Group shape.
///
/// The variant mirrors the shape: Int for Integers, Klein for KleinBottle
/// (the pair (m, n) meaning y^m x^n), Tuple for DirectProduct, Word for
/// FreeProduct. Word syllables alternate factors and never carry an
/// identity; structural equality of normal forms is group equality.
class Element {
 public:
  struct IntPart {
    BigInt value;
  };
  struct KleinPart {
    BigInt y_exp;
    BigInt x_exp;
  };
  struct TuplePart {
    std::vector<Element> components;
  };
  struct WordPart {
    std::vector<Syllable> syllables;
  };

  static Element integer(BigInt value);
  static Element klein(BigInt y_exp, BigInt x_exp);
  static Element tuple(std::vector<Element> components);
  static Element word(std::vector<Syllable> syllables);

  bool is_int() const { return std::holds_alternative<IntPart>(value_); }
  bool is_klein() const { return std::holds_alternative<KleinPart>(value_); }
  bool is_tuple() const { return std::holds_alternative<TuplePart>(value_); }
  bool is_word() const { return std::holds_alternative<WordPart>(value_); }

  // Accessors throw ShapeMismatchError when the variant does not match.
  const BigInt& int_value() const;
  const KleinPart& klein_part() const;
  const std::vector<Element>& components() const;
  const std::vector<Syllable>& syllables() const;

  bool operator==(const Element& other) const;

 private:
  explicit Element(std::variant<IntPart, KleinPart, TuplePart, WordPart> v)
      : value_(std::move(v)) {}

  std::variant<IntPart, KleinPart, TuplePart, WordPart> value_;
};

/// One factor block of a reduced word: a nonidentity element of child
/// `factor` of the ambient free product.
struct Syllable {
  std::size_t factor;
  Element element;

  bool operator==(const Syllable& other) const;
};

Element identity(const Group& g);
bool is_identity(const Element& e);

/// Exact product in normal form; Word boundaries merge and cancel.
Element multiply(const Group& g, const Element& u, const Element& v);
Element inverse(const Group& g, const Element& u);
Element power(const Group& g, const Element& u, const BigInt& exponent);

/// Natural inclusion of factor `i` into the free product `g`.
Element inject(const Group& g, std::size_t factor, const Element& e);

/// Element generated by global leaf generator `index` (0-based) raised to
/// `exponent`, embedded into `g`.
Element generator(const Group& g, int index, const BigInt& exponent = 1);

/// Direct product of the same children; the codomain of alpha.
Group alpha_target(const Group& free_product);

/// Canonical map onto the direct product: the i-th output component is the
/// ordered product of the word's factor-i syllables.
Element alpha(const Group& free_product, const Element& word);

/// Canonical byte encoding of a normal form. Injective; byte order of
/// encodings provides the deterministic scan order used by ring maps.
std::string encode(const Element& e);
Element decode(const std::string& bytes);

}  // namespace ordfree
