#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ordfree/bracketing.hpp"
#include "ordfree/order.hpp"

namespace ordfree {

/// The free-product ordering of a two-factor free product given orderings
/// of the factors: u < v iff rho(v) - rho(u) is a positive matrix over the
/// lexicographically ordered group ring of the direct product.
Verdict compare_bergman(const Ordering& o0, const Ordering& o1,
                        const Group& fp2, const Element& u, const Element& v,
                        CompareContext* ctx = nullptr);

/// Same matrix comparison, but driven by an arbitrary validated ordering
/// of the direct product of the two factors.
Verdict compare_with_product_order(const Ordering& product_order,
                                   const Group& fp2, const Element& u,
                                   const Element& v,
                                   CompareContext* ctx = nullptr);

/// Ordering descriptor for a k-factor free product: the left-associated
/// iterate of the two-factor construction. Comparisons on the flat group
/// go through the canonical regrouping isomorphism.
Ordering nary_bergman(std::vector<Ordering> factor_orders, const Group& fp);

/// Factor-preserving homomorphism between groups of the same shape family.
/// Sources without free products are determined by leaf generator images;
/// free-product sources carry one homomorphism per factor and map factor i
/// into factor i of the target. Klein bottle sources are checked against
/// the defining relation at construction.
class Hom {
 public:
  static Hom identity(const Group& g);
  /// Z -> target, generator |-> image.
  static Hom from_integers(Group target, Element generator_image);
  /// Klein bottle -> target; images must satisfy x y x^-1 y = 1.
  static Hom from_klein(Group target, Element y_image, Element x_image);
  /// Componentwise map of direct products.
  static Hom direct_product(std::vector<Hom> components);
  /// phi_0 * phi_1 * ... : factor i maps into factor i.
  static Hom free_product(std::vector<Hom> factors);

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }

  friend Element apply_hom(const Hom& phi, const Element& w);

 private:
  Hom(Group source, Group target);

  Group source_;
  Group target_;
  std::vector<Element> leaf_images_;  // leaf sources
  std::vector<Hom> parts_;            // product sources
};

Element apply_hom(const Hom& phi, const Element& w);

/// True iff alpha(w) is the identity of the direct product; the kernel is
/// the free subgroup generated by the commutators of factor elements.
bool kernel_membership(const Group& fp, const Element& w);

struct ConvexityViolation {
  Element below;
  Element middle;
  Element above;
};

/// Checks convexity of the kernel of alpha over a sample: whenever two
/// kernel elements sandwich a sample element, that element must lie in the
/// kernel too.
std::optional<ConvexityViolation> convexity_probe(
    const CompiledOrder& order, std::span<const Element> samples);

/// Searches for an element ordered strictly oppositely to the identity by
/// the two orderings: factor injections first (smallest exponents first),
/// then short words breadth-first. Returns nullopt when the bounded search
/// is exhausted.
std::optional<Element> find_distinguishing_witness(const Ordering& a,
                                                   const Ordering& b,
                                                   const Group& g,
                                                   int max_syllables = 4,
                                                   int exponent_bound = 2);

}  // namespace ordfree
