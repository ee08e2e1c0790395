#pragma once

#include <map>
#include <string>

#include "ordfree/group.hpp"
#include "ordfree/order.hpp"
#include "ordfree/verdict.hpp"

namespace ordfree {

/// Element of the integral group ring Z(carrier): a finite formal sum of
/// group elements with nonzero integer coefficients. Terms are held in a
/// map keyed by the canonical byte encoding of the group element, so
/// iteration order (and hence every leading-term scan) is deterministic.
class RingElement {
 public:
  struct Term {
    Element key;
    BigInt coeff;
  };
  using TermMap = std::map<std::string, Term>;

  static RingElement zero(Group carrier);
  static RingElement one(Group carrier);
  static RingElement monomial(Group carrier, Element key, BigInt coeff);

  const Group& carrier() const { return carrier_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  BigInt coefficient(const Element& key) const;

  /// Adds coeff * key, dropping the term if the sum cancels.
  void accumulate(const Element& key, const BigInt& coeff);

  bool operator==(const RingElement& other) const;

 private:
  explicit RingElement(Group carrier) : carrier_(std::move(carrier)) {}

  Group carrier_;
  TermMap terms_;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);

struct LeadingTerm {
  Element key;
  BigInt coeff;
};

/// The order-maximal key of a nonzero element and its coefficient. Scans
/// terms in encoding order; every comparison goes through `cmp`.
LeadingTerm leading_term(const ElementComparator& cmp, const RingElement& a);
LeadingTerm leading_term(const Ordering& o, const RingElement& a,
                         CompareContext* ctx = nullptr);

/// Zero for the zero element, otherwise the sign of the leading
/// coefficient. This is what makes Z(carrier) an ordered ring.
Sign ring_sign(const ElementComparator& cmp, const RingElement& a);
Sign ring_sign(const Ordering& o, const RingElement& a,
               CompareContext* ctx = nullptr);

}  // namespace ordfree
