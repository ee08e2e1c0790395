#include "ordfree/ring.hpp"

#include <utility>

namespace ordfree {

RingElement RingElement::zero(Group carrier) {
  return RingElement(std::move(carrier));
}

RingElement RingElement::one(Group carrier) {
  Element id = identity(carrier);
  return monomial(std::move(carrier), std::move(id), 1);
}

RingElement RingElement::monomial(Group carrier, Element key, BigInt coeff) {
  RingElement r(std::move(carrier));
  r.accumulate(key, coeff);
  return r;
}

BigInt RingElement::coefficient(const Element& key) const {
  auto it = terms_.find(encode(key));
  return it == terms_.end() ? BigInt(0) : it->second.coeff;
}

void RingElement::accumulate(const Element& key, const BigInt& coeff) {
  if (coeff == 0) return;
  std::string k = encode(key);
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), Term{key, coeff});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff == 0) terms_.erase(it);
}

bool RingElement::operator==(const RingElement& other) const {
  if (!(carrier_ == other.carrier_) || terms_.size() != other.terms_.size())
    return false;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first != b->first || a->second.coeff != b->second.coeff)
      return false;
  }
  return true;
}

namespace {

void require_same_carrier(const RingElement& a, const RingElement& b) {
  if (!(a.carrier() == b.carrier()))
    throw ShapeMismatchError("ring elements have different carriers");
}

}  // namespace

RingElement ring_add(const RingElement& a, const RingElement& b) {
  require_same_carrier(a, b);
  RingElement out = a;
  for (const auto& [key, term] : b.terms()) out.accumulate(term.key, term.coeff);
  return out;
}

RingElement ring_neg(const RingElement& a) {
  RingElement out = RingElement::zero(a.carrier());
  for (const auto& [key, term] : a.terms()) out.accumulate(term.key, -term.coeff);
  return out;
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
  return ring_add(a, ring_neg(b));
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  require_same_carrier(a, b);
  RingElement out = RingElement::zero(a.carrier());
  for (const auto& [ka, ta] : a.terms()) {
    for (const auto& [kb, tb] : b.terms()) {
      out.accumulate(multiply(a.carrier(), ta.key, tb.key),
                     ta.coeff * tb.coeff);
    }
  }
  return out;
}

LeadingTerm leading_term(const ElementComparator& cmp, const RingElement& a) {
  if (a.is_zero()) throw ZeroElementError("leading term of the zero element");
  auto it = a.terms().begin();
  const RingElement::Term* best = &it->second;
  for (++it; it != a.terms().end(); ++it) {
    if (cmp(it->second.key, best->key) == Verdict::Greater)
      best = &it->second;
  }
  return {best->key, best->coeff};
}

Sign ring_sign(const ElementComparator& cmp, const RingElement& a) {
  if (a.is_zero()) return Sign::Zero;
  return sign_of(leading_term(cmp, a).coeff);
}

namespace {

ElementComparator comparator_for(const Ordering& o, const Group& carrier,
                                 CompareContext* ctx) {
  CompiledOrder compiled(o, carrier);
  return [compiled = std::move(compiled), ctx](const Element& x,
                                               const Element& y) {
    return compiled.compare(x, y, ctx);
  };
}

}  // namespace

LeadingTerm leading_term(const Ordering& o, const RingElement& a,
                         CompareContext* ctx) {
  return leading_term(comparator_for(o, a.carrier(), ctx), a);
}

Sign ring_sign(const Ordering& o, const RingElement& a, CompareContext* ctx) {
  return ring_sign(comparator_for(o, a.carrier(), ctx), a);
}

}  // namespace ordfree
