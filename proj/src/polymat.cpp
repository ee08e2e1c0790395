#include "ordfree/polymat.hpp"

#include <algorithm>
#include <utility>

#include "ordfree/enumerate.hpp"

namespace ordfree {

Poly::Poly(Group carrier)
    : carrier_(std::move(carrier)), zero_(RingElement::zero(carrier_)) {}

Poly Poly::constant(RingElement c) {
  Poly p(c.carrier());
  if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
  return p;
}

Poly Poly::from_coeffs(Group carrier, std::vector<RingElement> coeffs) {
  Poly p(std::move(carrier));
  for (const auto& c : coeffs) {
    if (!(c.carrier() == p.carrier_))
      throw ShapeMismatchError("polynomial coefficient carrier mismatch");
  }
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

const RingElement& Poly::coeff(int d) const {
  if (d >= 0 && d < static_cast<int>(coeffs_.size())) return coeffs_[d];
  return zero_;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Poly::operator==(const Poly& other) const {
  return carrier_ == other.carrier_ && coeffs_ == other.coeffs_;
}

namespace {

void require_same_carrier(const Poly& a, const Poly& b) {
  if (!(a.carrier() == b.carrier()))
    throw ShapeMismatchError("polynomials have different carriers");
}

}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
  require_same_carrier(a, b);
  std::vector<RingElement> coeffs;
  int deg = std::max(a.degree(), b.degree());
  coeffs.reserve(deg + 1);
  for (int d = 0; d <= deg; ++d)
    coeffs.push_back(ring_add(a.coeff(d), b.coeff(d)));
  return Poly::from_coeffs(a.carrier(), std::move(coeffs));
}

Poly poly_neg(const Poly& a) {
  std::vector<RingElement> coeffs;
  coeffs.reserve(a.degree() + 1);
  for (int d = 0; d <= a.degree(); ++d) coeffs.push_back(ring_neg(a.coeff(d)));
  return Poly::from_coeffs(a.carrier(), std::move(coeffs));
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul(const Poly& a, const Poly& b) {
  require_same_carrier(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.carrier());
  std::vector<RingElement> coeffs(
      static_cast<std::size_t>(a.degree() + b.degree() + 1),
      RingElement::zero(a.carrier()));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j)
      coeffs[i + j] = ring_add(coeffs[i + j],
                               ring_mul(a.coeff(i), b.coeff(j)));
  return Poly::from_coeffs(a.carrier(), std::move(coeffs));
}

PolyMatrix2::PolyMatrix2(Poly e11, Poly e12, Poly e21, Poly e22)
    : e11_(std::move(e11)),
      e12_(std::move(e12)),
      e21_(std::move(e21)),
      e22_(std::move(e22)) {
  if (!(e11_.carrier() == e12_.carrier()) ||
      !(e11_.carrier() == e21_.carrier()) ||
      !(e11_.carrier() == e22_.carrier()))
    throw ShapeMismatchError("matrix entries have different carriers");
}

PolyMatrix2 PolyMatrix2::identity(Group carrier) {
  Poly one = Poly::constant(RingElement::one(carrier));
  Poly zero{carrier};
  return PolyMatrix2(one, zero, zero, one);
}

PolyMatrix2 PolyMatrix2::zero(Group carrier) {
  Poly zero{carrier};
  return PolyMatrix2(zero, zero, zero, zero);
}

int PolyMatrix2::degree() const {
  return std::max(std::max(e11_.degree(), e12_.degree()),
                  std::max(e21_.degree(), e22_.degree()));
}

bool PolyMatrix2::operator==(const PolyMatrix2& other) const {
  return e11_ == other.e11_ && e12_ == other.e12_ && e21_ == other.e21_ &&
         e22_ == other.e22_;
}

PolyMatrix2 mat_mul(const PolyMatrix2& a, const PolyMatrix2& b) {
  return PolyMatrix2(
      poly_add(poly_mul(a.e11(), b.e11()), poly_mul(a.e12(), b.e21())),
      poly_add(poly_mul(a.e11(), b.e12()), poly_mul(a.e12(), b.e22())),
      poly_add(poly_mul(a.e21(), b.e11()), poly_mul(a.e22(), b.e21())),
      poly_add(poly_mul(a.e21(), b.e12()), poly_mul(a.e22(), b.e22())));
}

PolyMatrix2 mat_add(const PolyMatrix2& a, const PolyMatrix2& b) {
  return PolyMatrix2(poly_add(a.e11(), b.e11()), poly_add(a.e12(), b.e12()),
                     poly_add(a.e21(), b.e21()), poly_add(a.e22(), b.e22()));
}

PolyMatrix2 mat_sub(const PolyMatrix2& a, const PolyMatrix2& b) {
  return PolyMatrix2(poly_sub(a.e11(), b.e11()), poly_sub(a.e12(), b.e12()),
                     poly_sub(a.e21(), b.e21()), poly_sub(a.e22(), b.e22()));
}

PolyMatrix2 mat_neg(const PolyMatrix2& a) {
  return PolyMatrix2(poly_neg(a.e11()), poly_neg(a.e12()), poly_neg(a.e21()),
                     poly_neg(a.e22()));
}

Group rho_carrier(const Group& fp2) {
  if (!fp2.is_free_product() || fp2.arity() != 2)
    throw ShapeMismatchError("the embedding needs a two-factor free product");
  return Group::direct_product(fp2.children());
}

namespace {

// The factor element as a ring monomial: f embeds as the key (f, 1) and
// g as (1, g).
Element embed_key(const Group& carrier, std::size_t factor, const Element& e) {
  std::vector<Element> comps;
  comps.reserve(2);
  for (std::size_t i = 0; i < 2; ++i)
    comps.push_back(i == factor ? e : identity(carrier.child(i)));
  return Element::tuple(std::move(comps));
}

}  // namespace

PolyMatrix2 rho_factor(const Group& fp2, std::size_t factor,
                       const Element& e) {
  Group carrier = rho_carrier(fp2);
  if (factor >= 2) throw ShapeMismatchError("factor index out of range");
  RingElement f = RingElement::monomial(carrier, embed_key(carrier, factor, e),
                                        1);
  RingElement f_minus_1 = ring_sub(f, RingElement::one(carrier));
  Poly one = Poly::constant(RingElement::one(carrier));
  Poly zero{carrier};
  Poly off = Poly::from_coeffs(carrier,
                               {RingElement::zero(carrier), f_minus_1});
  if (factor == 0)
    return PolyMatrix2(Poly::constant(f), off, zero, one);
  return PolyMatrix2(one, zero, off, Poly::constant(f));
}

PolyMatrix2 rho(const Group& fp2, const Element& word) {
  Group carrier = rho_carrier(fp2);
  PolyMatrix2 m = PolyMatrix2::identity(carrier);
  for (const auto& s : word.syllables())
    m = mat_mul(m, rho_factor(fp2, s.factor, s.element));
  return m;
}

Sign mat_sign(const ElementComparator& cmp, const PolyMatrix2& m) {
  for (int n = 0; n <= m.degree(); ++n) {
    // Position order within one degree: (1,1), (2,2), (1,2), (2,1).
    const RingElement* entries[4] = {&m.e11().coeff(n), &m.e22().coeff(n),
                                     &m.e12().coeff(n), &m.e21().coeff(n)};
    for (const RingElement* entry : entries) {
      if (!entry->is_zero()) return ring_sign(cmp, *entry);
    }
  }
  return Sign::Zero;
}

Sign mat_sign(const Ordering& product_order, const PolyMatrix2& m,
              CompareContext* ctx) {
  CompiledOrder compiled(product_order, m.carrier());
  return mat_sign(
      [&compiled, ctx](const Element& x, const Element& y) {
        return compiled.compare(x, y, ctx);
      },
      m);
}

PingPongClass pingpong_class(const Poly& top, const Poly& bottom) {
  if (top.is_zero() && bottom.is_zero())
    throw ZeroElementError("ping-pong class of the zero vector");
  if (top.degree() > bottom.degree()) return PingPongClass::V1;
  if (top.degree() < bottom.degree()) return PingPongClass::V2;
  return PingPongClass::V3;
}

PolyVector2 apply(const PolyMatrix2& m, const PolyVector2& v) {
  return {poly_add(poly_mul(m.e11(), v.top), poly_mul(m.e12(), v.bottom)),
          poly_add(poly_mul(m.e21(), v.top), poly_mul(m.e22(), v.bottom))};
}

InjectivityReport injectivity_check(const Group& fp2, int max_syllables,
                                    int exponent_bound) {
  Group carrier = rho_carrier(fp2);
  InjectivityReport report;
  PolyMatrix2 id = PolyMatrix2::identity(carrier);
  Poly one = Poly::constant(RingElement::one(carrier));

  std::vector<Element> universe =
      element_universe(fp2, max_syllables, exponent_bound);
  for (const auto& w : universe) {
    if (is_identity(w)) continue;
    ++report.words_checked;
    if (rho(fp2, w) == id) {
      report.ok = false;
      report.counterexample = w;
      return report;
    }
    // Ping-pong trajectory: the rightmost syllable acts first on (1, 1);
    // factor-0 matrices must land in V1, factor-1 matrices in V2.
    PolyVector2 v{one, one};
    const auto& syls = w.syllables();
    for (auto it = syls.rbegin(); it != syls.rend(); ++it) {
      v = apply(rho_factor(fp2, it->factor, it->element), v);
      PingPongClass expected =
          it->factor == 0 ? PingPongClass::V1 : PingPongClass::V2;
      if (pingpong_class(v.top, v.bottom) != expected) {
        report.ok = false;
        report.counterexample = w;
        return report;
      }
    }
  }
  return report;
}

}  // namespace ordfree
