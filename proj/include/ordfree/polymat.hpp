#pragma once

#include <optional>
#include <vector>

#include "ordfree/ring.hpp"

namespace ordfree {

/// Polynomial in t over a group ring, dense by degree with sparse ring
/// coefficients. Degrees stay bounded by word length, so density is cheap.
class Poly {
 public:
  explicit Poly(Group carrier);  // zero polynomial
  static Poly constant(RingElement c);
  static Poly from_coeffs(Group carrier, std::vector<RingElement> coeffs);

  const Group& carrier() const { return carrier_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^d; zero beyond the degree.
  const RingElement& coeff(int d) const;

  bool operator==(const Poly& other) const;

 private:
  void trim();

  Group carrier_;
  RingElement zero_;
  std::vector<RingElement> coeffs_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

/// 2x2 matrix over R[t] for a common carrier ring R.
class PolyMatrix2 {
 public:
  PolyMatrix2(Poly e11, Poly e12, Poly e21, Poly e22);
  static PolyMatrix2 identity(Group carrier);
  static PolyMatrix2 zero(Group carrier);

  const Group& carrier() const { return e11_.carrier(); }
  const Poly& e11() const { return e11_; }
  const Poly& e12() const { return e12_; }
  const Poly& e21() const { return e21_; }
  const Poly& e22() const { return e22_; }
  int degree() const;

  bool operator==(const PolyMatrix2& other) const;

 private:
  Poly e11_, e12_, e21_, e22_;
};

PolyMatrix2 mat_mul(const PolyMatrix2& a, const PolyMatrix2& b);
PolyMatrix2 mat_add(const PolyMatrix2& a, const PolyMatrix2& b);
PolyMatrix2 mat_sub(const PolyMatrix2& a, const PolyMatrix2& b);
PolyMatrix2 mat_neg(const PolyMatrix2& a);

/// Carrier ring of the embedding for a two-factor free product: the
/// integral group ring of the direct product of the factors.
Group rho_carrier(const Group& fp2);

/// Matrix image of a single factor element: factor 0 maps to
/// [[f, (f-1)t], [0, 1]], factor 1 to [[1, 0], [(g-1)t, g]].
PolyMatrix2 rho_factor(const Group& fp2, std::size_t factor, const Element& e);

/// Multiplicative embedding of the free product: the product of the
/// generator matrices over the word's syllables. rho(1) is the identity.
PolyMatrix2 rho(const Group& fp2, const Element& word);

/// Matrix positivity: find the least degree n with a nonzero coefficient
/// matrix, then the first nonzero entry of that matrix in the fixed
/// position order (1,1), (2,2), (1,2), (2,1); its ring sign decides.
Sign mat_sign(const ElementComparator& cmp, const PolyMatrix2& m);
Sign mat_sign(const Ordering& product_order, const PolyMatrix2& m,
              CompareContext* ctx = nullptr);

/// Degree classes of the ping-pong argument: V1 when the top entry has the
/// larger degree, V2 when the bottom does, V3 on ties.
enum class PingPongClass { V1, V2, V3 };

PingPongClass pingpong_class(const Poly& top, const Poly& bottom);

struct PolyVector2 {
  Poly top;
  Poly bottom;
};

PolyVector2 apply(const PolyMatrix2& m, const PolyVector2& v);

struct InjectivityReport {
  bool ok = true;
  std::size_t words_checked = 0;
  std::optional<Element> counterexample;
};

/// Exhaustively verifies, over all nonempty reduced words within the
/// bounds, that rho(w) differs from the identity matrix and that the
/// ping-pong class trajectory leaves V3 after the first syllable and
/// alternates with the factors. A counterexample signals a bug.
InjectivityReport injectivity_check(const Group& fp2, int max_syllables,
                                    int exponent_bound);

}  // namespace ordfree
