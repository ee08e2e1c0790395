#pragma once

#include <functional>
#include <string>

#include "ordfree/bigint.hpp"

namespace ordfree {

class Element;

// Outcome of comparing two group elements under a strict total order.
enum class Verdict { Less, Equal, Greater };

inline Verdict flip(Verdict v) {
  switch (v) {
    case Verdict::Less:
      return Verdict::Greater;
    case Verdict::Greater:
      return Verdict::Less;
    default:
      return Verdict::Equal;
  }
}

inline Verdict verdict_of(const BigInt& lhs, const BigInt& rhs) {
  if (lhs < rhs) return Verdict::Less;
  if (rhs < lhs) return Verdict::Greater;
  return Verdict::Equal;
}

std::string to_string(Verdict v);

// Three-valued sign used for ring elements and matrices.
enum class Sign { Negative, Zero, Positive };

inline Sign sign_of(const BigInt& n) {
  if (n > 0) return Sign::Positive;
  if (n < 0) return Sign::Negative;
  return Sign::Zero;
}

std::string to_string(Sign s);

// Comparison callback threaded through ring and matrix scans. Wraps a
// compiled ordering together with its recording context, so lower layers
// need not know about either.
using ElementComparator =
    std::function<Verdict(const Element&, const Element&)>;

}  // namespace ordfree
