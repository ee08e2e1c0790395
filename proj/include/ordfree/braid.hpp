#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ordfree/order.hpp"

namespace ordfree {

/// Word in the braid group B_n: a sequence of signed generator letters
/// (index i, sign) with 1 <= i <= strands - 1. The empty word is the
/// identity braid.
struct BraidWord {
  int strands = 1;
  std::vector<std::pair<int, int>> letters;  // (generator index, +1 or -1)
};

/// Throws unless every letter index is in range.
void validate(const BraidWord& b);

/// The free group the Artin action lives on: Z for one strand, otherwise
/// the flat free product of `strands` copies of Z.
Group free_group(int strands);

/// Artin action on the free group, applied letter by letter left to right.
/// The generator convention is
///   s_i:      x_i |-> x_i x_{i+1} x_i^-1,   x_{i+1} |-> x_i
///   s_i^-1:   x_i |-> x_{i+1},              x_{i+1} |-> x_{i+1}^-1 x_i x_{i+1}
/// with all other generators fixed.
Element artin_apply(const BraidWord& b, const Element& w);

/// Side-by-side juxtaposition B_m x B_n -> B_{m+n}: the letters of `a`
/// followed by the letters of `b` with indices shifted by a.strands.
BraidWord braid_tensor(const BraidWord& a, const BraidWord& b);

/// Reversed word with inverted signs; acts as the inverse automorphism.
BraidWord braid_inverse(const BraidWord& b);

struct BraidOrderCheck {
  bool pass = true;
  std::optional<std::pair<Element, Element>> counterexample;
  std::size_t pairs_checked = 0;
};

/// Bounded sampling check that the braid's automorphism preserves the
/// ordering: for every sample pair u < v the images must satisfy
/// phi(u) < phi(v). A pass only covers the sample; a counterexample (the
/// first violating pair in enumeration order, reported as (u, v) with
/// u < v) refutes preservation outright.
BraidOrderCheck check_order_preserving(const BraidWord& b, const Ordering& o,
                                       int max_syllables, int exponent_bound);

/// Same check over an explicit universe and comparison, for orderings that
/// live on a regrouped copy of the free group.
BraidOrderCheck check_order_preserving(
    const BraidWord& b,
    const std::function<Verdict(const Element&, const Element&)>& cmp,
    std::span<const Element> universe);

}  // namespace ordfree
