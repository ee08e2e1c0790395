#include "ordfree/braid.hpp"

#include <algorithm>
#include <numeric>

#include "ordfree/enumerate.hpp"

namespace ordfree {

void validate(const BraidWord& b) {
  if (b.strands < 1) throw ShapeMismatchError("a braid needs a strand");
  for (const auto& [index, sign] : b.letters) {
    if (index < 1 || index > b.strands - 1)
      throw ShapeMismatchError("braid letter index out of range");
    if (sign != 1 && sign != -1)
      throw ShapeMismatchError("braid letter sign must be +1 or -1");
  }
}

Group free_group(int strands) {
  if (strands < 1) throw ShapeMismatchError("a braid needs a strand");
  if (strands == 1) return Group::integers();
  std::vector<Group> children(static_cast<std::size_t>(strands),
                              Group::integers());
  return Group::free_product(std::move(children));
}

namespace {

// Image of generator `f` (0-based) under one letter.
Element letter_generator_image(const Group& fn, int index, int sign,
                               std::size_t f) {
  auto gen = [&fn](std::size_t i) {
    return inject(fn, i, Element::integer(1));
  };
  const auto i = static_cast<std::size_t>(index - 1);
  const auto j = static_cast<std::size_t>(index);
  if (sign > 0) {
    if (f == i)
      return multiply(fn, multiply(fn, gen(i), gen(j)),
                      inverse(fn, gen(i)));
    if (f == j) return gen(i);
  } else {
    if (f == i) return gen(j);
    if (f == j)
      return multiply(fn, multiply(fn, inverse(fn, gen(j)), gen(i)),
                      gen(j));
  }
  return gen(f);
}

Element letter_apply(const Group& fn, int index, int sign, const Element& w) {
  Element acc = identity(fn);
  for (const auto& s : w.syllables()) {
    Element image =
        power(fn, letter_generator_image(fn, index, sign, s.factor),
              s.element.int_value());
    acc = multiply(fn, acc, image);
  }
  return acc;
}

}  // namespace

Element artin_apply(const BraidWord& b, const Element& w) {
  validate(b);
  if (b.strands == 1) return w;  // B_1 is trivial
  Group fn = free_group(b.strands);
  Element cur = w;
  for (const auto& [index, sign] : b.letters)
    cur = letter_apply(fn, index, sign, cur);
  return cur;
}

BraidWord braid_tensor(const BraidWord& a, const BraidWord& b) {
  validate(a);
  validate(b);
  BraidWord out;
  out.strands = a.strands + b.strands;
  out.letters = a.letters;
  for (const auto& [index, sign] : b.letters)
    out.letters.emplace_back(index + a.strands, sign);
  return out;
}

BraidWord braid_inverse(const BraidWord& b) {
  BraidWord out;
  out.strands = b.strands;
  out.letters.reserve(b.letters.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    out.letters.emplace_back(it->first, -it->second);
  return out;
}

BraidOrderCheck check_order_preserving(
    const BraidWord& b,
    const std::function<Verdict(const Element&, const Element&)>& cmp,
    std::span<const Element> universe) {
  validate(b);
  const std::size_t n = universe.size();
  std::vector<Element> images;
  images.reserve(n);
  for (const auto& e : universe) images.push_back(artin_apply(b, e));

  // Rank both lists once; pair orientations then cost nothing.
  auto ranks_of = [&](const std::vector<const Element*>& items) {
    std::vector<std::size_t> idx(items.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t c) {
      return cmp(*items[a], *items[c]) == Verdict::Less;
    });
    std::vector<std::size_t> rank(items.size());
    for (std::size_t k = 0; k < idx.size(); ++k) rank[idx[k]] = k;
    return rank;
  };
  std::vector<const Element*> universe_ptrs, image_ptrs;
  universe_ptrs.reserve(n);
  image_ptrs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    universe_ptrs.push_back(&universe[i]);
    image_ptrs.push_back(&images[i]);
  }
  std::vector<std::size_t> rank = ranks_of(universe_ptrs);
  std::vector<std::size_t> image_rank = ranks_of(image_ptrs);

  // Scan pairs by the shortest prefix of the enumeration containing both,
  // so the reported counterexample involves the earliest possible words.
  BraidOrderCheck result;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      ++result.pairs_checked;
      if ((rank[i] < rank[j]) == (image_rank[i] < image_rank[j])) continue;
      result.pass = false;
      if (rank[i] < rank[j])
        result.counterexample = {universe[i], universe[j]};
      else
        result.counterexample = {universe[j], universe[i]};
      return result;
    }
  }
  return result;
}

BraidOrderCheck check_order_preserving(const BraidWord& b, const Ordering& o,
                                       int max_syllables, int exponent_bound) {
  Group fn = free_group(b.strands);
  CompiledOrder order(o, fn);
  std::vector<Element> universe =
      element_universe(fn, max_syllables, exponent_bound);
  return check_order_preserving(
      b,
      [&order](const Element& x, const Element& y) {
        return order.compare(x, y);
      },
      universe);
}

}  // namespace ordfree
