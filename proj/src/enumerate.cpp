#include "ordfree/enumerate.hpp"

#include <algorithm>

namespace ordfree {

namespace {

// 0, +1, -1, +2, -2, ...
std::vector<BigInt> exponent_ladder(int bound, bool include_zero) {
  std::vector<BigInt> out;
  if (include_zero) out.emplace_back(0);
  for (int k = 1; k <= bound; ++k) {
    out.emplace_back(k);
    out.emplace_back(-k);
  }
  return out;
}

void append_words_of_length(const Group& g,
                            const std::vector<std::vector<Element>>& candidates,
                            int len, std::vector<Syllable>& word,
                            std::vector<Element>& out) {
  if (static_cast<int>(word.size()) == len) {
    out.push_back(Element::word(word));
    return;
  }
  for (std::size_t f = 0; f < g.arity(); ++f) {
    if (!word.empty() && word.back().factor == f) continue;
    for (const auto& e : candidates[f]) {
      word.push_back({f, e});
      append_words_of_length(g, candidates, len, word, out);
      word.pop_back();
    }
  }
}

void append_words(const Group& g, int max_syllables, int exponent_bound,
                  std::vector<Element>& out) {
  std::vector<std::vector<Element>> candidates(g.arity());
  for (std::size_t i = 0; i < g.arity(); ++i)
    candidates[i] =
        syllable_candidates(g.child(i), max_syllables, exponent_bound);
  std::vector<Syllable> word;
  for (int len = 1; len <= max_syllables; ++len)
    append_words_of_length(g, candidates, len, word, out);
}

}  // namespace

std::vector<Element> element_universe(const Group& g, int max_syllables,
                                      int exponent_bound) {
  std::vector<Element> out;
  switch (g.kind()) {
    case GroupKind::Integers:
      for (const auto& k : exponent_ladder(exponent_bound, true))
        out.push_back(Element::integer(k));
      break;
    case GroupKind::KleinBottle:
      for (const auto& m : exponent_ladder(exponent_bound, true))
        for (const auto& n : exponent_ladder(exponent_bound, true))
          out.push_back(Element::klein(m, n));
      break;
    case GroupKind::DirectProduct: {
      out.push_back(identity(g));
      std::vector<std::vector<Element>> child_universes;
      for (const auto& c : g.children())
        child_universes.push_back(
            element_universe(c, max_syllables, exponent_bound));
      std::vector<std::size_t> idx(g.arity(), 0);
      // Odometer over child universes; skip the all-identity combination
      // already emitted.
      while (true) {
        std::size_t pos = g.arity();
        while (pos > 0) {
          --pos;
          if (idx[pos] + 1 < child_universes[pos].size()) {
            ++idx[pos];
            std::fill(idx.begin() + pos + 1, idx.end(), 0);
            break;
          }
          if (pos == 0) return out;
        }
        std::vector<Element> comps;
        comps.reserve(g.arity());
        for (std::size_t i = 0; i < g.arity(); ++i)
          comps.push_back(child_universes[i][idx[i]]);
        out.push_back(Element::tuple(std::move(comps)));
      }
    }
    case GroupKind::FreeProduct:
      out.push_back(identity(g));
      append_words(g, max_syllables, exponent_bound, out);
      break;
  }
  return out;
}

std::vector<Element> syllable_candidates(const Group& factor,
                                         int max_syllables,
                                         int exponent_bound) {
  std::vector<Element> out;
  if (factor.is_integers()) {
    for (const auto& k : exponent_ladder(exponent_bound, false))
      out.push_back(Element::integer(k));
    return out;
  }
  int inner = std::min(max_syllables, 2);
  for (auto& e : element_universe(factor, inner, exponent_bound))
    if (!is_identity(e)) out.push_back(std::move(e));
  return out;
}

}  // namespace ordfree
