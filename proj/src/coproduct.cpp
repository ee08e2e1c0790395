#include "ordfree/coproduct.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "ordfree/enumerate.hpp"

namespace ordfree {

Verdict compare_bergman(const Ordering& o0, const Ordering& o1,
                        const Group& fp2, const Element& u, const Element& v,
                        CompareContext* ctx) {
  if (!fp2.is_free_product() || fp2.arity() != 2)
    throw ShapeMismatchError("compare_bergman needs a two-factor free product");
  return CompiledOrder(Ordering::bergman({o0, o1}), fp2).compare(u, v, ctx);
}

Verdict compare_with_product_order(const Ordering& product_order,
                                   const Group& fp2, const Element& u,
                                   const Element& v, CompareContext* ctx) {
  return CompiledOrder(Ordering::product_pullback(product_order), fp2)
      .compare(u, v, ctx);
}

Ordering nary_bergman(std::vector<Ordering> factor_orders, const Group& fp) {
  if (!fp.is_free_product())
    throw ShapeMismatchError("nary ordering needs a free product");
  if (factor_orders.size() != fp.arity() || factor_orders.size() < 2)
    throw ShapeMismatchError("one factor ordering per factor is required");
  Ordering o = Ordering::bergman(std::move(factor_orders));
  validate(o, fp);
  return o;
}

// ---------------------------------------------------------------------------
// Homomorphisms

Hom::Hom(Group source, Group target)
    : source_(std::move(source)), target_(std::move(target)) {}

Hom Hom::identity(const Group& g) {
  switch (g.kind()) {
    case GroupKind::Integers:
      return from_integers(g, generator(g, 0));
    case GroupKind::KleinBottle:
      return from_klein(g, generator(g, 0), generator(g, 1));
    case GroupKind::DirectProduct:
    case GroupKind::FreeProduct: {
      std::vector<Hom> parts;
      parts.reserve(g.arity());
      for (const auto& c : g.children()) parts.push_back(identity(c));
      return g.is_direct_product() ? direct_product(std::move(parts))
                                   : free_product(std::move(parts));
    }
  }
  throw ShapeMismatchError("unknown group kind");
}

Hom Hom::from_integers(Group target, Element generator_image) {
  Hom h(Group::integers(), std::move(target));
  h.leaf_images_.push_back(std::move(generator_image));
  return h;
}

Hom Hom::from_klein(Group target, Element y_image, Element x_image) {
  // x y x^-1 y must map to the identity.
  Element lhs = multiply(target, x_image, y_image);
  lhs = multiply(target, lhs, inverse(target, x_image));
  lhs = multiply(target, lhs, y_image);
  if (!is_identity(lhs))
    throw ShapeMismatchError(
        "images do not satisfy the Klein bottle relation");
  Hom h(Group::klein_bottle(), std::move(target));
  h.leaf_images_.push_back(std::move(y_image));
  h.leaf_images_.push_back(std::move(x_image));
  return h;
}

Hom Hom::direct_product(std::vector<Hom> components) {
  std::vector<Group> sources, targets;
  sources.reserve(components.size());
  targets.reserve(components.size());
  for (const auto& c : components) {
    sources.push_back(c.source());
    targets.push_back(c.target());
  }
  Hom h(Group::direct_product(std::move(sources)),
        Group::direct_product(std::move(targets)));
  h.parts_ = std::move(components);
  return h;
}

Hom Hom::free_product(std::vector<Hom> factors) {
  std::vector<Group> sources, targets;
  sources.reserve(factors.size());
  targets.reserve(factors.size());
  for (const auto& f : factors) {
    sources.push_back(f.source());
    targets.push_back(f.target());
  }
  Hom h(Group::free_product(std::move(sources)),
        Group::free_product(std::move(targets)));
  h.parts_ = std::move(factors);
  return h;
}

Element apply_hom(const Hom& phi, const Element& w) {
  switch (phi.source_.kind()) {
    case GroupKind::Integers:
      return power(phi.target_, phi.leaf_images_[0], w.int_value());
    case GroupKind::KleinBottle: {
      const auto& k = w.klein_part();
      return multiply(phi.target_,
                      power(phi.target_, phi.leaf_images_[0], k.y_exp),
                      power(phi.target_, phi.leaf_images_[1], k.x_exp));
    }
    case GroupKind::DirectProduct: {
      const auto& comps = w.components();
      if (comps.size() != phi.parts_.size())
        throw ShapeMismatchError("tuple arity does not match the map");
      std::vector<Element> out;
      out.reserve(comps.size());
      for (std::size_t i = 0; i < comps.size(); ++i)
        out.push_back(apply_hom(phi.parts_[i], comps[i]));
      return Element::tuple(std::move(out));
    }
    case GroupKind::FreeProduct: {
      Element acc = ordfree::identity(phi.target_);
      for (const auto& s : w.syllables()) {
        if (s.factor >= phi.parts_.size())
          throw ShapeMismatchError("syllable factor out of range");
        acc = multiply(
            phi.target_, acc,
            inject(phi.target_, s.factor,
                   apply_hom(phi.parts_[s.factor], s.element)));
      }
      return acc;
    }
  }
  throw ShapeMismatchError("unknown group kind");
}

// ---------------------------------------------------------------------------

bool kernel_membership(const Group& fp, const Element& w) {
  return is_identity(alpha(fp, w));
}

std::optional<ConvexityViolation> convexity_probe(
    const CompiledOrder& order, std::span<const Element> samples) {
  const Group& g = order.group();
  const std::size_t n = samples.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(samples[a], samples[b]) == Verdict::Less;
  });
  // Convexity on the sample means the kernel occupies one contiguous run
  // of ranks: anything strictly between two kernel elements is kernel.
  std::optional<std::size_t> first, last;
  for (std::size_t r = 0; r < n; ++r) {
    if (kernel_membership(g, samples[idx[r]])) {
      if (!first) first = r;
      last = r;
    }
  }
  if (!first) return std::nullopt;
  for (std::size_t r = *first + 1; r < *last; ++r) {
    if (!kernel_membership(g, samples[idx[r]]))
      return ConvexityViolation{samples[idx[*first]], samples[idx[r]],
                                samples[idx[*last]]};
  }
  return std::nullopt;
}

namespace {

bool strictly_opposite(Verdict a, Verdict b) {
  return (a == Verdict::Less && b == Verdict::Greater) ||
         (a == Verdict::Greater && b == Verdict::Less);
}

}  // namespace

std::optional<Element> find_distinguishing_witness(const Ordering& a,
                                                   const Ordering& b,
                                                   const Group& g,
                                                   int max_syllables,
                                                   int exponent_bound) {
  CompiledOrder oa(a, g);
  CompiledOrder ob(b, g);
  Element one = identity(g);
  auto distinguishes = [&](const Element& w) {
    return strictly_opposite(oa.compare(one, w), ob.compare(one, w));
  };

  // Factor elements first: the injectivity argument finds its witness
  // inside a single factor whenever two factor orderings differ.
  if (g.is_free_product() || g.is_direct_product()) {
    for (std::size_t i = 0; i < g.arity(); ++i) {
      for (const auto& e :
           syllable_candidates(g.child(i), max_syllables, exponent_bound)) {
        Element w = g.is_free_product()
                        ? inject(g, i, e)
                        : [&] {
                            std::vector<Element> comps;
                            for (std::size_t j = 0; j < g.arity(); ++j)
                              comps.push_back(j == i ? e
                                                     : identity(g.child(j)));
                            return Element::tuple(std::move(comps));
                          }();
        if (distinguishes(w)) return w;
      }
    }
  }
  for (const auto& w : element_universe(g, max_syllables, exponent_bound)) {
    if (is_identity(w)) continue;
    if (distinguishes(w)) return w;
  }
  return std::nullopt;
}

}  // namespace ordfree
