#include "ordfree/selftest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ordfree/braid.hpp"
#include "ordfree/coproduct.hpp"
#include "ordfree/enumerate.hpp"
#include "ordfree/io.hpp"
#include "ordfree/polymat.hpp"
#include "ordfree/ring.hpp"

namespace ordfree {

namespace {

struct Failure {
  std::string detail;
};

using CheckBody = std::function<std::string()>;  // returns a pass detail

[[noreturn]] void fail(std::string detail) { throw Failure{std::move(detail)}; }

void check(bool condition, const std::string& detail) {
  if (!condition) fail(detail);
}

// Full verdict matrix from direct comparisons (both directions computed).
std::vector<std::vector<Verdict>> verdict_matrix(
    const CompiledOrder& order, const std::vector<Element>& universe) {
  const std::size_t n = universe.size();
  std::vector<std::vector<Verdict>> m(n, std::vector<Verdict>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = order.compare(universe[i], universe[j]);
  return m;
}

void check_total_order_axioms(const CompiledOrder& order,
                              const std::vector<Element>& universe,
                              std::size_t triples, Sampler& sampler) {
  auto m = verdict_matrix(order, universe);
  const std::size_t n = universe.size();
  for (std::size_t i = 0; i < n; ++i) {
    check(m[i][i] == Verdict::Equal, "an element fails to equal itself");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      check(m[i][j] != Verdict::Equal,
            "distinct normal forms compare equal");
      check(m[i][j] == flip(m[j][i]), "comparison is not antisymmetric");
    }
  }
  for (std::size_t t = 0; t < triples; ++t) {
    std::size_t i = sampler.index(n), j = sampler.index(n),
                k = sampler.index(n);
    if (m[i][j] == Verdict::Less && m[j][k] == Verdict::Less)
      check(m[i][k] == Verdict::Less, "comparison is not transitive");
    if (m[i][j] == Verdict::Greater && m[j][k] == Verdict::Greater)
      check(m[i][k] == Verdict::Greater, "comparison is not transitive");
  }
}

// Injected factor elements must compare exactly as the factor ordering
// says, for every pair of factor elements within the bound.
void check_extension(const Group& fp, const Ordering& order,
                     std::size_t factor, const CompiledOrder& factor_order,
                     const std::vector<Element>& factor_elements) {
  CompiledOrder compiled(order, fp);
  std::vector<Element> injected;
  injected.reserve(factor_elements.size());
  for (const auto& e : factor_elements)
    injected.push_back(inject(fp, factor, e));
  for (std::size_t i = 0; i < factor_elements.size(); ++i) {
    for (std::size_t j = 0; j < factor_elements.size(); ++j) {
      if (compiled.compare(injected[i], injected[j]) !=
          factor_order.compare(factor_elements[i], factor_elements[j]))
        fail("injected comparison disagrees with the factor ordering");
    }
  }
}

std::pair<std::size_t, std::size_t> sample_ordered_pair(
    const CompiledOrder& order, const std::vector<Element>& universe,
    Sampler& sampler) {
  while (true) {
    std::size_t i = sampler.index(universe.size());
    std::size_t j = sampler.index(universe.size());
    if (i == j) continue;
    Verdict v = order.compare(universe[i], universe[j]);
    if (v == Verdict::Less) return {i, j};
    if (v == Verdict::Greater) return {j, i};
  }
}

void check_invariance(const CompiledOrder& order,
                      const std::vector<Element>& universe,
                      std::size_t triples, bool expect_bi, Sampler& sampler) {
  const Group& g = order.group();
  for (std::size_t t = 0; t < triples; ++t) {
    auto [ui, vi] = sample_ordered_pair(order, universe, sampler);
    const Element& u = universe[ui];
    const Element& v = universe[vi];
    const Element& w = universe[sampler.index(universe.size())];
    check(order.compare(multiply(g, w, u), multiply(g, w, v)) ==
              Verdict::Less,
          "left invariance fails");
    if (expect_bi)
      check(order.compare(multiply(g, u, w), multiply(g, v, w)) ==
                Verdict::Less,
            "right invariance fails");
  }
}

// Sorted ranks; assumes the order is total (verified separately).
std::vector<std::size_t> ranks_under(const CompiledOrder& order,
                                     const std::vector<Element>& universe) {
  std::vector<std::size_t> idx(universe.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(universe[a], universe[b]) == Verdict::Less;
  });
  std::vector<std::size_t> rank(universe.size());
  for (std::size_t k = 0; k < idx.size(); ++k) rank[idx[k]] = k;
  return rank;
}

std::string count_detail(std::initializer_list<std::pair<const char*,
                                                         std::size_t>>
                             counts) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [label, value] : counts) {
    if (!first) out << ", ";
    out << value << " " << label;
    first = false;
  }
  return out.str();
}

}  // namespace

std::vector<CriterionResult> run_selftest(const SelftestOptions& options,
                                          std::ostream* log) {
  std::vector<CriterionResult> results;
  const int ms = options.max_syllables;
  const int eb = options.exponent_bound;

  const Group z = Group::integers();
  const Group zz = Group::free_product({z, z});
  const Ordering std_order = Ordering::standard(zz);
  const CompiledOrder order(std_order, zz);
  const std::vector<Element> universe = element_universe(zz, ms, eb);

  auto run = [&](int index, const std::string& name, const CheckBody& body) {
    CriterionResult result{index, name, true, ""};
    try {
      result.detail = body();
    } catch (const Failure& f) {
      result.pass = false;
      result.detail = f.detail;
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    if (log) {
      (*log) << "[" << (index < 10 ? " " : "") << index << "/11] "
             << (result.pass ? "PASS" : "FAIL") << "  " << name;
      if (!result.detail.empty()) (*log) << " (" << result.detail << ")";
      (*log) << "\n";
    }
    results.push_back(std::move(result));
  };

  run(1, "total order axioms", [&] {
    Sampler sampler(options.seed);
    check_total_order_axioms(order, universe, 10000, sampler);
    return count_detail({{"elements", universe.size()},
                         {"random triples", 10000}});
  });

  run(2, "extension of the factor orderings", [&] {
    std::vector<Element> factor_elements;
    for (int k = -10; k <= 10; ++k)
      factor_elements.push_back(Element::integer(k));
    CompiledOrder int_std(Ordering::int_std(), z);
    CompiledOrder int_rev(Ordering::int_rev(), z);
    check_extension(zz, std_order, 0, int_std, factor_elements);
    check_extension(zz, std_order, 1, int_std, factor_elements);
    Ordering mixed = Ordering::bergman({Ordering::int_std(),
                                        Ordering::int_rev()});
    check_extension(zz, mixed, 1, int_rev, factor_elements);
    return count_detail({{"factor elements", factor_elements.size()}});
  });

  run(3, "invariance under multiplication", [&] {
    Sampler sampler(options.seed + 1);
    check_invariance(order, universe, 2000, true, sampler);

    const Group kz =
        Group::free_product({Group::klein_bottle(), Group::integers()});
    const CompiledOrder left_order(Ordering::standard(kz), kz);
    const std::vector<Element> left_universe = element_universe(kz, ms, eb);
    check_invariance(left_order, left_universe, 2000, false, sampler);

    // The order is left-only: 1 < y while yx < x.
    Element one = identity(kz);
    Element y = inject(kz, 0, Element::klein(1, 0));
    Element x = inject(kz, 0, Element::klein(0, 1));
    check(left_order.compare(one, y) == Verdict::Less,
          "expected 1 < y in the Klein factor");
    check(left_order.compare(x, multiply(kz, y, x)) == Verdict::Greater,
          "expected right invariance to fail at (1, y, x)");
    return count_detail({{"bi triples", 2000}, {"left triples", 2000}});
  });

  run(4, "functoriality of order-preserving factor maps", [&] {
    Hom cube = Hom::from_integers(z, Element::integer(3));
    Hom phi = Hom::free_product({cube, Hom::identity(z)});
    std::vector<Element> images;
    images.reserve(universe.size());
    for (const auto& e : universe) images.push_back(apply_hom(phi, e));
    auto rank = ranks_under(order, universe);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      for (std::size_t j = 0; j < universe.size(); ++j) {
        if (rank[i] >= rank[j]) continue;
        ++pairs;
        check(order.compare(images[i], images[j]) == Verdict::Less,
              "image comparison flipped under x1 -> x1^3");
      }
    }
    return count_detail({{"ordered pairs", pairs}});
  });

  run(5, "injectivity of the matrix embedding", [&] {
    InjectivityReport report = injectivity_check(zz, ms + 1, eb);
    check(report.ok, "embedding maps a nonempty word to the identity");
    return count_detail({{"words", report.words_checked}});
  });

  run(6, "alpha is an order-homomorphism with convex kernel", [&] {
    CompiledOrder lex(Ordering::lex({Ordering::int_std(),
                                     Ordering::int_std()}),
                      alpha_target(zz));
    std::vector<Element> alphas;
    alphas.reserve(universe.size());
    for (const auto& e : universe) alphas.push_back(alpha(zz, e));
    auto rank = ranks_under(order, universe);
    for (std::size_t i = 0; i < universe.size(); ++i)
      for (std::size_t j = 0; j < universe.size(); ++j)
        if (rank[i] < rank[j])
          check(lex.compare(alphas[i], alphas[j]) != Verdict::Greater,
                "alpha reverses a comparison");

    std::vector<Element> probe_universe = element_universe(zz, ms + 1, eb);
    auto violation = convexity_probe(order, probe_universe);
    check(!violation, "kernel of alpha is not convex on the sample");
    std::size_t kernel = 0;
    for (const auto& e : probe_universe)
      if (kernel_membership(zz, e)) ++kernel;
    return count_detail({{"pairs", universe.size() * (universe.size() - 1) / 2},
                         {"probe elements", probe_universe.size()},
                         {"kernel elements", kernel}});
  });

  run(7, "asymmetry of the construction", [&] {
    Element u = inject(zz, 1, Element::integer(1));             // x2
    Element v = multiply(zz, inject(zz, 0, Element::integer(1)),
                         inject(zz, 1, Element::integer(-1)));  // x1 x2^-1
    check(order.compare(u, v) == Verdict::Less, "expected x2 < x1 x2^-1");
    Element pu = alpha(zz, u).components()[1];
    Element pv = alpha(zz, v).components()[1];
    check(verdict_of(pu.int_value(), pv.int_value()) == Verdict::Greater,
          "the second-factor projection should reverse this pair");
    return std::string("x2 < x1*x2^-1 while the factor-2 parts reverse");
  });

  run(8, "bracketings agree under the natural isomorphisms", [&] {
    Sampler sampler(options.seed + 2);
    std::size_t comparisons = 0;
    for (int factors : {3, 4}) {
      std::vector<Group> copies(static_cast<std::size_t>(factors), z);
      Group flat = Group::free_product(copies);
      std::vector<Element> flat_universe = element_universe(flat, ms, eb);

      struct Arrangement {
        Bracketing bracketing;
        Group group;
        CompiledOrder order;
      };
      std::vector<Arrangement> arrangements;
      std::function<Ordering(const Bracketing&)> ordering_of =
          [&](const Bracketing& b) -> Ordering {
        if (b.is_leaf()) return Ordering::int_std();
        return Ordering::bergman({ordering_of(b.left()),
                                  ordering_of(b.right())});
      };
      for (const auto& b : Bracketing::all(factors)) {
        Group bg = bracketed_group(flat, b);
        arrangements.push_back({b, bg, CompiledOrder(ordering_of(b), bg)});
      }
      for (int t = 0; t < 2000; ++t) {
        std::size_t i = sampler.index(flat_universe.size());
        std::size_t j = sampler.index(flat_universe.size());
        std::optional<Verdict> expected;
        for (const auto& a : arrangements) {
          Verdict v = a.order.compare(
              to_bracketed(flat, a.bracketing, flat_universe[i]),
              to_bracketed(flat, a.bracketing, flat_universe[j]));
          ++comparisons;
          if (!expected)
            expected = v;
          else
            check(*expected == v,
                  "bracketings disagree on " +
                      print_element(flat_universe[i], flat) + " vs " +
                      print_element(flat_universe[j], flat));
        }
      }
    }
    return count_detail({{"comparisons", comparisons}});
  });

  run(9, "injectivity on orderings, with replayable certificates", [&] {
    std::vector<Ordering> assignments;
    for (auto a : {Ordering::int_std(), Ordering::int_rev()})
      for (auto b : {Ordering::int_std(), Ordering::int_rev()})
        assignments.push_back(Ordering::bergman({a, b}));
    Element one = identity(zz);
    for (std::size_t i = 0; i < assignments.size(); ++i) {
      for (std::size_t j = i + 1; j < assignments.size(); ++j) {
        auto witness = find_distinguishing_witness(assignments[i],
                                                   assignments[j], zz, ms + 1,
                                                   eb);
        check(witness.has_value(), "two distinct assignments were not "
                                   "distinguished");
        Verdict a = compare(assignments[i], zz, one, *witness);
        Verdict b = compare(assignments[j], zz, one, *witness);
        check((a == Verdict::Less && b == Verdict::Greater) ||
                  (a == Verdict::Greater && b == Verdict::Less),
              "witness is not strictly opposite");
      }
    }

    Sampler sampler(options.seed + 3);
    for (int t = 0; t < 100; ++t) {
      const Element& u = universe[sampler.index(universe.size())];
      const Element& v = universe[sampler.index(universe.size())];
      Certificate cert;
      CompareContext recording = CompareContext::recording(cert);
      Verdict recorded = order.compare(u, v, &recording);
      check(certificate_is_sound(cert, std_order, zz),
            "a certificate entry disagrees with its base ordering");
      Verdict replayed = replay(cert, std_order, zz, u, v);
      check(replayed == recorded, "replay verdict differs");
    }
    return count_detail({{"assignment pairs", 6}, {"replays", 100}});
  });

  run(10, "braid action and tensor product", [&] {
    BraidWord sigma1{2, {{1, 1}}};
    BraidWord sigma1_squared{2, {{1, 1}, {1, 1}}};

    auto single = check_order_preserving(sigma1, std_order, ms, eb);
    check(!single.pass, "sigma_1 unexpectedly preserves the ordering");
    Element x1 = inject(zz, 0, Element::integer(1));
    Element x2 = inject(zz, 1, Element::integer(1));
    check(single.counterexample &&
              single.counterexample->first == x2 &&
              single.counterexample->second == x1,
          "expected the counterexample (x2, x1)");

    auto squared = check_order_preserving(sigma1_squared, std_order, ms, eb);
    check(squared.pass, "sigma_1^2 should preserve the ordering");

    // The 4-strand tensor preserves the ordering built from the two
    // 2-strand orderings, both on the flat group and through the
    // (F2 * F2) bracketing.
    BraidWord tensor = braid_tensor(sigma1_squared, sigma1_squared);
    Group f4 = free_group(4);
    Ordering f4_order = Ordering::standard(f4);
    auto flat_check = check_order_preserving(tensor, f4_order, 2, 1);
    check(flat_check.pass, "the tensor braid fails on the flat ordering");

    Bracketing split = Bracketing::node(
        Bracketing::node(Bracketing::leaf(0), Bracketing::leaf(1)),
        Bracketing::node(Bracketing::leaf(2), Bracketing::leaf(3)));
    Group f2f2 = bracketed_group(f4, split);
    CompiledOrder nested(
        Ordering::bergman({Ordering::standard(f2f2.child(0)),
                           Ordering::standard(f2f2.child(1))}),
        f2f2);
    std::vector<Element> small = element_universe(f4, 2, 1);
    auto nested_check = check_order_preserving(
        tensor,
        [&](const Element& a, const Element& b) {
          return nested.compare(to_bracketed(f4, split, a),
                                to_bracketed(f4, split, b));
        },
        small);
    check(nested_check.pass, "the tensor braid fails on the (F2*F2) order");

    CompiledOrder f4_compiled(f4_order, f4);
    Sampler sampler(options.seed + 4);
    std::vector<Element> f4_universe = element_universe(f4, ms, eb);
    for (int t = 0; t < 500; ++t) {
      std::size_t i = sampler.index(f4_universe.size());
      std::size_t j = sampler.index(f4_universe.size());
      Verdict v = f4_compiled.compare(f4_universe[i], f4_universe[j]);
      if (v == Verdict::Equal) continue;
      Verdict image = f4_compiled.compare(artin_apply(tensor, f4_universe[i]),
                                          artin_apply(tensor, f4_universe[j]));
      check(image == v, "tensor braid flips a sampled pair");
    }

    // artin(a tensor b) is the free product of the two separate actions.
    Group f2 = free_group(2);
    auto split_action = [&](const Element& w) {
      Element acc = identity(f4);
      for (const auto& s : w.syllables()) {
        std::size_t block = s.factor / 2;
        Element local = inject(f2, s.factor % 2, s.element);
        Element mapped = artin_apply(sigma1_squared, local);
        for (const auto& part : mapped.syllables())
          acc = multiply(f4, acc,
                         inject(f4, part.factor + 2 * block, part.element));
      }
      return acc;
    };
    for (int gen = 0; gen < 4; ++gen) {
      Element w = generator(f4, gen);
      check(artin_apply(tensor, w) == split_action(w),
            "tensor action differs from the split action on a generator");
    }
    for (int t = 0; t < 500; ++t) {
      const Element& w = f4_universe[sampler.index(f4_universe.size())];
      check(artin_apply(tensor, w) == split_action(w),
            "tensor action differs from the split action on a word");
    }
    return count_detail({{"flat pairs", flat_check.pairs_checked},
                         {"nested pairs", nested_check.pairs_checked},
                         {"sampled words", 500}});
  });

  run(11, "left-ordered mode", [&] {
    Sampler sampler(options.seed + 5);
    const Group kz =
        Group::free_product({Group::klein_bottle(), Group::integers()});
    const Ordering kz_ordering = Ordering::standard(kz);
    const CompiledOrder kz_order(kz_ordering, kz);

    std::vector<Element> kz_universe = element_universe(kz, ms, 1);
    check_total_order_axioms(kz_order, kz_universe, 10000, sampler);

    std::vector<Element> klein_elements;
    for (int m = -10; m <= 10; ++m)
      for (int n = -10; n <= 10; ++n)
        klein_elements.push_back(Element::klein(m, n));
    CompiledOrder klein_left(Ordering::klein_left(), Group::klein_bottle());
    check_extension(kz, kz_ordering, 0, klein_left, klein_elements);
    std::vector<Element> int_elements;
    for (int k = -10; k <= 10; ++k) int_elements.push_back(Element::integer(k));
    CompiledOrder int_std(Ordering::int_std(), z);
    check_extension(kz, kz_ordering, 1, int_std, int_elements);

    std::vector<Element> wide_universe = element_universe(kz, ms, eb);
    check_invariance(kz_order, wide_universe, 2000, false, sampler);

    // A positive group-ring element stays positive under left
    // multiplication by a monomial with positive coefficient.
    Group product = Group::direct_product({Group::klein_bottle(), z});
    Ordering product_order =
        Ordering::lex({Ordering::klein_left(), Ordering::int_std()});
    CompiledOrder product_compiled(product_order, product);
    auto cmp = [&](const Element& a, const Element& b) {
      return product_compiled.compare(a, b);
    };
    std::vector<Element> keys = element_universe(product, 1, 2);
    std::size_t law_checks = 0;
    for (int t = 0; t < 500; ++t) {
      RingElement a = RingElement::zero(product);
      int terms = 1 + static_cast<int>(sampler.index(3));
      for (int i = 0; i < terms; ++i) {
        BigInt coeff = static_cast<int>(sampler.index(7)) - 3;
        a.accumulate(keys[sampler.index(keys.size())], coeff);
      }
      Sign s = ring_sign(cmp, a);
      if (s == Sign::Zero) continue;
      BigInt coeff = 1 + static_cast<int>(sampler.index(5));
      RingElement monomial = RingElement::monomial(
          product, keys[sampler.index(keys.size())], coeff);
      check(ring_sign(cmp, ring_mul(monomial, a)) == s,
            "left monomial multiplication changed a ring sign");
      ++law_checks;
    }
    return count_detail({{"elements", kz_universe.size()},
                         {"monomial law checks", law_checks}});
  });

  if (log) {
    std::size_t passed = 0;
    for (const auto& r : results)
      if (r.pass) ++passed;
    (*log) << "RESULT: " << passed << "/" << results.size()
           << " criteria passed\n";
  }
  return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

}  // namespace ordfree
