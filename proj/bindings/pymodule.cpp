#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordfree/braid.hpp"
#include "ordfree/coproduct.hpp"
#include "ordfree/enumerate.hpp"
#include "ordfree/io.hpp"
#include "ordfree/selftest.hpp"

namespace py = pybind11;
using namespace ordfree;

namespace {

BigInt to_bigint(const py::int_& value) {
  py::str text(py::handle(value.ptr()));
  return BigInt(static_cast<std::string>(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact orderings of free products of ordered groups";

  py::register_exception<ShapeMismatchError>(m, "ShapeMismatchError");
  py::register_exception<DegenerateVecLexError>(m, "DegenerateVecLexError");
  py::register_exception<MissingAnswerError>(m, "MissingAnswerError");
  py::register_exception<ParseError>(m, "ParseError");

  py::enum_<Verdict>(m, "Verdict")
      .value("LESS", Verdict::Less)
      .value("EQUAL", Verdict::Equal)
      .value("GREATER", Verdict::Greater);

  py::class_<Group>(m, "Group")
      .def_static("parse", &parse_group, py::arg("text"))
      .def("__eq__", [](const Group& a, const Group& b) { return a == b; })
      .def("__str__", &print_group)
      .def("__repr__",
           [](const Group& g) { return "Group('" + print_group(g) + "')"; })
      .def_property_readonly("generator_count", &Group::generator_count);

  py::class_<Element>(m, "Element")
      .def("__eq__",
           [](const Element& a, const Element& b) { return a == b; })
      .def("__repr__",
           [](const Element& e) { return "Element(" + encode(e) + ")"; });

  py::class_<Ordering>(m, "Ordering")
      .def_static("parse", &parse_order, py::arg("text"), py::arg("group"))
      .def_static("standard", &Ordering::standard, py::arg("group"))
      .def("__eq__",
           [](const Ordering& a, const Ordering& b) { return a == b; })
      .def("__str__", &print_order)
      .def("__repr__",
           [](const Ordering& o) {
             return "Ordering('" + print_order(o) + "')";
           });

  py::class_<BraidWord>(m, "BraidWord")
      .def_static("parse", &parse_braid, py::arg("text"), py::arg("strands"))
      .def_readonly("strands", &BraidWord::strands)
      .def("__str__", &print_braid)
      .def("__repr__", [](const BraidWord& b) {
        return "BraidWord(" + std::to_string(b.strands) + ", '" +
               print_braid(b) + "')";
      });

  m.def("parse_group", &parse_group, py::arg("text"));
  m.def("parse_order", &parse_order, py::arg("text"), py::arg("group"));
  m.def("parse_element", &parse_element, py::arg("text"), py::arg("group"),
        py::arg("generator_offset") = 0);
  m.def("parse_braid", &parse_braid, py::arg("text"), py::arg("strands"));
  m.def("print_element", &print_element, py::arg("element"), py::arg("group"),
        py::arg("generator_offset") = 0);

  m.def("identity", &identity, py::arg("group"));
  m.def("is_identity", &is_identity, py::arg("element"));
  m.def("multiply", &multiply, py::arg("group"), py::arg("lhs"),
        py::arg("rhs"));
  m.def("inverse", &inverse, py::arg("group"), py::arg("element"));
  m.def(
      "power",
      [](const Group& g, const Element& e, const py::int_& exponent) {
        return power(g, e, to_bigint(exponent));
      },
      py::arg("group"), py::arg("element"), py::arg("exponent"));
  m.def("inject", &inject, py::arg("group"), py::arg("factor"),
        py::arg("element"));
  m.def(
      "generator",
      [](const Group& g, int index, const py::int_& exponent) {
        return generator(g, index, to_bigint(exponent));
      },
      py::arg("group"), py::arg("index"), py::arg("exponent") = py::int_(1));
  m.def("alpha", &alpha, py::arg("group"), py::arg("word"));
  m.def("alpha_target", &alpha_target, py::arg("group"));
  m.def("kernel_membership", &kernel_membership, py::arg("group"),
        py::arg("word"));

  m.def(
      "validate",
      [](const Ordering& o, const Group& g) { validate(o, g); },
      py::arg("ordering"), py::arg("group"));
  m.def("is_bi_invariant", &is_bi_invariant, py::arg("ordering"));
  m.def(
      "compare",
      [](const Ordering& o, const Group& g, const Element& lhs,
         const Element& rhs) { return compare(o, g, lhs, rhs); },
      py::arg("ordering"), py::arg("group"), py::arg("lhs"), py::arg("rhs"));
  m.def(
      "compare_with_certificate",
      [](const Ordering& o, const Group& g, const Element& lhs,
         const Element& rhs) {
        Certificate cert;
        CompareContext ctx = CompareContext::recording(cert);
        Verdict v = CompiledOrder(o, g).compare(lhs, rhs, &ctx);
        return py::make_tuple(v, certificate_to_json(cert, o, g));
      },
      py::arg("ordering"), py::arg("group"), py::arg("lhs"), py::arg("rhs"),
      "Returns (verdict, certificate_json).");
  m.def(
      "replay",
      [](const std::string& certificate_json, const Ordering& o,
         const Group& g, const Element& lhs, const Element& rhs) {
        Certificate cert = certificate_from_json(certificate_json, o, g);
        return replay(cert, o, g, lhs, rhs);
      },
      py::arg("certificate_json"), py::arg("ordering"), py::arg("group"),
      py::arg("lhs"), py::arg("rhs"));

  m.def(
      "rho_string",
      [](const Group& g, const Element& w) {
        return matrix_to_string(rho(g, w));
      },
      py::arg("group"), py::arg("word"));
  m.def(
      "injectivity_check",
      [](const Group& g, int max_syllables, int exponent_bound) {
        InjectivityReport r = injectivity_check(g, max_syllables,
                                                exponent_bound);
        py::dict out;
        out["ok"] = r.ok;
        out["words_checked"] = r.words_checked;
        out["counterexample"] =
            r.counterexample
                ? py::object(py::cast(print_element(*r.counterexample, g)))
                : py::object(py::none());
        return out;
      },
      py::arg("group"), py::arg("max_syllables") = 4,
      py::arg("exponent_bound") = 2);

  m.def("find_distinguishing_witness", &find_distinguishing_witness,
        py::arg("ordering_a"), py::arg("ordering_b"), py::arg("group"),
        py::arg("max_syllables") = 4, py::arg("exponent_bound") = 2);

  m.def("artin_apply", &artin_apply, py::arg("braid"), py::arg("word"));
  m.def("braid_tensor", &braid_tensor, py::arg("a"), py::arg("b"));
  m.def("free_group", &free_group, py::arg("strands"));
  m.def(
      "check_order_preserving",
      [](const BraidWord& b, const Ordering& o, int max_syllables,
         int exponent_bound) {
        BraidOrderCheck r =
            check_order_preserving(b, o, max_syllables, exponent_bound);
        py::dict out;
        out["pass"] = r.pass;
        out["pairs_checked"] = r.pairs_checked;
        if (r.counterexample) {
          Group fn = free_group(b.strands);
          out["counterexample"] =
              py::make_tuple(print_element(r.counterexample->first, fn),
                             print_element(r.counterexample->second, fn));
        } else {
          out["counterexample"] = py::none();
        }
        return out;
      },
      py::arg("braid"), py::arg("ordering"), py::arg("max_syllables") = 3,
      py::arg("exponent_bound") = 2);

  m.def("element_universe", &element_universe, py::arg("group"),
        py::arg("max_syllables"), py::arg("exponent_bound"));

  m.def(
      "run_selftest",
      [](int max_syllables, int exponent_bound, std::uint64_t seed) {
        SelftestOptions options;
        options.max_syllables = max_syllables;
        options.exponent_bound = exponent_bound;
        options.seed = seed;
        auto results = run_selftest(options);
        py::list out;
        for (const auto& r : results) {
          py::dict item;
          item["index"] = r.index;
          item["name"] = r.name;
          item["pass"] = r.pass;
          item["detail"] = r.detail;
          out.append(std::move(item));
        }
        return out;
      },
      py::arg("max_syllables") = 3, py::arg("exponent_bound") = 2,
      py::arg("seed") = 0);
}
