#include "ordfree/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordfree/coproduct.hpp"
#include "ordfree/io.hpp"
#include "ordfree/selftest.hpp"

namespace ordfree {

namespace {

struct CommonFlags {
  std::string group;
  std::vector<std::string> orders;
  std::string lhs, rhs, elem, braid;
  std::string certificate;
  std::string format = "text";
  int strands = 2;
  int max_syllables = 3;
  int witness_max_syllables = 4;
  int exponent_bound = 2;
  std::uint64_t seed = 0;
};

bool json_output(const CommonFlags& f) { return f.format == "json"; }

void emit_certificate(const CommonFlags& flags, const Certificate& cert,
                      const Ordering& o, const Group& g, std::ostream& out) {
  if (flags.certificate.empty()) return;
  std::string json = certificate_to_json(cert, o, g);
  if (flags.certificate == "-") {
    out << json << "\n";
    return;
  }
  std::ofstream file(flags.certificate);
  if (!file) throw Error("cannot write certificate to " + flags.certificate);
  file << json << "\n";
}

Ordering single_order(const CommonFlags& flags, const Group& g) {
  if (flags.orders.size() > 1)
    throw Error("this command takes --order at most once");
  std::string text = flags.orders.empty() ? "default" : flags.orders.front();
  return parse_order(text, g);
}

int cmd_compare(const CommonFlags& flags, std::ostream& out) {
  Group g = parse_group(flags.group);
  Ordering o = single_order(flags, g);
  Element lhs = parse_element(flags.lhs, g);
  Element rhs = parse_element(flags.rhs, g);
  Certificate cert;
  CompareContext ctx = CompareContext::recording(cert);
  Verdict v = CompiledOrder(o, g).compare(lhs, rhs, &ctx);
  const char* symbol = v == Verdict::Less    ? "<"
                       : v == Verdict::Equal ? "="
                                             : ">";
  if (json_output(flags)) {
    nlohmann::ordered_json j;
    j["lhs"] = flags.lhs;
    j["rhs"] = flags.rhs;
    j["verdict"] = to_string(v);
    j["display"] = std::string("LHS ") + symbol + " RHS";
    out << j.dump(2) << "\n";
  } else {
    out << "LHS " << symbol << " RHS\n";
  }
  emit_certificate(flags, cert, o, g, out);
  return 0;
}

int cmd_sign(const CommonFlags& flags, std::ostream& out) {
  Group g = parse_group(flags.group);
  Ordering o = single_order(flags, g);
  Element e = parse_element(flags.elem, g);
  Verdict v = CompiledOrder(o, g).compare(identity(g), e);
  const char* text = v == Verdict::Less    ? "POSITIVE"
                     : v == Verdict::Equal ? "ZERO"
                                           : "NEGATIVE";
  if (json_output(flags)) {
    nlohmann::ordered_json j;
    j["elem"] = flags.elem;
    j["sign"] = text;
    out << j.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
  return 0;
}

int cmd_alpha(const CommonFlags& flags, std::ostream& out) {
  Group g = parse_group(flags.group);
  Element e = parse_element(flags.elem, g);
  Element image = alpha(g, e);
  std::string text = print_element(image, alpha_target(g));
  if (json_output(flags)) {
    nlohmann::ordered_json j;
    j["elem"] = flags.elem;
    j["image"] = text;
    out << j.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
  return 0;
}

int cmd_rho(const CommonFlags& flags, std::ostream& out) {
  Group g = parse_group(flags.group);
  Element e = parse_element(flags.elem, g);
  PolyMatrix2 m = rho(g, e);
  if (json_output(flags)) {
    const Group& carrier = m.carrier();
    nlohmann::ordered_json j;
    j["elem"] = flags.elem;
    j["e11"] = poly_to_string(m.e11(), carrier);
    j["e12"] = poly_to_string(m.e12(), carrier);
    j["e21"] = poly_to_string(m.e21(), carrier);
    j["e22"] = poly_to_string(m.e22(), carrier);
    out << j.dump(2) << "\n";
  } else {
    out << matrix_to_string(m) << "\n";
  }
  return 0;
}

int cmd_braid_act(const CommonFlags& flags, std::ostream& out) {
  BraidWord b = parse_braid(flags.braid, flags.strands);
  Group fn = free_group(flags.strands);
  Element e = parse_element(flags.elem, fn);
  Element image = artin_apply(b, e);
  std::string text = print_element(image, fn);
  if (json_output(flags)) {
    nlohmann::ordered_json j;
    j["braid"] = flags.braid;
    j["elem"] = flags.elem;
    j["image"] = text;
    out << j.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
  return 0;
}

int cmd_braid_check(const CommonFlags& flags, std::ostream& out) {
  BraidWord b = parse_braid(flags.braid, flags.strands);
  Group fn = free_group(flags.strands);
  Ordering o = flags.orders.empty() ? Ordering::standard(fn)
                                    : parse_order(flags.orders.front(), fn);
  BraidOrderCheck check = check_order_preserving(b, o, flags.max_syllables,
                                                 flags.exponent_bound);
  if (json_output(flags)) {
    nlohmann::ordered_json j;
    j["braid"] = flags.braid;
    j["pass"] = check.pass;
    if (check.counterexample) {
      j["lhs"] = print_element(check.counterexample->first, fn);
      j["rhs"] = print_element(check.counterexample->second, fn);
    }
    j["pairs_checked"] = check.pairs_checked;
    out << j.dump(2) << "\n";
  } else if (check.pass) {
    out << "PASS (" << check.pairs_checked << " pairs)\n";
  } else {
    out << "COUNTEREXAMPLE "
        << print_element(check.counterexample->first, fn) << " < "
        << print_element(check.counterexample->second, fn)
        << " but images reverse\n";
  }
  return check.pass ? 0 : 3;
}

int cmd_witness(const CommonFlags& flags, std::ostream& out) {
  Group g = parse_group(flags.group);
  if (flags.orders.size() != 2)
    throw Error("witness needs --order given exactly twice");
  Ordering a = parse_order(flags.orders[0], g);
  Ordering b = parse_order(flags.orders[1], g);
  auto witness = find_distinguishing_witness(a, b, g,
                                             flags.witness_max_syllables,
                                             flags.exponent_bound);
  if (json_output(flags)) {
    nlohmann::ordered_json j;
    if (witness)
      j["witness"] = print_element(*witness, g);
    else
      j["witness"] = nullptr;
    out << j.dump(2) << "\n";
  } else if (witness) {
    out << print_element(*witness, g) << "\n";
  } else {
    out << "NONE\n";
  }
  return 0;
}

int cmd_selftest(const CommonFlags& flags, std::ostream& out) {
  SelftestOptions options;
  options.max_syllables = flags.max_syllables;
  options.exponent_bound = flags.exponent_bound;
  options.seed = flags.seed;
  auto results = run_selftest(options, &out);
  return all_pass(results) ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact orderings of free products of ordered groups"};
  app.require_subcommand(1);
  CommonFlags flags;

  auto add_format = [&flags](CLI::App* cmd) {
    cmd->add_option("--format", flags.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* compare = app.add_subcommand("compare", "Compare two elements");
  compare->add_option("--group", flags.group)->required();
  compare->add_option("--order", flags.orders);
  compare->add_option("--lhs", flags.lhs)->required();
  compare->add_option("--rhs", flags.rhs)->required();
  compare->add_option("--certificate", flags.certificate,
                      "Write the comparison certificate (JSON) here; '-' "
                      "for stdout");
  add_format(compare);

  CLI::App* sign =
      app.add_subcommand("sign", "Sign of an element against the identity");
  sign->add_option("--group", flags.group)->required();
  sign->add_option("--order", flags.orders);
  sign->add_option("--elem", flags.elem)->required();
  add_format(sign);

  CLI::App* alpha_cmd = app.add_subcommand(
      "alpha", "Canonical image in the direct product of the factors");
  alpha_cmd->add_option("--group", flags.group)->required();
  alpha_cmd->add_option("--elem", flags.elem)->required();
  add_format(alpha_cmd);

  CLI::App* rho_cmd =
      app.add_subcommand("rho", "Matrix image of a two-factor word");
  rho_cmd->add_option("--group", flags.group)->required();
  rho_cmd->add_option("--elem", flags.elem)->required();
  add_format(rho_cmd);

  CLI::App* braid_act =
      app.add_subcommand("braid-act", "Apply a braid to a free-group word");
  braid_act->add_option("--strands", flags.strands)->required();
  braid_act->add_option("--braid", flags.braid)->required();
  braid_act->add_option("--elem", flags.elem)->required();
  add_format(braid_act);

  CLI::App* braid_check = app.add_subcommand(
      "braid-check", "Test a braid for order preservation on samples");
  braid_check->add_option("--strands", flags.strands)->required();
  braid_check->add_option("--braid", flags.braid)->required();
  braid_check->add_option("--order", flags.orders);
  braid_check->add_option("--max-syllables", flags.max_syllables);
  braid_check->add_option("--exp-bound", flags.exponent_bound);
  add_format(braid_check);

  CLI::App* witness = app.add_subcommand(
      "witness", "Find an element two orderings disagree about");
  witness->add_option("--group", flags.group)->required();
  witness->add_option("--order", flags.orders,
                      "Give twice: the two orderings to distinguish");
  witness->add_option("--max-syllables", flags.witness_max_syllables);
  witness->add_option("--exp-bound", flags.exponent_bound);
  add_format(witness);

  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--max-syllables", flags.max_syllables);
  selftest->add_option("--exp-bound", flags.exponent_bound);
  selftest->add_option("--seed", flags.seed);
  add_format(selftest);

  std::vector<const char*> argv;
  argv.push_back("ordfree");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      return app.exit(e, out, err);
    }
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (compare->parsed()) return cmd_compare(flags, out);
    if (sign->parsed()) return cmd_sign(flags, out);
    if (alpha_cmd->parsed()) return cmd_alpha(flags, out);
    if (rho_cmd->parsed()) return cmd_rho(flags, out);
    if (braid_act->parsed()) return cmd_braid_act(flags, out);
    if (braid_check->parsed()) return cmd_braid_check(flags, out);
    if (witness->parsed()) return cmd_witness(flags, out);
    if (selftest->parsed()) return cmd_selftest(flags, out);
    err << "no command given\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const MissingAnswerError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ordfree
