#include "ordfree/io.hpp"

#include <cctype>
#include <optional>

#include <json.hpp>

namespace ordfree {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  bool try_take(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_take(c))
      fail(std::string("expected '") + c + "'");
  }

  std::string take_identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  BigInt take_integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// --------------------------------------------------------------------------
// Groups

Group parse_group_expr(Cursor& c);

Group parse_group_term(Cursor& c) {
  if (c.try_take('(')) {
    Group g = parse_group_expr(c);
    c.expect(')');
    return g;
  }
  char ch = c.peek();
  if (ch == 'Z') {
    c.try_take('Z');
    return Group::integers();
  }
  if (ch == 'K') {
    c.try_take('K');
    return Group::klein_bottle();
  }
  c.fail("expected 'Z', 'K' or '('");
}

Group make_product(char op, std::vector<Group> children) {
  return op == '*' ? Group::free_product(std::move(children))
                   : Group::direct_product(std::move(children));
}

Group parse_group_expr(Cursor& c) {
  Group first = parse_group_term(c);
  std::vector<Group> run{first};
  std::optional<char> run_op;
  while (true) {
    char op;
    if (c.try_take('*'))
      op = '*';
    else if (c.try_take('x'))
      op = 'x';
    else
      break;
    Group next = parse_group_term(c);
    if (!run_op || *run_op == op) {
      run_op = op;
      run.push_back(std::move(next));
    } else {
      // Mixed operators associate left; the finished run becomes the
      // first factor of a fresh chain.
      Group combined = make_product(*run_op, std::move(run));
      run = {std::move(combined), std::move(next)};
      run_op = op;
    }
  }
  if (!run_op) return first;
  return make_product(*run_op, std::move(run));
}

// --------------------------------------------------------------------------
// Orderings

Ordering parse_order_expr(Cursor& c, const Group* ctx) {
  if (c.peek() == 'v') {
    std::string word = c.take_identifier();
    if (word != "veclex") c.fail("unknown ordering '" + word + "'");
    c.expect('[');
    std::vector<std::vector<BigInt>> rows;
    do {
      c.expect('[');
      std::vector<BigInt> row;
      do {
        row.push_back(c.take_integer());
      } while (c.try_take(','));
      c.expect(']');
      rows.push_back(std::move(row));
    } while (c.try_take(';'));
    c.expect(']');
    return Ordering::vec_lex(std::move(rows));
  }

  std::string word = c.take_identifier();
  if (word == "std") return Ordering::int_std();
  if (word == "rev") return Ordering::int_rev();
  if (word == "kleft") return Ordering::klein_left();
  if (word == "default") {
    if (!ctx)
      c.fail("'default' needs a group of matching shape here");
    return Ordering::standard(*ctx);
  }
  if (word == "lex" || word == "bergman") {
    c.expect('(');
    std::vector<Ordering> children;
    bool ctx_usable = ctx && (word == "lex" ? ctx->is_direct_product()
                                            : ctx->is_free_product());
    do {
      const Group* child_ctx =
          ctx_usable && children.size() < ctx->arity()
              ? &ctx->child(children.size())
              : nullptr;
      children.push_back(parse_order_expr(c, child_ctx));
    } while (c.try_take(','));
    c.expect(')');
    return word == "lex" ? Ordering::lex(std::move(children))
                         : Ordering::bergman(std::move(children));
  }
  if (word == "pullback") {
    c.expect('(');
    std::optional<Group> product;
    if (ctx && ctx->is_free_product() && ctx->arity() == 2)
      product = Group::direct_product(ctx->children());
    Ordering inner = parse_order_expr(c, product ? &*product : nullptr);
    c.expect(')');
    return Ordering::product_pullback(std::move(inner));
  }
  c.fail("unknown ordering '" + word + "'");
}

// --------------------------------------------------------------------------
// Elements

Element parse_element_expr(Cursor& c, const Group& g, int offset);

Element parse_element_atom(Cursor& c, const Group& g, int offset) {
  if (c.try_take('1')) return identity(g);
  if (c.try_take('(')) {
    if (!g.is_direct_product())
      c.fail("tuple syntax needs a direct product here");
    std::vector<Element> comps;
    for (std::size_t i = 0; i < g.arity(); ++i) {
      if (i > 0) c.expect(',');
      comps.push_back(parse_element_expr(c, g.child(i),
                                         offset + g.generator_offset(i)));
    }
    c.expect(')');
    return Element::tuple(std::move(comps));
  }
  if (c.try_take('x')) {
    BigInt number = c.take_integer();
    if (number < 1 || number > g.generator_count() + offset)
      c.fail("generator x" + number.str() + " is not in this group");
    int local = static_cast<int>(number) - 1 - offset;
    if (local < 0)
      c.fail("generator x" + number.str() + " is not in this group");
    BigInt exponent = 1;
    if (c.try_take('^')) exponent = c.take_integer();
    return generator(g, local, exponent);
  }
  c.fail("expected '1', a generator or a tuple");
}

Element parse_element_expr(Cursor& c, const Group& g, int offset) {
  Element acc = parse_element_atom(c, g, offset);
  while (c.try_take('*'))
    acc = multiply(g, acc, parse_element_atom(c, g, offset));
  return acc;
}

std::string generator_name(int index) {
  return "x" + std::to_string(index + 1);
}

std::string power_string(int generator_index, const BigInt& exponent) {
  std::string s = generator_name(generator_index);
  if (exponent != 1) {
    s += '^';
    s += exponent.str();
  }
  return s;
}

void print_element_into(const Element& e, const Group& g, int offset,
                        bool allow_tuple, std::vector<std::string>& parts);

std::string print_element_impl(const Element& e, const Group& g, int offset,
                               bool allow_tuple) {
  std::vector<std::string> parts;
  print_element_into(e, g, offset, allow_tuple, parts);
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out += '*';
    out += parts[i];
  }
  return out;
}

void print_element_into(const Element& e, const Group& g, int offset,
                        bool allow_tuple, std::vector<std::string>& parts) {
  switch (g.kind()) {
    case GroupKind::Integers:
      if (e.int_value() != 0) parts.push_back(power_string(offset, e.int_value()));
      return;
    case GroupKind::KleinBottle: {
      const auto& k = e.klein_part();
      if (k.y_exp != 0) parts.push_back(power_string(offset, k.y_exp));
      if (k.x_exp != 0) parts.push_back(power_string(offset + 1, k.x_exp));
      return;
    }
    case GroupKind::DirectProduct: {
      const auto& comps = e.components();
      if (comps.size() != g.arity())
        throw ShapeMismatchError("tuple arity does not match the group");
      if (allow_tuple) {
        std::string out = "(";
        for (std::size_t i = 0; i < comps.size(); ++i) {
          if (i > 0) out += ", ";
          out += print_element_impl(comps[i], g.child(i),
                                    offset + g.generator_offset(i), true);
        }
        out += ")";
        parts.push_back(std::move(out));
        return;
      }
      for (std::size_t i = 0; i < comps.size(); ++i)
        print_element_into(comps[i], g.child(i),
                           offset + g.generator_offset(i), false, parts);
      return;
    }
    case GroupKind::FreeProduct: {
      for (const auto& s : e.syllables())
        print_element_into(s.element, g.child(s.factor),
                           offset + g.generator_offset(s.factor), false,
                           parts);
      return;
    }
  }
}

}  // namespace

Group parse_group(std::string_view text) {
  Cursor c(text);
  Group g = parse_group_expr(c);
  c.expect_end();
  return g;
}

Ordering parse_order(std::string_view text, const Group& g) {
  Cursor c(text);
  Ordering o = parse_order_expr(c, &g);
  c.expect_end();
  validate(o, g);
  return o;
}

Element parse_element(std::string_view text, const Group& g,
                      int generator_offset) {
  Cursor c(text);
  Element e = parse_element_expr(c, g, generator_offset);
  c.expect_end();
  return e;
}

BraidWord parse_braid(std::string_view text, int strands) {
  Cursor c(text);
  BraidWord b;
  b.strands = strands;
  while (!c.at_end()) {
    if (!c.try_take('s')) c.fail("expected a braid letter 's<i>'");
    BigInt number = c.take_integer();
    if (number < 1 || number > strands - 1)
      c.fail("braid letter s" + number.str() + " is out of range");
    int sign = 1;
    if (c.try_take('^')) {
      BigInt e = c.take_integer();
      if (e != -1 && e != 1)
        c.fail("braid letters carry exponent 1 or -1 only");
      sign = e < 0 ? -1 : 1;
    }
    b.letters.emplace_back(static_cast<int>(number), sign);
  }
  validate(b);
  return b;
}

std::string print_group(const Group& g) {
  switch (g.kind()) {
    case GroupKind::Integers:
      return "Z";
    case GroupKind::KleinBottle:
      return "K";
    case GroupKind::DirectProduct:
    case GroupKind::FreeProduct: {
      char op = g.is_free_product() ? '*' : 'x';
      std::string out;
      for (std::size_t i = 0; i < g.arity(); ++i) {
        if (i > 0) out += op;
        const Group& child = g.child(i);
        std::string s = print_group(child);
        if (child.arity() > 0) s = "(" + s + ")";
        out += s;
      }
      return out;
    }
  }
  throw ShapeMismatchError("unknown group kind");
}

std::string print_order(const Ordering& o) {
  switch (o.kind()) {
    case OrderKind::IntStd:
      return "std";
    case OrderKind::IntRev:
      return "rev";
    case OrderKind::KleinLeft:
      return "kleft";
    case OrderKind::Lex:
    case OrderKind::Bergman: {
      std::string out = o.kind() == OrderKind::Lex ? "lex(" : "bergman(";
      for (std::size_t i = 0; i < o.children().size(); ++i) {
        if (i > 0) out += ',';
        out += print_order(o.child(i));
      }
      out += ')';
      return out;
    }
    case OrderKind::ProductPullback:
      return "pullback(" + print_order(o.child(0)) + ")";
    case OrderKind::VecLex: {
      std::string out = "veclex[";
      for (std::size_t r = 0; r < o.rows().size(); ++r) {
        if (r > 0) out += ';';
        out += '[';
        for (std::size_t i = 0; i < o.rows()[r].size(); ++i) {
          if (i > 0) out += ',';
          out += o.rows()[r][i].str();
        }
        out += ']';
      }
      out += ']';
      return out;
    }
  }
  throw ShapeMismatchError("unknown ordering kind");
}

std::string print_element(const Element& e, const Group& g,
                          int generator_offset) {
  return print_element_impl(e, g, generator_offset, true);
}

std::string print_braid(const BraidWord& b) {
  std::string out;
  for (const auto& [index, sign] : b.letters) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(index);
    if (sign < 0) out += "^-1";
  }
  return out;
}

// --------------------------------------------------------------------------
// Certificates

std::string certificate_to_json(const Certificate& cert, const Ordering& o,
                                const Group& g) {
  nlohmann::ordered_json out;
  out["entries"] = nlohmann::ordered_json::array();
  for (const auto& entry : cert.entries()) {
    LeafInfo info = leaf_at(o, g, entry.leaf);
    nlohmann::ordered_json item;
    item["leaf"] = entry.leaf;
    item["lhs"] = print_element(entry.lhs, info.group, info.generator_offset);
    item["rhs"] = print_element(entry.rhs, info.group, info.generator_offset);
    item["verdict"] = to_string(entry.verdict);
    out["entries"].push_back(std::move(item));
  }
  return out.dump(2);
}

namespace {

Verdict verdict_from_string(const std::string& s) {
  if (s == "Less") return Verdict::Less;
  if (s == "Equal") return Verdict::Equal;
  if (s == "Greater") return Verdict::Greater;
  throw Error("unknown verdict '" + s + "'");
}

}  // namespace

Certificate certificate_from_json(std::string_view json_text,
                                  const Ordering& o, const Group& g) {
  nlohmann::json parsed = nlohmann::json::parse(json_text);
  Certificate cert;
  for (const auto& item : parsed.at("entries")) {
    LeafPath leaf = item.at("leaf").get<LeafPath>();
    LeafInfo info = leaf_at(o, g, leaf);
    Element lhs = parse_element(item.at("lhs").get<std::string>(), info.group,
                                info.generator_offset);
    Element rhs = parse_element(item.at("rhs").get<std::string>(), info.group,
                                info.generator_offset);
    cert.add(leaf, lhs, rhs,
             verdict_from_string(item.at("verdict").get<std::string>()));
  }
  return cert;
}

// --------------------------------------------------------------------------
// Matrices

namespace {

std::string ring_to_string(const RingElement& r, const Group& carrier) {
  if (r.is_zero()) return "0";
  std::string out;
  for (const auto& [key, term] : r.terms()) {
    const BigInt& coeff = term.coeff;
    BigInt magnitude = abs(coeff);
    std::string piece;
    if (is_identity(term.key)) {
      piece = magnitude.str();
    } else {
      std::string key_str = print_element(term.key, carrier);
      if (magnitude == 1)
        piece = key_str;
      else
        piece = magnitude.str() + "*" + key_str;
    }
    if (out.empty())
      out = (coeff < 0 ? "-" : "") + piece;
    else
      out += (coeff < 0 ? " - " : " + ") + piece;
  }
  return out;
}

}  // namespace

std::string poly_to_string(const Poly& p, const Group& carrier) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= p.degree(); ++d) {
    const RingElement& c = p.coeff(d);
    if (c.is_zero()) continue;
    std::string piece = ring_to_string(c, carrier);
    if (d > 0) {
      if (c.term_count() > 1 || piece.find('-') != std::string::npos)
        piece = "(" + piece + ")";
      piece += "*t";
      if (d > 1) piece += "^" + std::to_string(d);
    }
    if (!out.empty()) out += " + ";
    out += piece;
  }
  return out;
}

std::string matrix_to_string(const PolyMatrix2& m) {
  const Group& carrier = m.carrier();
  std::string e11 = poly_to_string(m.e11(), carrier);
  std::string e12 = poly_to_string(m.e12(), carrier);
  std::string e21 = poly_to_string(m.e21(), carrier);
  std::string e22 = poly_to_string(m.e22(), carrier);
  return "[ " + e11 + " | " + e12 + " ]\n[ " + e21 + " | " + e22 + " ]";
}

}  // namespace ordfree
