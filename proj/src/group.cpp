#include "ordfree/group.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "ordfree/verdict.hpp"

namespace ordfree {

namespace {

[[noreturn]] void shape_error(const char* what) {
  throw ShapeMismatchError(what);
}

int count_generators(GroupKind kind, const std::vector<Group>& children) {
  switch (kind) {
    case GroupKind::Integers:
      return 1;
    case GroupKind::KleinBottle:
      return 2;
    default: {
      int n = 0;
      for (const auto& c : children) n += c.generator_count();
      return n;
    }
  }
}

}  // namespace

Group::Group(GroupKind kind, std::vector<Group> children)
    : kind_(kind), children_(std::move(children)) {
  generators_ = count_generators(kind_, children_);
}

Group Group::integers() { return Group(GroupKind::Integers, {}); }

Group Group::klein_bottle() { return Group(GroupKind::KleinBottle, {}); }

Group Group::direct_product(std::vector<Group> children) {
  if (children.size() < 2)
    shape_error("direct product needs at least two factors");
  return Group(GroupKind::DirectProduct, std::move(children));
}

Group Group::free_product(std::vector<Group> children) {
  if (children.size() < 2)
    shape_error("free product needs at least two factors");
  return Group(GroupKind::FreeProduct, std::move(children));
}

const Group& Group::child(std::size_t i) const {
  if (i >= children_.size()) shape_error("factor index out of range");
  return children_[i];
}

int Group::generator_offset(std::size_t i) const {
  if (i >= children_.size()) shape_error("factor index out of range");
  int offset = 0;
  for (std::size_t j = 0; j < i; ++j) offset += children_[j].generator_count();
  return offset;
}

bool Group::operator==(const Group& other) const {
  return kind_ == other.kind_ && children_ == other.children_;
}

Element Element::integer(BigInt value) {
  return Element(IntPart{std::move(value)});
}

Element Element::klein(BigInt y_exp, BigInt x_exp) {
  return Element(KleinPart{std::move(y_exp), std::move(x_exp)});
}

Element Element::tuple(std::vector<Element> components) {
  return Element(TuplePart{std::move(components)});
}

Element Element::word(std::vector<Syllable> syllables) {
  return Element(WordPart{std::move(syllables)});
}

const BigInt& Element::int_value() const {
  if (const auto* p = std::get_if<IntPart>(&value_)) return p->value;
  shape_error("expected an Integers element");
}

const Element::KleinPart& Element::klein_part() const {
  if (const auto* p = std::get_if<KleinPart>(&value_)) return *p;
  shape_error("expected a KleinBottle element");
}

const std::vector<Element>& Element::components() const {
  if (const auto* p = std::get_if<TuplePart>(&value_)) return p->components;
  shape_error("expected a DirectProduct element");
}

const std::vector<Syllable>& Element::syllables() const {
  if (const auto* p = std::get_if<WordPart>(&value_)) return p->syllables;
  shape_error("expected a FreeProduct element");
}

bool Element::operator==(const Element& other) const {
  if (value_.index() != other.value_.index()) return false;
  switch (value_.index()) {
    case 0:
      return std::get<IntPart>(value_).value ==
             std::get<IntPart>(other.value_).value;
    case 1: {
      const auto& a = std::get<KleinPart>(value_);
      const auto& b = std::get<KleinPart>(other.value_);
      return a.y_exp == b.y_exp && a.x_exp == b.x_exp;
    }
    case 2:
      return std::get<TuplePart>(value_).components ==
             std::get<TuplePart>(other.value_).components;
    default:
      return std::get<WordPart>(value_).syllables ==
             std::get<WordPart>(other.value_).syllables;
  }
}

bool Syllable::operator==(const Syllable& other) const {
  return factor == other.factor && element == other.element;
}

Element identity(const Group& g) {
  switch (g.kind()) {
    case GroupKind::Integers:
      return Element::integer(0);
    case GroupKind::KleinBottle:
      return Element::klein(0, 0);
    case GroupKind::DirectProduct: {
      std::vector<Element> comps;
      comps.reserve(g.arity());
      for (const auto& c : g.children()) comps.push_back(identity(c));
      return Element::tuple(std::move(comps));
    }
    case GroupKind::FreeProduct:
      return Element::word({});
  }
  shape_error("unknown group kind");
}

bool is_identity(const Element& e) {
  if (e.is_int()) return e.int_value() == 0;
  if (e.is_klein()) {
    const auto& k = e.klein_part();
    return k.y_exp == 0 && k.x_exp == 0;
  }
  if (e.is_tuple()) {
    for (const auto& c : e.components())
      if (!is_identity(c)) return false;
    return true;
  }
  return e.syllables().empty();
}

namespace {

// Appends a syllable to a reduced word, merging with (and possibly
// cancelling) the current last syllable.
void push_syllable(const Group& g, std::vector<Syllable>& out,
                   const Syllable& s) {
  if (s.factor >= g.arity()) shape_error("syllable factor out of range");
  if (is_identity(s.element)) return;
  if (!out.empty() && out.back().factor == s.factor) {
    Element merged = multiply(g.child(s.factor), out.back().element, s.element);
    out.pop_back();
    if (!is_identity(merged)) out.push_back({s.factor, std::move(merged)});
    return;
  }
  out.push_back(s);
}

}  // namespace

Element multiply(const Group& g, const Element& u, const Element& v) {
  switch (g.kind()) {
    case GroupKind::Integers:
      return Element::integer(u.int_value() + v.int_value());
    case GroupKind::KleinBottle: {
      const auto& a = u.klein_part();
      const auto& b = v.klein_part();
      // (y^m x^n)(y^m' x^n') = y^(m + (-1)^n m') x^(n + n')
      BigInt m = a.y_exp + (is_odd(a.x_exp) ? -b.y_exp : b.y_exp);
      return Element::klein(std::move(m), a.x_exp + b.x_exp);
    }
    case GroupKind::DirectProduct: {
      const auto& a = u.components();
      const auto& b = v.components();
      if (a.size() != g.arity() || b.size() != g.arity())
        shape_error("tuple arity does not match the direct product");
      std::vector<Element> comps;
      comps.reserve(a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        comps.push_back(multiply(g.child(i), a[i], b[i]));
      return Element::tuple(std::move(comps));
    }
    case GroupKind::FreeProduct: {
      std::vector<Syllable> out;
      out.reserve(u.syllables().size() + v.syllables().size());
      for (const auto& s : u.syllables()) push_syllable(g, out, s);
      for (const auto& s : v.syllables()) push_syllable(g, out, s);
      return Element::word(std::move(out));
    }
  }
  shape_error("unknown group kind");
}

Element inverse(const Group& g, const Element& u) {
  switch (g.kind()) {
    case GroupKind::Integers:
      return Element::integer(-u.int_value());
    case GroupKind::KleinBottle: {
      const auto& k = u.klein_part();
      // (y^m x^n)^-1 = y^(-(-1)^n m) x^(-n)
      BigInt m = is_odd(k.x_exp) ? k.y_exp : -k.y_exp;
      return Element::klein(std::move(m), -k.x_exp);
    }
    case GroupKind::DirectProduct: {
      std::vector<Element> comps;
      comps.reserve(u.components().size());
      if (u.components().size() != g.arity())
        shape_error("tuple arity does not match the direct product");
      for (std::size_t i = 0; i < u.components().size(); ++i)
        comps.push_back(inverse(g.child(i), u.components()[i]));
      return Element::tuple(std::move(comps));
    }
    case GroupKind::FreeProduct: {
      std::vector<Syllable> out;
      const auto& syls = u.syllables();
      out.reserve(syls.size());
      for (auto it = syls.rbegin(); it != syls.rend(); ++it)
        out.push_back({it->factor, inverse(g.child(it->factor), it->element)});
      return Element::word(std::move(out));
    }
  }
  shape_error("unknown group kind");
}

Element power(const Group& g, const Element& u, const BigInt& exponent) {
  if (exponent == 0) return identity(g);
  Element base = exponent < 0 ? inverse(g, u) : u;
  BigInt e = abs(exponent);
  Element acc = identity(g);
  while (e > 0) {
    if (is_odd(e)) acc = multiply(g, acc, base);
    e >>= 1;
    if (e > 0) base = multiply(g, base, base);
  }
  return acc;
}

Element inject(const Group& g, std::size_t factor, const Element& e) {
  if (!g.is_free_product()) shape_error("inject needs a free product");
  if (factor >= g.arity()) shape_error("factor index out of range");
  if (is_identity(e)) return Element::word({});
  return Element::word({{factor, e}});
}

Element generator(const Group& g, int index, const BigInt& exponent) {
  if (index < 0 || index >= g.generator_count())
    shape_error("generator index out of range");
  switch (g.kind()) {
    case GroupKind::Integers:
      return Element::integer(exponent);
    case GroupKind::KleinBottle:
      return index == 0 ? Element::klein(exponent, 0)
                        : Element::klein(0, exponent);
    case GroupKind::DirectProduct:
    case GroupKind::FreeProduct: {
      int offset = 0;
      for (std::size_t i = 0; i < g.arity(); ++i) {
        int next = offset + g.child(i).generator_count();
        if (index < next) {
          Element inner = generator(g.child(i), index - offset, exponent);
          if (g.is_free_product()) return inject(g, i, inner);
          std::vector<Element> comps;
          comps.reserve(g.arity());
          for (std::size_t j = 0; j < g.arity(); ++j)
            comps.push_back(j == i ? inner : identity(g.child(j)));
          return Element::tuple(std::move(comps));
        }
        offset = next;
      }
      shape_error("generator index out of range");
    }
  }
  shape_error("unknown group kind");
}

Group alpha_target(const Group& free_product) {
  if (!free_product.is_free_product())
    shape_error("alpha needs a free product");
  return Group::direct_product(free_product.children());
}

Element alpha(const Group& free_product, const Element& word) {
  if (!free_product.is_free_product())
    shape_error("alpha needs a free product");
  std::vector<Element> comps;
  comps.reserve(free_product.arity());
  for (const auto& c : free_product.children()) comps.push_back(identity(c));
  for (const auto& s : word.syllables()) {
    if (s.factor >= free_product.arity())
      shape_error("syllable factor out of range");
    comps[s.factor] =
        multiply(free_product.child(s.factor), comps[s.factor], s.element);
  }
  return Element::tuple(std::move(comps));
}

namespace {

void encode_into(const Element& e, std::string& out) {
  if (e.is_int()) {
    out += 'i';
    out += e.int_value().str();
    out += ';';
  } else if (e.is_klein()) {
    const auto& k = e.klein_part();
    out += 'k';
    out += k.y_exp.str();
    out += ',';
    out += k.x_exp.str();
    out += ';';
  } else if (e.is_tuple()) {
    out += 't';
    out += std::to_string(e.components().size());
    out += ':';
    for (const auto& c : e.components()) encode_into(c, out);
    out += ';';
  } else {
    out += 'w';
    out += std::to_string(e.syllables().size());
    out += ':';
    for (const auto& s : e.syllables()) {
      out += '(';
      out += std::to_string(s.factor);
      out += ',';
      encode_into(s.element, out);
      out += ')';
    }
    out += ';';
  }
}

class Decoder {
 public:
  explicit Decoder(const std::string& bytes) : bytes_(bytes) {}

  Element decode_element() {
    switch (take()) {
      case 'i': {
        BigInt v = take_int();
        expect(';');
        return Element::integer(std::move(v));
      }
      case 'k': {
        BigInt m = take_int();
        expect(',');
        BigInt n = take_int();
        expect(';');
        return Element::klein(std::move(m), std::move(n));
      }
      case 't': {
        std::size_t n = take_count();
        expect(':');
        std::vector<Element> comps;
        comps.reserve(n);
        for (std::size_t i = 0; i < n; ++i) comps.push_back(decode_element());
        expect(';');
        return Element::tuple(std::move(comps));
      }
      case 'w': {
        std::size_t n = take_count();
        expect(':');
        std::vector<Syllable> syls;
        syls.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
          expect('(');
          std::size_t factor = take_count();
          expect(',');
          Element el = decode_element();
          expect(')');
          syls.push_back({factor, std::move(el)});
        }
        expect(';');
        return Element::word(std::move(syls));
      }
      default:
        fail();
    }
  }

  void expect_end() {
    if (pos_ != bytes_.size()) fail();
  }

 private:
  [[noreturn]] void fail() const {
    throw Error("malformed element encoding");
  }
  char take() {
    if (pos_ >= bytes_.size()) fail();
    return bytes_[pos_++];
  }
  void expect(char c) {
    if (take() != c) fail();
  }
  BigInt take_int() {
    std::size_t start = pos_;
    if (pos_ < bytes_.size() && bytes_[pos_] == '-') ++pos_;
    while (pos_ < bytes_.size() && std::isdigit(
               static_cast<unsigned char>(bytes_[pos_])))
      ++pos_;
    if (pos_ == start) fail();
    return BigInt(bytes_.substr(start, pos_ - start));
  }
  std::size_t take_count() {
    BigInt v = take_int();
    if (v < 0) fail();
    return static_cast<std::size_t>(v);
  }

  const std::string& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string encode(const Element& e) {
  std::string out;
  encode_into(e, out);
  return out;
}

Element decode(const std::string& bytes) {
  Decoder d(bytes);
  Element e = d.decode_element();
  d.expect_end();
  return e;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Less:
      return "Less";
    case Verdict::Equal:
      return "Equal";
    default:
      return "Greater";
  }
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Negative:
      return "Negative";
    case Sign::Zero:
      return "Zero";
    default:
      return "Positive";
  }
}

}  // namespace ordfree
