#pragma once

#include <string>
#include <string_view>

#include "ordfree/braid.hpp"
#include "ordfree/order.hpp"
#include "ordfree/polymat.hpp"

namespace ordfree {

/// Grammar: group := term (('*' | 'x') term)*, term := 'Z' | 'K' |
/// '(' group ')'. '*' builds free products and 'x' direct products; a
/// chain of one operator collects into a single flat node, mixed chains
/// associate left, parentheses force nesting.
Group parse_group(std::string_view text);

/// Grammar: order := 'std' | 'rev' | 'kleft' | 'default'
///   | 'lex(' order {',' order} ')' | 'bergman(' order {',' order} ')'
///   | 'pullback(' order ')' | 'veclex[' row {';' row} ']'
/// with row := '[' int {',' int} ']'. 'default' expands to the standard
/// recipe for the group it lands on. The result is validated against `g`.
Ordering parse_order(std::string_view text, const Group& g);

/// Grammar: element := '1' | atom {'*' atom}, atom := 'x'<digits>
/// ['^' int] | '(' element {',' element} ')'. Generator numbers are the
/// global 1-based leaf numbers shifted by `generator_offset`; tuple atoms
/// are accepted where the context group is a direct product.
Element parse_element(std::string_view text, const Group& g,
                      int generator_offset = 0);

/// Grammar: whitespace-separated letters 's'<digits> or 's'<digits>'^-1'.
BraidWord parse_braid(std::string_view text, int strands);

std::string print_group(const Group& g);
std::string print_order(const Ordering& o);
std::string print_element(const Element& e, const Group& g,
                          int generator_offset = 0);
std::string print_braid(const BraidWord& b);

/// Certificate as JSON: {"entries": [{"leaf": [...], "lhs": "...",
/// "rhs": "...", "verdict": "..."}]}. Elements are printed in the element
/// grammar of the base group the leaf path points at, with global
/// generator numbering.
std::string certificate_to_json(const Certificate& cert, const Ordering& o,
                                const Group& g);
Certificate certificate_from_json(std::string_view json_text,
                                  const Ordering& o, const Group& g);

std::string poly_to_string(const Poly& p, const Group& carrier);
std::string matrix_to_string(const PolyMatrix2& m);

}  // namespace ordfree
