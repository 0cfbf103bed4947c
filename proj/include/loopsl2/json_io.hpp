#pragma once

// Interchange formats:
//   ModuleElement  {"terms":[{"exps":[int,...],"coeff":"p/q"},...]}
//   SymElement     {"n":int,"terms":[{"gamma":[int,...],"coeff":"p/q"},...]}
//   Laurent in t   {"terms":[{"k":int,"coeff":"p/q"},...]}
//   ExpFunction    {"roots":["p/q",...]}
// Output terms are in lexicographic key order; exps nondecreasing, gamma
// nonincreasing, coefficients in lowest terms.

#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "loopsl2/expmod.hpp"

namespace loopsl2 {

using json = nlohmann::ordered_json;

namespace detail {

inline Rational coeff_from_json(const json& j)
{
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(Integer(std::to_string(j.get<long long>())));
  throw parse_error("coefficient must be a \"p/q\" string");
}

inline std::vector<Index> ints_from_json(const json& j, const char* what)
{
  if (!j.is_array())
    throw parse_error(std::string(what) + " must be an array of integers");
  std::vector<Index> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw parse_error(std::string(what) + " must be an array of integers");
    out.push_back(v.get<Index>());
  }
  return out;
}

inline const json& terms_array(const json& j)
{
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw parse_error("expected an object with a \"terms\" array");
  return j.at("terms");
}

inline const json& field(const json& j, const char* name)
{
  if (!j.is_object() || !j.contains(name))
    throw parse_error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

} // namespace detail

inline json to_json(const ModuleElement& x)
{
  json terms = json::array();
  for (const auto& [mono, coeff] : x)
    terms.push_back({{"exps", mono.exponent_vector()}, {"coeff", to_string(coeff)}});
  return {{"terms", terms}};
}

inline ModuleElement module_element_from_json(const json& j)
{
  ModuleElement out;
  for (const auto& t : detail::terms_array(j))
    out.add(FMonomial(detail::ints_from_json(detail::field(t, "exps"), "exps")),
            detail::coeff_from_json(detail::field(t, "coeff")));
  return out;
}

inline json to_json(const SymElement& p)
{
  json terms = json::array();
  for (const auto& [gamma, coeff] : p.terms())
    terms.push_back({{"gamma", gamma}, {"coeff", to_string(coeff)}});
  return {{"n", p.arity()}, {"terms", terms}};
}

inline SymElement sym_element_from_json(const json& j)
{
  const json& n = detail::field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1)
    throw parse_error("\"n\" must be a positive integer");
  SymElement out(n.get<std::size_t>());
  for (const auto& t : detail::terms_array(j))
    out.add(detail::ints_from_json(detail::field(t, "gamma"), "gamma"),
            detail::coeff_from_json(detail::field(t, "coeff")));
  return out;
}

inline json to_json(const LaurentT& p)
{
  json terms = json::array();
  for (const auto& [k, coeff] : p)
    terms.push_back({{"k", k}, {"coeff", to_string(coeff)}});
  return {{"terms", terms}};
}

inline LaurentT laurent_t_from_json(const json& j)
{
  LaurentT out;
  for (const auto& t : detail::terms_array(j)) {
    const json& k = detail::field(t, "k");
    if (!k.is_number_integer())
      throw parse_error("\"k\" must be an integer");
    out.add(k.get<Index>(), detail::coeff_from_json(detail::field(t, "coeff")));
  }
  return out;
}

inline json to_json(const ExpFunction& phi)
{
  json roots = json::array();
  for (const auto& a : phi.roots())
    roots.push_back(to_string(a));
  return {{"roots", roots}};
}

inline ExpFunction exp_function_from_json(const json& j)
{
  const json& roots = detail::field(j, "roots");
  if (!roots.is_array())
    throw parse_error("\"roots\" must be an array");
  std::vector<Rational> values;
  for (const auto& r : roots)
    values.push_back(detail::coeff_from_json(r));
  return ExpFunction(std::move(values));
}

// "e:0 f:3 f:1"; the empty string is the empty word.
inline Word parse_word(std::string_view text)
{
  Word word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto colon = token.find(':');
    if (colon != 1)
      throw parse_error("malformed word letter '" + token + "' (expected kind:index)");
    Generator kind;
    switch (token[0]) {
    case 'e':
      kind = Generator::e;
      break;
    case 'h':
      kind = Generator::h;
      break;
    case 'f':
      kind = Generator::f;
      break;
    default:
      throw parse_error("unknown generator '" + token.substr(0, 1) + "' in word");
    }
    std::string idx = token.substr(2);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(idx, &used);
    } catch (const std::exception&) {
      throw parse_error("malformed index in word letter '" + token + "'");
    }
    if (used != idx.size())
      throw parse_error("malformed index in word letter '" + token + "'");
    word.push_back({kind, static_cast<Index>(value)});
  }
  return word;
}

inline std::string to_string(const Word& word)
{
  std::string out;
  for (const auto& l : word) {
    if (!out.empty())
      out += ' ';
    out += (l.kind == Generator::e ? 'e' : l.kind == Generator::h ? 'h' : 'f');
    out += ':' + std::to_string(l.index);
  }
  return out;
}

// Comma-separated lists such as "1,-1" or "3/2,2".
inline std::vector<Rational> parse_rational_list(std::string_view text)
{
  std::vector<Rational> out;
  if (text.empty())
    return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

inline std::vector<Index> parse_index_list(std::string_view text)
{
  std::vector<Index> out;
  for (const auto& r : parse_rational_list(text)) {
    if (r.get_den() != 1 || !r.get_num().fits_slong_p())
      throw parse_error("expected integers in list '" + std::string(text) + "'");
    out.push_back(r.get_num().get_si());
  }
  return out;
}

} // namespace loopsl2
