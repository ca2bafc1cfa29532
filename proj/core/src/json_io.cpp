#include "hahn/json_io.hpp"

#include <limits>

namespace hahn::json {
namespace {

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (denominator(r) != 1) throw HahnError(ErrorKind::ParseError, "expected an integer");
    return numerator(r);
  }
  throw HahnError(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

}  // namespace

json rational_to_json(const Rational& r) {
  return json::array({integer_to_json(numerator(r)), integer_to_json(denominator(r))});
}

Rational rational_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw HahnError(ErrorKind::ParseError, "rational must be [p, q]");
    const Integer q = integer_from_json(j[1]);
    if (q == 0) throw HahnError(ErrorKind::ParseError, "zero denominator");
    return Rational(integer_from_json(j[0]), q);
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw HahnError(ErrorKind::ParseError, "expected a rational, got " + j.dump());
}

Complex CoeffCodec<Complex>::decode(const json& j) {
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_number()) return {j.get<double>(), 0.0};
  throw HahnError(ErrorKind::ParseError, "complex coefficient must be [re, im], got " + j.dump());
}

json generator_to_json(const GeneratorEnclosure& g) {
  return {{"midpoint", rational_to_json(g.midpoint())},
          {"radius", rational_to_json(g.radius())},
          {"declared_rational", g.declared_rational()}};
}

GeneratorEnclosure generator_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "pi") return GeneratorEnclosure::pi();
    throw HahnError(ErrorKind::ParseError, "unknown generator name " + j.dump());
  }
  const Rational mid = rational_from_json(j.at("midpoint"));
  if (j.value("declared_rational", false)) return GeneratorEnclosure::exact(mid);
  return GeneratorEnclosure::interval(mid, rational_from_json(j.at("radius")));
}

json group_to_json(const ExponentGroup& g) {
  auto first = [&]() -> json {
    if (g.first_kind() == GroupKind::RationalLine) return {{"kind", "rational"}};
    return {{"kind", "generator"}, {"generator", generator_to_json(*g.declared_generator())}};
  };
  if (!g.is_lex_pair()) return first();
  return {{"kind", "lex"}, {"first", first()}, {"beta_denominator", g.beta_denominator()}};
}

GroupPtr group_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return ExponentGroup::rational_line();
    if (kind == "generator") return ExponentGroup::with_generator(generator_from_json(j.at("generator")));
    if (kind == "lex") {
      const GroupPtr first = j.contains("first") ? group_from_json(j.at("first")) : ExponentGroup::rational_line();
      return ExponentGroup::lex_pair(first, j.value("beta_denominator", std::int64_t{1}));
    }
    throw HahnError(ErrorKind::ParseError, "unknown group kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw HahnError(ErrorKind::ParseError, e.what());
  }
}

namespace {

json first_component_to_json(const Exponent& e) {
  json out = {{"a", rational_to_json(e.a())}};
  if (e.group()->generator()) out["b"] = rational_to_json(e.b());
  return out;
}

std::pair<Rational, Rational> first_component_from_json(const json& j) {
  if (!j.is_object()) return {rational_from_json(j), Rational(0)};
  const Rational a = rational_from_json(j.at("a"));
  const Rational b = j.contains("b") ? rational_from_json(j.at("b")) : Rational(0);
  return {a, b};
}

}  // namespace

json exponent_to_json(const Exponent& e) {
  if (!e.group()->is_lex_pair()) return first_component_to_json(e);
  return {{"alpha", first_component_to_json(e)}, {"beta", e.beta()}};
}

Exponent exponent_from_json(const GroupPtr& group, const json& j) {
  try {
    if (group->is_lex_pair()) {
      const auto [a, b] = first_component_from_json(j.at("alpha"));
      return Exponent::lex(group, a, b, j.at("beta").get<std::int64_t>());
    }
    const auto [a, b] = first_component_from_json(j);
    return Exponent::real(group, a, b);
  } catch (const nlohmann::json::exception& e) {
    throw HahnError(ErrorKind::ParseError, e.what());
  }
}

json validity_to_json(const Validity& v) { return v.is_exact() ? json(nullptr) : exponent_to_json(v.bound()); }

Validity validity_from_json(const GroupPtr& group, const json& j) {
  if (j.is_null()) return Validity::exact();
  return Validity::below(exponent_from_json(group, j));
}

std::string ring_of(const json& doc) {
  if (!doc.is_object()) throw HahnError(ErrorKind::ParseError, "series document must be an object");
  return doc.value("ring", std::string("rational"));
}

json kernel_expansion_to_json(const KernelExpansion& k) {
  json support = json::array();
  for (const auto& [e, c] : k.series.terms()) support.push_back(exponent_to_json(e));
  return {{"nu", k.nu.to_string()},          {"nu_value", k.nu.value()},
          {"x", k.x},                         {"y", k.y},
          {"branch", to_string(k.branch)},    {"terms", k.terms},
          {"support", std::move(support)},    {"series", series_to_json(k.series)}};
}

json bound_report_to_json(const BoundReport& r) {
  return {{"part", to_string(r.part)}, {"k", r.k}, {"R", r.R}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}};
}

json suitability_report_to_json(const SuitabilityReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"order", w.order}, {"nu", w.nu}, {"value", w.value}});
  return {{"sup_observed", r.sup_observed},
          {"pass", r.pass},
          {"witnesses", std::move(witnesses)},
          {"non_integer_count", r.non_integer_count},
          {"gap_checked", r.gap_checked},
          {"gap_violations", r.gap_violations},
          {"bound_one_violations", r.bound_one_violations},
          {"bound_three_halves_violations", r.bound_three_halves_violations}};
}

json support_report_to_json(const SupportReport& r) {
  return {{"negative_exponents", r.negative_exponents},
          {"contains_nu_zero", r.contains_nu_zero},
          {"holomorphic", r.holomorphic},
          {"structure_ok", r.structure_ok},
          {"total_terms", r.total_terms}};
}

json hs_report_to_json(const HsReport& r) {
  return {{"quadrature", r.quadrature}, {"tail", r.tail},   {"lhs", r.lhs},
          {"constant", r.constant},     {"rhs", r.rhs},     {"pass", r.pass},
          {"nodes", r.nodes},           {"assembly", r.assembly}};
}

json error_to_json(const HahnError& e) {
  return {{"error", to_string(e.kind())}, {"message", e.what()}};
}

}  // namespace hahn::json
