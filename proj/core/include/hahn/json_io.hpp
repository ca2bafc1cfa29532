#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hahn/bessel_cone.hpp"
#include "hahn/fredholm.hpp"
#include "hahn/meromorphic.hpp"
#include "hahn/series.hpp"

namespace hahn::json {

using nlohmann::json;

/// [p, q]; integers beyond 64 bits are written as decimal strings.
json rational_to_json(const Rational& r);
/// Accepts [p, q], an integer, or a string such as "3/4" or "0.25".
Rational rational_from_json(const json& j);

json generator_to_json(const GeneratorEnclosure& g);
GeneratorEnclosure generator_from_json(const json& j);

json group_to_json(const ExponentGroup& g);
GroupPtr group_from_json(const json& j);

json exponent_to_json(const Exponent& e);
Exponent exponent_from_json(const GroupPtr& group, const json& j);

json validity_to_json(const Validity& v);
Validity validity_from_json(const GroupPtr& group, const json& j);

template <class C>
struct CoeffCodec;

template <>
struct CoeffCodec<Rational> {
  static constexpr const char* ring = "rational";
  static json encode(const Rational& c) { return rational_to_json(c); }
  static Rational decode(const json& j) { return rational_from_json(j); }
};

template <>
struct CoeffCodec<Complex> {
  static constexpr const char* ring = "complex";
  static json encode(const Complex& c) { return json::array({c.real(), c.imag()}); }
  static Complex decode(const json& j);
};

template <class T>
struct CoeffCodec<SquareMatrix<T>> {
  static constexpr const char* ring = std::is_same_v<T, Complex> ? "complex_matrix" : "rational_matrix";
  static json encode(const SquareMatrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(CoeffCodec<T>::encode(m(i, j)));
      rows.push_back(std::move(row));
    }
    return rows;
  }
  static SquareMatrix<T> decode(const json& j) {
    if (!j.is_array() || j.empty()) throw HahnError(ErrorKind::ParseError, "matrix coefficient must be a nested array");
    SquareMatrix<T> m(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_array() || j[i].size() != j.size())
        throw HahnError(ErrorKind::ParseError, "matrix coefficient must be square");
      for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = CoeffCodec<T>::decode(j[i][k]);
    }
    return m;
  }
};

/// Ring tag of a series document ("rational", "complex", ...).
std::string ring_of(const json& doc);

template <class C>
json series_to_json(const Series<C>& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", exponent_to_json(e)}, {"coeff", CoeffCodec<C>::encode(c)}});
  json doc = {{"ring", CoeffCodec<C>::ring},
              {"group", group_to_json(*s.group())},
              {"valid_below", validity_to_json(s.validity())},
              {"terms", std::move(terms)}};
  if constexpr (!std::is_same_v<C, Rational> && !std::is_same_v<C, Complex>) doc["dim"] = s.zero_element().dim();
  return doc;
}

template <class C>
Series<C> series_from_json(const json& doc) {
  try {
    const std::string ring = doc.value("ring", std::string(CoeffCodec<C>::ring));
    if (ring != CoeffCodec<C>::ring)
      throw HahnError(ErrorKind::ParseError, "expected ring '" + std::string(CoeffCodec<C>::ring) + "', got '" + ring + "'");
    const GroupPtr group = group_from_json(doc.at("group"));
    const Validity validity = validity_from_json(group, doc.contains("valid_below") ? doc.at("valid_below") : json());
    std::vector<typename Series<C>::Term> terms;
    for (const json& t : doc.at("terms"))
      terms.emplace_back(exponent_from_json(group, t.at("exp")), CoeffCodec<C>::decode(t.at("coeff")));
    C zero = C(0);
    if constexpr (!std::is_same_v<C, Rational> && !std::is_same_v<C, Complex>) zero = C(doc.at("dim").get<std::size_t>());
    return Series<C>::from_terms(group, std::move(terms), validity, zero);
  } catch (const nlohmann::json::exception& e) {
    throw HahnError(ErrorKind::ParseError, e.what());
  }
}

template <class C>
json meromorphic_to_json(const Meromorphic<C>& m) {
  return {{"pivot", exponent_to_json(m.pivot)}, {"unit", series_to_json(m.unit)}};
}

template <class C>
json matrix_series_to_json(const MatrixSeries<C>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(series_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", std::move(rows)}};
}

template <class C>
MatrixSeries<C> matrix_series_from_json(const json& doc) {
  try {
    const std::size_t n = doc.at("dim").get<std::size_t>();
    const json& rows = doc.at("entries");
    if (rows.size() != n) throw HahnError(ErrorKind::ParseError, "entries must have dim rows");
    std::vector<Series<C>> entries;
    for (const json& row : rows) {
      if (row.size() != n) throw HahnError(ErrorKind::ParseError, "entries must have dim columns");
      for (const json& s : row) entries.push_back(series_from_json<C>(s));
    }
    return {n, std::move(entries)};
  } catch (const nlohmann::json::exception& e) {
    throw HahnError(ErrorKind::ParseError, e.what());
  }
}

json kernel_expansion_to_json(const KernelExpansion& k);
json bound_report_to_json(const BoundReport& r);
json suitability_report_to_json(const SuitabilityReport& r);
json support_report_to_json(const SupportReport& r);
json hs_report_to_json(const HsReport& r);
json error_to_json(const HahnError& e);

}  // namespace hahn::json
