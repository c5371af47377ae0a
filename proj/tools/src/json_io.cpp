#include "grassline/tools/json_io.hpp"

#include <string>

namespace grassline::tools {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_from_json(const json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<int>();
}

template <class T, class F>
Matrix<T> matrix_from_json(const json& j, F entry) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = entry(j[i][k]);
  }
  return m;
}

json labeled(const std::string& label, const QMatrix& m) {
  return {{"label", label}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", to_json(m)}};
}

std::map<std::string, QMatrix> read_maps(const json& j) {
  std::map<std::string, QMatrix> out;
  const json& maps = field(j, "maps");
  if (!maps.is_array()) bad("\"maps\" must be an array");
  for (const json& m : maps) {
    const json& label = field(m, "label");
    if (!label.is_string()) bad("map label must be a string");
    const int rows = int_from_json(field(m, "rows"), "rows");
    const int cols = int_from_json(field(m, "cols"), "cols");
    QMatrix q = m.contains("entries") && !m.at("entries").empty() ? qmatrix_from_json(m.at("entries"))
                                                                  : QMatrix(rows, cols);
    if (static_cast<int>(q.rows()) != rows || (rows > 0 && static_cast<int>(q.cols()) != cols))
      bad("map " + label.get<std::string>() + " does not match its declared shape");
    if (rows == 0) q = QMatrix(0, cols);
    if (!out.emplace(label.get<std::string>(), q).second) bad("duplicate map " + label.get<std::string>());
  }
  return out;
}

// "B1@3" -> 3
std::optional<int> degree_label(const std::string& label, const std::string& prefix) {
  if (label.rfind(prefix + "@", 0) != 0) return std::nullopt;
  try {
    std::size_t used = 0;
    const std::string rest = label.substr(prefix.size() + 1);
    const int k = std::stoi(rest, &used);
    if (used != rest.size()) return std::nullopt;
    return k;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("rational must be a string or an integer");
}

json to_json(const Rational& q) { return format_rational(q); }

QMatrix qmatrix_from_json(const json& j) { return matrix_from_json<Rational>(j, rational_from_json); }

json to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

template <std::size_t N>
Matrix<LaurentPoly<N>> laurent_from_json(const json& j, const VarNames<N>& vars) {
  return matrix_from_json<LaurentPoly<N>>(j, [&](const json& e) {
    if (e.is_number_integer()) return LaurentPoly<N>(Rational(e.get<long>()));
    if (!e.is_string()) bad("polynomial entries must be strings");
    return parse_poly<N>(e.get<std::string>(), vars);
  });
}

template <std::size_t N>
json to_json(const Matrix<LaurentPoly<N>>& m, const VarNames<N>& vars) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(format_poly(m(i, k), vars));
    out.push_back(row);
  }
  return out;
}

template Matrix<LaurentPoly<1>> laurent_from_json<1>(const json&, const VarNames<1>&);
template Matrix<LaurentPoly<2>> laurent_from_json<2>(const json&, const VarNames<2>&);
template Matrix<LaurentPoly<3>> laurent_from_json<3>(const json&, const VarNames<3>&);
template json to_json<1>(const Matrix<LaurentPoly<1>>&, const VarNames<1>&);
template json to_json<2>(const Matrix<LaurentPoly<2>>&, const VarNames<2>&);
template json to_json<3>(const Matrix<LaurentPoly<3>>&, const VarNames<3>&);

LoopElement loop_from_json(const json& j) { return LoopElement(laurent_from_json<1>(j, kVarT)); }
json to_json(const LoopElement& g) { return to_json(g.matrix(), kVarT); }

Coweight coweight_from_json(const json& j) {
  if (!j.is_array()) bad("coweight must be an integer array");
  std::vector<int> v;
  for (const json& x : j) v.push_back(int_from_json(x, "coweight entry"));
  return Coweight(v);
}

json to_json(const Coweight& c) { return c.entries(); }

json to_json(const FixedClass& c) {
  return {{"lambda", to_json(c.lambda)}, {"m_plus", c.m_plus}, {"m_minus", c.m_minus}};
}

DimVectorA dims_a_from_json(const json& j) {
  if (!j.is_object()) bad("dimension vector must be an object");
  std::map<int, int> v;
  for (const auto& [key, x] : j.items()) {
    try {
      std::size_t used = 0;
      const int i = std::stoi(key, &used);
      if (used != key.size()) bad("bad vertex \"" + key + "\"");
      v[i] = int_from_json(x, "dimension");
    } catch (const std::logic_error&) {
      bad("bad vertex \"" + key + "\"");
    }
  }
  return DimVectorA(v);
}

DimVectorD dims_d_from_json(const json& j) {
  if (!j.is_object()) bad("dimension vector must be an object");
  DimVectorD d;
  for (const auto& [key, x] : j.items()) {
    const int val = int_from_json(x, "dimension");
    if (key == "0+") d.v0_plus = val;
    else if (key == "0-") d.v0_minus = val;
    else {
      try {
        std::size_t used = 0;
        const int i = std::stoi(key, &used);
        if (used != key.size() || i < 1) bad("bad vertex \"" + key + "\"");
        if (val != 0) d.v[i] = val;
      } catch (const std::logic_error&) {
        bad("bad vertex \"" + key + "\"");
      }
    }
  }
  d.validate();
  return d;
}

json to_json(const DimVectorA& v) {
  json out = json::object();
  for (const auto& [i, x] : v.entries()) out[std::to_string(i)] = x;
  return out;
}

json to_json(const DimVectorD& v) {
  json out = {{"0+", v.v0_plus}, {"0-", v.v0_minus}};
  for (const auto& [i, x] : v.v)
    if (x != 0) out[std::to_string(i)] = x;
  return out;
}

bool is_type_d(const json& datum) {
  return datum.is_object() && datum.contains("dims") && datum.at("dims").is_object() &&
         (datum.at("dims").contains("0+") || datum.at("dims").contains("0-"));
}

AdhmDatumA datum_a_from_json(const json& j) {
  AdhmDatumA d;
  d.r = int_from_json(field(j, "r"), "r");
  d.dims = dims_a_from_json(field(j, "dims"));
  for (const auto& [label, m] : read_maps(j)) {
    if (label == "i") d.i_map = m;
    else if (label == "j") d.j_map = m;
    else if (auto k = degree_label(label, "B1")) d.b1[*k] = m;
    else if (auto k2 = degree_label(label, "B2")) d.b2[*k2] = m;
    else bad("unknown map label " + label);
  }
  return d;
}

AdhmDatumD datum_d_from_json(const json& j) {
  AdhmDatumD d;
  d.r = int_from_json(field(j, "r"), "r");
  d.dims = dims_d_from_json(field(j, "dims"));
  for (const auto& [label, m] : read_maps(j)) {
    if (label == "i") d.i_map = m;
    else if (label == "j") d.j_map = m;
    else if (label == "B1+") d.b1_plus = m;
    else if (label == "B1-") d.b1_minus = m;
    else if (label == "B2+") d.b2_plus = m;
    else if (label == "B2-") d.b2_minus = m;
    else if (auto k = degree_label(label, "B1")) d.b1[*k] = m;
    else if (auto k2 = degree_label(label, "B2")) d.b2[*k2] = m;
    else bad("unknown map label " + label);
  }
  return d;
}

json to_json(const AdhmDatumA& d) {
  json maps = json::array();
  for (const auto& [k, m] : d.b1) maps.push_back(labeled("B1@" + std::to_string(k), m));
  for (const auto& [k, m] : d.b2) maps.push_back(labeled("B2@" + std::to_string(k), m));
  maps.push_back(labeled("i", d.i_map));
  maps.push_back(labeled("j", d.j_map));
  return {{"r", d.r}, {"dims", to_json(d.dims)}, {"maps", maps}};
}

json to_json(const AdhmDatumD& d) {
  json maps = json::array();
  maps.push_back(labeled("B1+", d.b1_plus));
  maps.push_back(labeled("B1-", d.b1_minus));
  maps.push_back(labeled("B2+", d.b2_plus));
  maps.push_back(labeled("B2-", d.b2_minus));
  for (const auto& [k, m] : d.b1) maps.push_back(labeled("B1@" + std::to_string(k), m));
  for (const auto& [k, m] : d.b2) maps.push_back(labeled("B2@" + std::to_string(k), m));
  maps.push_back(labeled("i", d.i_map));
  maps.push_back(labeled("j", d.j_map));
  return {{"r", d.r}, {"dims", to_json(d.dims)}, {"maps", maps}};
}

TransitionQuad quad_from_json(const json& j) {
  return {laurent_from_json<2>(field(j, "g01_00"), kVarsTU), laurent_from_json<2>(field(j, "g10_00"), kVarsTU),
          laurent_from_json<2>(field(j, "g11_01"), kVarsTU), laurent_from_json<2>(field(j, "g11_10"), kVarsTU)};
}

json to_json(const TransitionQuad& q) {
  return {{"g01_00", to_json(q.g01_00, kVarsTU)},
          {"g10_00", to_json(q.g10_00, kVarsTU)},
          {"g11_01", to_json(q.g11_01, kVarsTU)},
          {"g11_10", to_json(q.g11_10, kVarsTU)}};
}

TransitionTriple triple_from_json(const json& j) {
  return {laurent_from_json<2>(field(j, "g1_0"), kVarsS), laurent_from_json<2>(field(j, "g2_0"), kVarsS),
          laurent_from_json<2>(field(j, "g2_1"), kVarsS)};
}

json to_json(const TransitionTriple& t) {
  return {{"g1_0", to_json(t.g1_0, kVarsS)}, {"g2_0", to_json(t.g2_0, kVarsS)}, {"g2_1", to_json(t.g2_1, kVarsS)}};
}

json to_json(const VerifyReport& rep) {
  json out = json::array();
  for (const auto& c : rep.checks) {
    json item = {{"name", c.name}, {"pass", c.pass}};
    if (c.witness) item["witness"] = *c.witness;
    out.push_back(item);
  }
  return out;
}

}  // namespace grassline::tools
