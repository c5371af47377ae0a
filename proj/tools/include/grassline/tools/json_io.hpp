#pragma once

#include <nlohmann/json.hpp>

#include "grassline/adhm.hpp"
#include "grassline/loopgroup.hpp"
#include "grassline/polystring.hpp"
#include "grassline/transitions.hpp"

namespace grassline::tools {

using nlohmann::json;

// Malformed input raises Error(ParseError).
Rational rational_from_json(const json& j);
json to_json(const Rational& q);

QMatrix qmatrix_from_json(const json& j);
json to_json(const QMatrix& m);

template <std::size_t N>
Matrix<LaurentPoly<N>> laurent_from_json(const json& j, const VarNames<N>& vars);
template <std::size_t N>
json to_json(const Matrix<LaurentPoly<N>>& m, const VarNames<N>& vars);

LoopElement loop_from_json(const json& j);
json to_json(const LoopElement& g);

Coweight coweight_from_json(const json& j);
json to_json(const Coweight& c);
json to_json(const FixedClass& c);

DimVectorA dims_a_from_json(const json& j);
DimVectorD dims_d_from_json(const json& j);
json to_json(const DimVectorA& v);
json to_json(const DimVectorD& v);

// {"r", "dims", "maps": [{"label", "rows", "cols", "entries"}]}
AdhmDatumA datum_a_from_json(const json& j);
AdhmDatumD datum_d_from_json(const json& j);
json to_json(const AdhmDatumA& d);
json to_json(const AdhmDatumD& d);
bool is_type_d(const json& datum);

TransitionQuad quad_from_json(const json& j);
json to_json(const TransitionQuad& q);
TransitionTriple triple_from_json(const json& j);
json to_json(const TransitionTriple& t);

json to_json(const VerifyReport& rep);

}  // namespace grassline::tools
