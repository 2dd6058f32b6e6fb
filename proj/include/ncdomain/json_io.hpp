#pragma once

#include "ncdomain/classify.hpp"
#include "ncdomain/fock.hpp"
#include "ncdomain/geometry.hpp"
#include "ncdomain/symbol.hpp"

#include "json.hpp"

#include <utility>
#include <vector>

namespace ncd {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json to_json(const ClassificationResult& r);
ClassificationResult classification_from_json(const Json& j);

/// {"weights":[{"word":[...],"num":"..","den":".."},...]}
Json to_json(const WeightTable& t);
std::vector<std::pair<Word, Rational>> weights_from_json(const Json& j);

/// {"n":..,"N":..,"dim":..,"order":"graded-lex","shifts":[{"j":..,"entries":[[row,col,re,im],...]}]}
Json to_json(const ShiftFamily& s);
std::vector<ShiftOperator> shifts_from_json(const Json& j);

Json to_json(const MembershipReport& r);
MembershipReport membership_from_json(const Json& j);

/// {"center":[[re,im],...],"radius":r,"residual":e}
Json to_json(const CircleFit& c);

Json to_json(const ComplexVector& v);
ComplexVector complex_vector_from_json(const Json& j);

/// {"matrices":[M_1,...]} with M a list of rows and entries either numbers or [re, im].
OperatorTuple operator_tuple_from_json(const Json& j);

} // namespace ncd
