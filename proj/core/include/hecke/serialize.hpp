#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "hecke/biro.hpp"
#include "hecke/cfrac.hpp"
#include "hecke/cyclo.hpp"
#include "hecke/linearity.hpp"
#include "hecke/quadfield.hpp"
#include "hecke/shintani.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const QuadSurd& x);
Json to_json(const CycloElement& x);
Json to_json(const PlusCF& w);
Json to_json(const MinusCF& w);
Json to_json(const FieldData& F);
Json to_json(const IdealLattice& L);
Json to_json(const DeltaSequence& ds);
Json to_json(const YamamotoSeq& seq);
Json to_json(const NuSequence& seq);
Json to_json(const ClosedFormAB& cf);
Json to_json(const LinearityReport& rep);
Json to_json(const ConditionStarPair& pair);
Json to_json(const ResidueReport& rep);
Json to_json(const OracleCheck& check);
Json to_json(const IntroAB& ab);
Json to_json(const FamilySpec& spec);

/// Inverse maps; all throw ParseError naming the offending JSON path.
Integer integer_from_json(const Json& j, const std::string& path = "");
Rational rational_from_json(const Json& j, const std::string& path = "");
QuadSurd surd_from_json(const Json& j, const std::string& path = "");
CycloElement cyclo_from_json(const Json& j, const std::string& path = "");
FamilySpec family_from_json(const Json& j);

/// Rounded fixed-point rendering with `digits` decimals; display only.
std::string decimal_display(const Rational& x, int digits = 30);

}  // namespace hecke
