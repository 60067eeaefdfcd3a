#pragma once

#include <json.hpp>

#include "torblocks/blocks.hpp"
#include "torblocks/spectral.hpp"
#include "torblocks/torus.hpp"
#include "torblocks/weights.hpp"
#include "torblocks/zlattice.hpp"

// JSON encoding of every value type. Parsers throw ValidationError with a
// short path to the offending field; renderers always emit canonical form
// (rationals in lowest terms, sorted supports, HNF bases).
namespace torblocks::json_io {

using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);

std::int64_t int_from_json(const Json& j, const std::string& where);
IntVector int_vector_from_json(const Json& j, const std::string& where);
Json big_to_json(const Integer& z);
Integer big_from_json(const Json& j, const std::string& where);
Json big_vector_to_json(const BigVector& v);
BigVector big_vector_from_json(const Json& j, const std::string& where);

Json lie_type_to_json(const LieType& t);
LieType lie_type_from_json(const Json& j, const std::string& where);

Json affine_to_json(const AffineWeight& w);
AffineWeight affine_from_json(const LieType& t, const Json& j, const std::string& where);

/// {"type", "central", "fin", "deltas"}; k is the length of "central".
Json toroidal_to_json(const ToroidalWeight& w);
ToroidalWeight toroidal_from_json(const Json& j, const std::string& where);

Json point_to_json(const TorusPoint& p);
TorusPoint point_from_json(const Json& j, const std::string& where);
Json scaling_to_json(const ScalingElement& b);

Json pi_to_json(const PiFunction& pi);
PiFunction pi_from_json(const Json& j, const std::string& where);

Json xi_to_json(const XiCharacter& xi);
XiCharacter xi_from_json(const Json& j, const std::string& where);

Json lattice_to_json(const ZLattice& l);
ZLattice lattice_from_json(const Json& j, const std::string& where);

Json quotient_to_json(const QuotientData& q);
Json gpi_to_json(const GPiResult& r);

Json block_id_to_json(const BlockId& id);
BlockId block_id_from_json(const Json& j, const std::string& where);

Json character_type_to_json(const CharacterType& c);
Json diagnostics_to_json(const std::vector<Diagnostic>& d);

}  // namespace torblocks::json_io
