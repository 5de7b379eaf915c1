#pragma once

#include <json.hpp>

#include "coamoeba/chains.hpp"
#include "coamoeba/homology.hpp"
#include "coamoeba/nonarch.hpp"

namespace coamoeba {

using Json = nlohmann::json;

// Rationals serialize as "p/q" strings throughout.
Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const RatVec& v);
RatVec ratvec_from_json(const Json& j);

Json to_json(const RationalSubspace& s);
RationalSubspace subspace_from_json(const Json& j);

Json to_json(const AffineSubspace& a);
AffineSubspace affine_from_json(const Json& j);

Json to_json(const LaurentPolynomial& f);
LaurentPolynomial poly_from_json(const Json& j);

Json to_json(const VarietySpec& s);
VarietySpec spec_from_json(const Json& j);

Json to_json(const Polytope& p);

Json to_json(const TropicalComplex& t);
Json to_json(const TropicalFan& f);

Json to_json(const AffineSubgroupCoset& c);
AffineSubgroupCoset coset_from_json(const Json& j);

Json to_json(const Shell& s);
Shell shell_from_json(const Json& j);

Json to_json(const PhaseLimitSet& p);

Json to_json(const Box& b);
Box box_from_json(const Json& j);

Json to_json(const LiftedArrangement& a);
LiftedArrangement arrangement_from_json(const Json& j);

Json to_json(const Chain& c);
Chain chain_from_json(const Json& j);

Json to_json(const CertifyOutcome& o);

Json to_json(const KLaurentPolynomial& f);
KLaurentPolynomial kpoly_from_json(const Json& j);

Json to_json(const KVarietySpec& s);
KVarietySpec kspec_from_json(const Json& j);

Json to_json(const NAmoebaComplex& c);
Json to_json(const NACoamoeba& c);

// Cloud CSV: n columns of turns. write/read round trip.
std::string cloud_to_csv(const PointCloud& c);
PointCloud cloud_from_csv(const std::string& text, int ambient);

}  // namespace coamoeba
