// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#pragma once

#include <json.hpp>

#include "pdescent/families.hpp"

namespace pdescent {

using Json = nlohmann::json;

// Points are "(x:y:z)" strings, matrices row-major arrays of nine Q(i)
// strings. Readers throw Error(ParseError) on malformed documents.

Json to_json(const PointConfig& s);
PointConfig config_from_json(const Json& j);

Json to_json(const Mat3& m);
Mat3 mat3_from_json(const Json& j);

Json to_json(const SemiProjMap& g);
SemiProjMap map_from_json(const Json& j);

Json to_json(const P1Map& h);
P1Map p1_map_from_json(const Json& j);

Json to_json(const ConfigClass& c, std::size_t n);
Json to_json(const NormalizerGroup& g);
Json to_json(const FomResult& f);

Json to_json(const DescentCertificate& c);
DescentCertificate certificate_from_json(const Json& j);

Json to_json(const VerifyReport& r);

}  // namespace pdescent
