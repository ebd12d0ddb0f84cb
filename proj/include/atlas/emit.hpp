#pragma once

#include <string>

#include "atlas/components.hpp"
#include "atlas/core.hpp"
#include "atlas/fan.hpp"
#include "atlas/homext.hpp"

namespace atlas {

// Deterministic renderers behind the CLI. Text and JSON carry the same
// data; JSON documents follow schemas/orbit-atlas-output.schema.json.

std::string genericText(const DimensionVector& d);
std::string genericJson(const DimensionVector& d);

// Line diagram: one row per level, highest level on top; '*' marks a
// vertex, '-' joins horizontally adjacent vertices of the same level.
std::string genericAscii(const DimensionVector& d);
std::string genericSvg(const DimensionVector& d);

std::string componentsText(const DimensionVector& d);
std::string componentsJson(const DimensionVector& d);

std::string countText(const DimensionVector& d, const std::string& method, long long budget,
                      bool& match);
std::string countJson(const DimensionVector& d, const std::string& method, long long budget,
                      bool& match);

std::string pairingText(const Segment& from, const Segment& to, const std::string& kind);
std::string pairingJson(const Segment& from, const Segment& to, const std::string& kind);

std::string rigidText(const Multisegment& m);
std::string rigidJson(const Multisegment& m);

std::string verifyText(const VerifyReport& report);
std::string verifyJson(const VerifyReport& report);

std::string classifyText(const DimensionVector& d);
std::string classifyJson(const DimensionVector& d);

std::string fanDot(const ExchangeGraph& graph);
std::string fanJson(const ExchangeGraph& graph);

std::string locateText(const DimensionVector& d, const LocateResult& result);
std::string locateJson(const DimensionVector& d, const LocateResult& result);

}  // namespace atlas
