#pragma once

#include <string>

#include "core/laurent.hpp"
#include "core/matrix.hpp"
#include "core/minors.hpp"
#include "core/network.hpp"
#include "core/region.hpp"
#include "core/verify.hpp"

namespace dominor {

// JSON formats (throwing ParseError on malformed input):
//   rational      "p/q" or "p"
//   matrix        [["p/q", ...], ...]
//   region        {"cells": [[x,y],...], "anchor": [x,y] | null}
//   sm spec       {"a":..,"b":..,"ks":[..],"ts":[..],"n":..,"side":"SM"|"SMbar"}
//   network       {"n":.., "interior":.., "edges":[[u,v,"p/q"],...],
//                  "rotation": {"v":[neighbors...], ...}}
//   laurent poly  [{"coeff":"p/q","exponents":[[x,y,e],...]}, ...]

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

std::string region_to_json(const Region& r);
Region region_from_json(const std::string& text);

std::string spec_to_json(const SemiContigSpec& s);
SemiContigSpec spec_from_json(const std::string& text);

std::string network_to_json(const Network& n);
Network network_from_json(const std::string& text);

std::string laurent_to_json(const LaurentPoly& p);

std::string report_to_json(const VerificationReport& r);

}  // namespace dominor
