#pragma once

#include <string>

#include <json.hpp>

#include "bessel_geom/bessel_core.hpp"

namespace bessel_geom::cli {

using Json = nlohmann::json;

/// 17 significant digits, '.' decimal point; inf/nan spelled out.
std::string format_double(double value);

/// JSON has no inf/nan: non-finite values become null.
Json number(double value);

Json complex_json(Complex z);

/// Envelope shared by every JSON result.
Json output_record(const std::string& command, Json inputs, Json result);

}  // namespace bessel_geom::cli
