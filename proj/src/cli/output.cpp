#include "output.hpp"

#include <cmath>
#include <cstdio>

#include "bessel_geom/cli.hpp"

namespace bessel_geom::cli {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

Json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

Json complex_json(Complex z) {
  return Json{{"re", number(z.real())}, {"im", number(z.imag())}};
}

Json output_record(const std::string& command, Json inputs, Json result) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)}};
}

}  // namespace bessel_geom::cli
