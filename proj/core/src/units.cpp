#include "activeinfo/units.hpp"

#include <cmath>
#include <numbers>

namespace activeinfo {

double log_in(InfoUnit unit, double x) {
  switch (unit) {
    case InfoUnit::Bits:
      return std::log2(x);
    case InfoUnit::Nats:
      return std::log(x);
    case InfoUnit::Hartleys:
      return std::log10(x);
  }
  return std::log2(x);
}

double convert(double value, InfoUnit from, InfoUnit to) {
  if (from == to) return value;
  double nats = value;
  if (from == InfoUnit::Bits) nats = value * std::numbers::ln2;
  if (from == InfoUnit::Hartleys) nats = value * std::numbers::ln10;
  switch (to) {
    case InfoUnit::Nats:
      return nats;
    case InfoUnit::Bits:
      return nats / std::numbers::ln2;
    case InfoUnit::Hartleys:
      return nats / std::numbers::ln10;
  }
  return nats;
}

std::string_view to_string(InfoUnit unit) {
  switch (unit) {
    case InfoUnit::Bits:
      return "bits";
    case InfoUnit::Nats:
      return "nats";
    case InfoUnit::Hartleys:
      return "hartleys";
  }
  return "bits";
}

std::optional<InfoUnit> parse_unit(std::string_view name) {
  if (name == "bits") return InfoUnit::Bits;
  if (name == "nats") return InfoUnit::Nats;
  if (name == "hartleys") return InfoUnit::Hartleys;
  return std::nullopt;
}

}  // namespace activeinfo
