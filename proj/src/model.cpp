#include "qti/model.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qti {

void ChainParams::validate() const {
  if (half_length < 1) throw std::invalid_argument("half_length must be >= 1");
  if (g < 0.0) throw std::invalid_argument("g must be >= 0");
  if (delta <= 0.0) throw std::invalid_argument("delta must be > 0");
  if (coupling < 0.0) throw std::invalid_argument("coupling must be >= 0");
}

std::vector<std::string> ChainParams::warnings() const {
  std::vector<std::string> out;
  const double bound = (coupling - delta) / (static_cast<double>(half_length) * half_length);
  if (bound > 0.0 && g < bound) {
    std::ostringstream msg;
    msg << "g = " << g << " below (J - delta)/N^2 = " << bound
        << ": field never exceeds J, edges stay ferromagnetic";
    out.push_back(msg.str());
  }
  if (delta >= coupling && coupling > 0.0) {
    out.push_back("delta >= J: whole chain paramagnetic, no interior interfaces");
  }
  return out;
}

FieldProfile build_profile(const ChainParams& params, std::optional<DisorderSpec> disorder) {
  params.validate();
  const int n = params.half_length;
  FieldProfile p;
  p.params = params;
  p.disorder = disorder;
  p.values.resize(params.length());
  for (int j = -n; j <= n; ++j)
    p.values[j + n] = params.g * static_cast<double>(j) * j + params.delta;

  if (disorder && disorder->w != 0.0) {
    if (disorder->w < 0.0) throw std::invalid_argument("disorder amplitude must be >= 0");
    std::mt19937_64 eng(disorder->seed);
    for (auto& f : p.values) {
      // map the top 53 bits to [0,1) so the stream is identical on every
      // platform, unlike uniform_real_distribution
      const double unit = static_cast<double>(eng() >> 11) * 0x1.0p-53;
      f *= 1.0 + disorder->w * (2.0 * unit - 1.0);
    }
  }
  return p;
}

ScaledCoords scaled_coords(const ChainParams& params) {
  params.validate();
  ScaledCoords s;
  s.g_n = params.g * static_cast<double>(params.half_length) * params.half_length;
  s.xi.resize(params.length());
  for (int j = -params.half_length; j <= params.half_length; ++j)
    s.xi[j + params.half_length] = static_cast<double>(j) / params.half_length;
  return s;
}

Interfaces interface_sites(const ChainParams& params) {
  params.validate();
  if (params.g == 0.0)
    throw std::invalid_argument("no interior interface (uniform chain)");
  const double ratio = std::max(0.0, (params.coupling - params.delta) / params.g);
  int m = static_cast<int>(std::floor(std::sqrt(ratio)));
  Interfaces out;
  out.clamped = m > params.half_length;
  if (out.clamped) m = params.half_length;
  out.m_plus = m;
  out.m_minus = -m;
  return out;
}

Interfaces interfaces_or_edges(const ChainParams& params) {
  if (params.g == 0.0) {
    params.validate();
    if (params.delta >= params.coupling)
      throw std::invalid_argument("uniform chain with delta >= J has no localized modes");
    return {-params.half_length, params.half_length, true};
  }
  return interface_sites(params);
}

}  // namespace qti
