#ifndef QTI_MODEL_HPP
#define QTI_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qti {

// Chain of length L = 2N+1 with sites j = -N..N and transverse field
// f_j = g j^2 + delta, optionally with multiplicative disorder. All energies
// are in units of the coupling J, which is kept explicit so the J = 0
// decoupled limit stays available as an oracle.

struct DisorderSpec {
  double w = 0.0;           // relative amplitude, f -> f (1 + w u), u uniform in [-1, 1)
  std::uint64_t seed = 0;

  bool operator==(const DisorderSpec&) const = default;
};

struct ChainParams {
  int half_length = 1;      // N; L = 2N+1
  double g = 0.0;           // quadratic field strength
  double delta = 0.5;       // field baseline
  double coupling = 1.0;    // J

  int length() const { return 2 * half_length + 1; }
  void validate() const;                       // throws on hard violations
  std::vector<std::string> warnings() const;   // soft domain checks

  bool operator==(const ChainParams&) const = default;
};

struct FieldProfile {
  ChainParams params;
  std::optional<DisorderSpec> disorder;
  std::vector<double> values;  // f_j, index j + N

  int length() const { return static_cast<int>(values.size()); }
  int half_length() const { return params.half_length; }
  double at(int j) const { return values[j + params.half_length]; }
};

struct ScaledCoords {
  std::vector<double> xi;  // j / N
  double g_n = 0.0;        // N^2 g
};

struct Interfaces {
  int m_minus = 0;
  int m_plus = 0;
  bool clamped = false;  // ferromagnetic region reaches the chain edge
};

FieldProfile build_profile(const ChainParams& params,
                           std::optional<DisorderSpec> disorder = std::nullopt);

ScaledCoords scaled_coords(const ChainParams& params);

// m_plus = floor(sqrt((J - delta)/g)) clamped to [0, N]; m_minus = -m_plus.
// Throws for g = 0 (uniform chain, no interior interface).
Interfaces interface_sites(const ChainParams& params);

// Same, but maps the uniform chain with delta < J to edge interfaces (-N, N)
// instead of throwing. Used by the localized-mode routines, which remain
// meaningful in that limit.
Interfaces interfaces_or_edges(const ChainParams& params);

}  // namespace qti

#endif
