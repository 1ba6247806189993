#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "vne/edge_list.hpp"
#include "vne/graph.hpp"

namespace vne {

/// Seeded stream: std::mt19937_64 for bits, with the integer and real
/// conversions done here so sequences do not depend on the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Independent sub-seed: SplitMix64 of (seed, stream).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

enum class GraphModel { ER_GNM, SF_CONFIG, RGG };

std::string model_tag(GraphModel m);
GraphModel parse_model(const std::string& text);

struct GeneratorConfig {
  GraphModel model = GraphModel::ER_GNM;
  std::size_t n = 0;
  std::size_t m = 0;            // ER
  double gamma = 2.5;           // SF
  std::size_t k_min = 2;        // SF
  std::size_t dim = 3;          // RGG
  double mean_degree = 4.0;     // RGG
  std::uint64_t seed = 0;

  /// Throws DomainError when a parameter is out of range for the model.
  void validate() const;
  /// key=value pairs written as the header of generated edge-list files.
  Metadata metadata() const;
};

/// Exactly m distinct edges chosen uniformly (Floyd sampling over pair ids).
Graph erdos_renyi_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

/// Configuration model on a power-law degree sequence P(k) ~ k^-gamma over
/// [k_min, floor(sqrt(n))], made simple by degree-preserving rewiring.
Graph scale_free_configuration(std::size_t n, double gamma, std::size_t k_min, std::uint64_t seed);

/// n uniform points in the unit cube [0,1]^dim, linked when closer than r;
/// r is bisected so the realized mean degree is within 5% of the target.
Graph random_geometric(std::size_t n, std::size_t dim, double mean_degree, std::uint64_t seed);

Graph generate(const GeneratorConfig& config);

}  // namespace vne
