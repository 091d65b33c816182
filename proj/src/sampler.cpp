#include "kcore/sampler.hpp"

#include <sodium.h>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace kcore {

namespace {

void store_le(std::uint64_t x, unsigned char* out) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(x >> (8 * i));
}

}  // namespace

EdgeHasher::EdgeHasher(std::uint64_t seed) : seed_(seed) {
  static_assert(crypto_shorthash_siphash24_KEYBYTES == 16);
  store_le(seed, key_.data());
  store_le(seed ^ 0x9e3779b97f4a7c15ULL, key_.data() + 8);
}

std::uint64_t EdgeHasher::hash(Vertex u, Vertex v) const {
  if (u == v) throw std::invalid_argument("edge rank of a self-loop");
  unsigned char message[8];
  store_le(edge_key(u, v), message);
  unsigned char digest[crypto_shorthash_siphash24_BYTES];
  crypto_shorthash_siphash24(digest, message, sizeof message, key_.data());
  std::uint64_t h = 0;
  for (int i = 7; i >= 0; --i) h = (h << 8) | digest[i];
  return h;
}

double EdgeHasher::rank(Vertex u, Vertex v) const {
  return static_cast<double>(hash(u, v) >> 11) * 0x1.0p-53;
}

LevelSchedule::LevelSchedule(double p0, double growth, std::size_t max_levels)
    : p0_(p0), growth_(growth) {
  if (!(p0 > 0.0)) throw std::invalid_argument("p0 must be positive");
  if (!(growth > 1.0)) throw std::invalid_argument("growth factor must exceed 1");
  std::size_t j = 0;
  while (p0_ * std::pow(growth_, static_cast<double>(j)) < 1.0) ++j;
  levels_ = j + 1;
  if (max_levels != 0 && max_levels < levels_) levels_ = max_levels;
}

double LevelSchedule::p(std::size_t j) const noexcept {
  if (j >= last_level()) return 1.0;
  return std::min(1.0, p0_ * std::pow(growth_, static_cast<double>(j)));
}

std::size_t level_of(double r, const LevelSchedule& schedule) {
  std::size_t j = 0;
  while (j < schedule.last_level() && r > schedule.p(j)) ++j;
  return j;
}

Graph sample_level(const Graph& g, const EdgeHasher& hasher, const LevelSchedule& schedule,
                   std::size_t j, std::span<const char> excluded) {
  if (!excluded.empty() && excluded.size() != g.num_vertices()) {
    throw std::invalid_argument("exclusion mask size mismatch");
  }
  const double p = schedule.p(j);
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!excluded.empty() && excluded[e.u] && excluded[e.v]) continue;
    if (hasher.rank(e.u, e.v) <= p) kept.push_back(e);
  }
  return Graph::from_edges(g.num_vertices(), kept);
}

}  // namespace kcore
