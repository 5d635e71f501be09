#pragma once

// Seeds, the cluster variable registry, and exhaustive enumeration of the
// seed pattern of a finite-type cluster algebra (no frozen variables).
//
// Cluster variable ids are 1-based; ids 1..r are the initial variables.
// Positions inside a seed and vertex indices are 0-based.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cfl/laurent.hpp"
#include "cfl/quiver.hpp"

namespace cfl {

using VarId = std::size_t;
/// Sorted set of variable ids contained in some cluster.
using Subcluster = std::vector<VarId>;

class ClusterRegistry {
 public:
  explicit ClusterRegistry(std::size_t rank = 0);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return variables_.size(); }

  /// Returns the id of p, adding it if it is new.
  VarId intern(const LaurentPoly& p);
  std::optional<VarId> find(const LaurentPoly& p) const;
  /// Expansion in the initial cluster.
  const LaurentPoly& expansion(VarId id) const { return variables_.at(id - 1); }
  const std::vector<LaurentPoly>& variables() const { return variables_; }

 private:
  std::size_t rank_;
  std::vector<LaurentPoly> variables_;
  std::unordered_map<LaurentPoly, VarId, LaurentPolyHash> index_;
};

struct Seed {
  std::vector<VarId> cluster;
  ExchangeMatrix matrix;

  Subcluster sorted_cluster() const;
};

/// The exchange polynomial of s at position k, in the initial cluster.
LaurentPoly exchange_polynomial(const ClusterRegistry& reg, const Seed& s, std::size_t k);

/// Mutates at position k, interning the new variable.
Seed mutate_seed(ClusterRegistry& reg, const Seed& s, std::size_t k);

struct SeedPattern {
  std::vector<Seed> seeds;
  /// neighbors[s][k]: index of the seed obtained by mutating seed s at k.
  /// Each cluster is stored once, in the position order of the seed that
  /// first reached it, so the exchanged variable need not be at position k
  /// of the neighbor.
  std::vector<std::vector<std::size_t>> neighbors;
  bool finite = false;
  /// Why enumeration stopped early; empty when finite.
  std::string reason;

  std::size_t rank() const { return seeds.empty() ? 0 : seeds.front().matrix.rank(); }
  std::optional<std::size_t> find_cluster(const Subcluster& ids) const;
  /// Seeds whose cluster contains every id in c, in increasing order.
  std::vector<std::size_t> containing_seeds(const Subcluster& c) const;
  bool is_subcluster(const Subcluster& c) const { return !containing_seeds(c).empty(); }
  bool compatible(VarId a, VarId b) const;

  // Filled by enumerate_pattern.
  std::map<Subcluster, std::size_t> cluster_index;
  std::vector<std::vector<std::size_t>> seeds_of_variable;  // by id - 1
};

struct EnumerationOptions {
  std::size_t cap = 100000;
  /// Recompute every exchange exactly and check it against the variable
  /// identified by fingerprint.
  bool verify_exact = false;
};

struct Pattern {
  ClusterRegistry registry;
  SeedPattern pattern;
};

/// Breadth-first closure of the initial seed (cluster x1..xr, matrix m) under
/// mutation. Stops with finite = false when the number of seeds would exceed
/// the cap or when a seed exhibits |M_ij M_ji| >= 4, which certifies infinite
/// type.
Pattern enumerate_pattern(const ExchangeMatrix& m, const EnumerationOptions& opts = {});
inline Pattern enumerate_pattern(const ExchangeMatrix& m, std::size_t cap) {
  EnumerationOptions o;
  o.cap = cap;
  return enumerate_pattern(m, o);
}

/// Throws std::invalid_argument unless ids (in any order) form a subcluster.
Subcluster make_subcluster(const SeedPattern& p, std::vector<VarId> ids);

/// All subclusters, including the empty one, sorted by size then
/// lexicographically.
std::vector<Subcluster> enumerate_subclusters(const SeedPattern& p);

/// Expansions of every cluster variable in the chart of one seed: element
/// id - 1 is the Laurent polynomial of that variable in the seed's cluster,
/// with x_{i+1} standing for the variable at position i.
std::vector<LaurentPoly> expand_in_seed(const ClusterRegistry& reg, const SeedPattern& p, std::size_t seed);

/// Thread-safe cache of expand_in_seed.
class Atlas {
 public:
  Atlas(const ClusterRegistry& reg, const SeedPattern& p) : reg_(&reg), p_(&p) {}
  const std::vector<LaurentPoly>& chart(std::size_t seed) const;
  const ClusterRegistry& registry() const { return *reg_; }
  const SeedPattern& pattern() const { return *p_; }

 private:
  const ClusterRegistry* reg_;
  const SeedPattern* p_;
  mutable std::mutex mu_;
  mutable std::map<std::size_t, std::unique_ptr<std::vector<LaurentPoly>>> charts_;
};

struct Deletion {
  std::size_t seed = 0;
  /// Positions of the seed that survive, in order; they become the
  /// deletion's initial variables x1, x2, ...
  std::vector<std::size_t> kept;
  ExchangeMatrix matrix;
  std::optional<DynkinType> type;
};

/// Deletes c from a containing seed, preferring a seed whose remaining
/// quiver is acyclic.
Deletion delete_subcluster(const SeedPattern& p, const Subcluster& c);
/// Deletion through a specific containing seed.
Deletion delete_subcluster_at(const SeedPattern& p, const Subcluster& c, std::size_t seed);

/// Image of y under the deletion map of c: its expansion in the chosen
/// containing seed with the variables of c set to 1.
LaurentPoly deletion_map_image(const Atlas& atlas, const Subcluster& c, VarId y);
LaurentPoly deletion_map_image(const Atlas& atlas, const Deletion& d, const Subcluster& c, VarId y);

}  // namespace cfl
