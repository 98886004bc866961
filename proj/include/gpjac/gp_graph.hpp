#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gpjac/int_matrix.hpp"

namespace gpjac {

/// Vertex order: inner vertices v_0..v_{n-1} are 0..n-1, outer vertices u_0..u_{n-1} are n..2n-1,
/// so the first diagonal block of the Laplacian carries the step-k circulant.
struct Edge {
  std::size_t a;
  std::size_t b;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Generalized Petersen graph GP(n, k) stored as an edge multiset.
/// Each edge is normalized with a <= b; the list is sorted, repeated entries are parallel edges.
class GPGraph {
 public:
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }  // already reduced mod n
  std::size_t vertex_count() const { return 2 * n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t inner(std::size_t i) const { return i % n_; }
  std::size_t outer(std::size_t i) const { return n_ + i % n_; }

  /// Number of parallel edges joining a and b.
  std::size_t multiplicity(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const GPGraph&, const GPGraph&) = default;

 private:
  friend GPGraph build_gp(long n, long k);
  GPGraph(std::size_t n, std::size_t k, std::vector<Edge> edges) : n_(n), k_(k), edges_(std::move(edges)) {}

  std::size_t n_;
  std::size_t k_;
  std::vector<Edge> edges_;
};

/// Edges u_i u_{i+1}, u_i v_i, v_i v_{i+k}, indices mod n.
/// Throws std::invalid_argument for n < 3 or k ≡ 0 (mod n) (the inner step would be a loop).
GPGraph build_gp(long n, long k);

/// Reduces k into the range [1, n/2], the representative giving the same graph.
std::size_t reduced_step(long n, long k);

/// circ(a_0, ..., a_{n-1}) where a_j sums the coefficients whose exponent is ≡ j (mod n).
IntegerMatrix circulant(std::size_t n, const std::vector<std::pair<long, long>>& support);

IntegerMatrix adjacency(const GPGraph& g);

/// Block form [[3I - C_n^k, -I], [-I, 3I - C_n^1]].
IntegerMatrix laplacian(const GPGraph& g);

}  // namespace gpjac
