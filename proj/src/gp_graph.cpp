#include "gpjac/gp_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gpjac {

namespace {

std::size_t mod(long a, std::size_t n) {
  const long m = static_cast<long>(n);
  return static_cast<std::size_t>(((a % m) + m) % m);
}

Edge make_edge(std::size_t a, std::size_t b) { return a <= b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

GPGraph build_gp(long n, long k) {
  if (n < 3) throw std::invalid_argument("GP(n,k) requires n >= 3, got n = " + std::to_string(n));
  if (k < 1) throw std::invalid_argument("GP(n,k) requires k >= 1, got k = " + std::to_string(k));
  const auto un = static_cast<std::size_t>(n);
  const std::size_t step = mod(k, un);
  if (step == 0) {
    throw std::invalid_argument("GP(n,k) requires k not divisible by n (inner edges would be loops), got n = " +
                                std::to_string(n) + ", k = " + std::to_string(k));
  }
  std::vector<Edge> edges;
  edges.reserve(3 * un);
  for (std::size_t i = 0; i < un; ++i) {
    edges.push_back(make_edge(i, (i + step) % un));
    edges.push_back(make_edge(i, un + i));
    edges.push_back(make_edge(un + i, un + (i + 1) % un));
  }
  std::sort(edges.begin(), edges.end());
  return GPGraph(un, step, std::move(edges));
}

std::size_t reduced_step(long n, long k) {
  if (n < 1) throw std::invalid_argument("reduced_step: n must be positive");
  const auto un = static_cast<std::size_t>(n);
  const std::size_t r = mod(k, un);
  return std::min(r, un - r);
}

std::size_t GPGraph::multiplicity(std::size_t a, std::size_t b) const {
  const Edge e = make_edge(a, b);
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
  return static_cast<std::size_t>(hi - lo);
}

std::vector<std::size_t> GPGraph::degrees() const {
  std::vector<std::size_t> deg(vertex_count(), 0);
  for (const auto& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

IntegerMatrix circulant(std::size_t n, const std::vector<std::pair<long, long>>& support) {
  if (n == 0) throw std::invalid_argument("circulant: n must be positive");
  std::vector<long> first_row(n, 0);
  for (const auto& [exponent, coefficient] : support) first_row[mod(exponent, n)] += coefficient;
  IntegerMatrix c(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) c(r, col) = first_row[(col + n - r) % n];
  return c;
}

IntegerMatrix adjacency(const GPGraph& g) {
  IntegerMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    a(e.a, e.b) += 1;
    a(e.b, e.a) += 1;
  }
  return a;
}

IntegerMatrix laplacian(const GPGraph& g) {
  const std::size_t n = g.n();
  const long k = static_cast<long>(g.k());
  const IntegerMatrix inner = circulant(n, {{k, 1}, {-k, 1}});
  const IntegerMatrix outer = circulant(n, {{1, 1}, {-1, 1}});
  IntegerMatrix l(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      l(r, c) = -inner(r, c);
      l(n + r, n + c) = -outer(r, c);
    }
    l(r, r) += 3;
    l(n + r, n + r) += 3;
    l(r, n + r) = -1;
    l(n + r, r) = -1;
  }
  return l;
}

}  // namespace gpjac
