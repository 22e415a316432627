#include "enumkit/structures/graphs.hpp"

#include <bit>
#include <numeric>

#include "enumkit/core/errors.hpp"
#include "enumkit/engine/extension.hpp"
#include "enumkit/engine/flasher.hpp"
#include "enumkit/structures/repairs.hpp"

namespace enumkit {
namespace {

StreamPtr<Assignment> hitting_sets(int n, const std::vector<std::set<int>>& edges) {
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 1);
  return flasher(std::make_shared<SatExtension>(minimal_hitting_set_encoding(n, edges, false), vars));
}

}  // namespace

StreamPtr<Assignment> transversal_enum(const Hypergraph& h) {
  return hitting_sets(h.num_vertices(), {h.edges().begin(), h.edges().end()});
}

std::vector<std::set<int>> closed_neighbourhoods(const Graph& g) {
  std::vector<std::set<int>> out;
  for (int v = 1; v <= g.num_vertices(); ++v) {
    std::set<int> n{v};
    for (int u : g.neighbours(v)) n.insert(u);
    out.push_back(std::move(n));
  }
  return out;
}

StreamPtr<Assignment> domset_enum(const Graph& g) { return hitting_sets(g.num_vertices(), closed_neighbourhoods(g)); }

namespace {

class ColouringStream final : public SolutionStream<Colouring> {
 public:
  ColouringStream(StreamPtr<Assignment> bits, int n, int width) : bits_(std::move(bits)), n_(n), width_(width) {}

  std::optional<Colouring> next() override {
    auto a = bits_->next();
    if (!a) return std::nullopt;
    Colouring c(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      int colour = 0;
      for (int b = 0; b < width_; ++b) colour = (colour << 1) | (*a)[static_cast<std::size_t>(v * width_ + b)];
      c[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(colour);
    }
    return c;
  }
  StreamCounters counters() const override { return bits_->counters(); }

 private:
  StreamPtr<Assignment> bits_;
  int n_;
  int width_;
};

}  // namespace

StreamPtr<Colouring> colouring_enum(const Graph& g, int k) {
  if (k < 1 || k > 255) throw InvalidInstance("colour count must be in 1..255");
  const int n = g.num_vertices();
  const int width = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(k - 1))));
  auto var = [&](int v, int b) { return (v - 1) * width + b + 1; };
  // Literals saying "vertex v has colour c".
  auto is_colour = [&](int v, int c) {
    Clause lits;
    for (int b = 0; b < width; ++b) lits.push_back({var(v, b), ((c >> (width - 1 - b)) & 1) != 0});
    return lits;
  };
  auto forbid = [](CnfFormula& f, const Clause& conj) {
    Clause c;
    for (const auto& l : conj) c.push_back(~l);
    f.add_clause(c);
  };
  CnfFormula f(n * width);
  for (int v = 1; v <= n; ++v)
    for (int c = k; c < (1 << width); ++c) forbid(f, is_colour(v, c));
  for (const auto& [u, v] : g.edges()) {
    for (int c = 0; c < k; ++c) {
      Clause both = is_colour(u, c);
      auto second = is_colour(v, c);
      both.insert(both.end(), second.begin(), second.end());
      forbid(f, both);
    }
  }
  f.num_vars = n * width;
  return std::make_unique<ColouringStream>(flasher(std::make_shared<SatExtension>(f)), n, width);
}

bool is_proper_colouring(const Graph& g, const Colouring& c, int k) {
  if (c.size() != static_cast<std::size_t>(g.num_vertices())) return false;
  for (auto x : c)
    if (x >= k) return false;
  for (const auto& [u, v] : g.edges())
    if (c[static_cast<std::size_t>(u - 1)] == c[static_cast<std::size_t>(v - 1)]) return false;
  return true;
}

}  // namespace enumkit
