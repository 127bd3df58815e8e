#include "trd/enumerate.hpp"

#include <cmath>
#include <string>

#include "trd/error.hpp"
#include "trd/families.hpp"

namespace trd {

namespace {

bool keep(const Graph& g, const universe::AllLabeled& a) {
  if (a.no_isolated && g.has_isolated_vertex()) return false;
  if (a.connected_only && !is_connected(g)) return false;
  return true;
}

class Batcher {
 public:
  Batcher(std::size_t size, const std::function<bool(std::vector<Instance>&)>& sink) : size_(size), sink_(sink) {
    buffer_.reserve(size_);
  }

  bool push(Instance inst) {
    buffer_.push_back(std::move(inst));
    if (buffer_.size() >= size_) return flush();
    return true;
  }

  bool flush() {
    if (buffer_.empty()) return true;
    const bool more = sink_(buffer_);
    buffer_.clear();
    return more;
  }

 private:
  std::size_t size_;
  const std::function<bool(std::vector<Instance>&)>& sink_;
  std::vector<Instance> buffer_;
};

bool stream_labeled(const universe::AllLabeled& a, Batcher& out) {
  for (int n = std::max(1, a.min_n); n <= a.max_n; ++n) {
    std::vector<Edge> pairs;
    for (Vertex v = 1; v < n; ++v)
      for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<Edge> chosen;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      chosen.clear();
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) chosen.push_back(pairs[i]);
      Graph g = Graph::from_edges(n, chosen);
      if (!keep(g, a)) continue;
      if (!out.push({std::move(g), std::nullopt})) return false;
    }
  }
  return true;
}

}  // namespace

void validate(const InstanceUniverse& u) {
  for (const auto& source : u.sources) {
    if (const auto* a = std::get_if<universe::AllLabeled>(&source)) {
      if (a->max_n > kMaxLabeledOrder)
        throw Error(Errc::UniverseTooLarge, "labelled enumeration is capped at n = " + std::to_string(kMaxLabeledOrder));
      if (a->max_n < 1 || a->min_n > a->max_n)
        throw Error(Errc::InvalidSpec, "labelled enumeration needs 1 <= min_n <= max_n");
    } else if (const auto* r = std::get_if<universe::RandomGnp>(&source)) {
      if (r->n < 1 || r->n > kMaxOrder) throw Error(Errc::InvalidSpec, "random graph order out of range");
      if (r->count < 0) throw Error(Errc::InvalidSpec, "random graph count must be >= 0");
      if (!(r->p >= 0.0 && r->p <= 1.0)) throw Error(Errc::InvalidSpec, "edge probability must lie in [0, 1]");
    } else if (const auto* f = std::get_if<universe::Families>(&source)) {
      for (const auto& spec : f->members) trd::validate(spec);
    }
  }
}

Graph random_gnp(int n, double p, std::mt19937_64& rng) {
  // p * 2^64, saturating at p = 1.
  const long double scaled = std::ldexp(static_cast<long double>(p), 64);
  const bool always = p >= 1.0;
  const auto threshold = always ? ~std::uint64_t{0} : static_cast<std::uint64_t>(scaled);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      const std::uint64_t draw = rng();
      if (always || draw < threshold) edges.emplace_back(u, v);
    }
  return Graph::from_edges(n, edges);
}

void for_each_batch(const InstanceUniverse& u, std::size_t batch,
                    const std::function<bool(std::vector<Instance>&)>& sink) {
  validate(u);
  Batcher out(std::max<std::size_t>(batch, 1), sink);
  for (const auto& source : u.sources) {
    bool more = true;
    if (const auto* a = std::get_if<universe::AllLabeled>(&source)) {
      more = stream_labeled(*a, out);
    } else if (const auto* f = std::get_if<universe::Families>(&source)) {
      for (const auto& spec : f->members)
        if (!(more = out.push({generate(spec), spec}))) break;
    } else if (const auto* r = std::get_if<universe::RandomGnp>(&source)) {
      std::mt19937_64 rng(r->seed);
      for (int i = 0; i < r->count && more; ++i) more = out.push({random_gnp(r->n, r->p, rng), std::nullopt});
    } else if (const auto* l = std::get_if<universe::GraphList>(&source)) {
      for (const auto& g : l->graphs)
        if (!(more = out.push({g, std::nullopt}))) break;
    }
    if (!more) return;
  }
  out.flush();
}

std::vector<Graph> enumerate_graphs(const InstanceUniverse& u) {
  std::vector<Graph> out;
  for_each_batch(u, 4096, [&](std::vector<Instance>& batch) {
    for (auto& inst : batch) out.push_back(std::move(inst.graph));
    return true;
  });
  return out;
}

}  // namespace trd
