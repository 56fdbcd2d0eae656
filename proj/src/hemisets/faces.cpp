#include <algorithm>

#include "otlab/hemisets.hpp"

namespace otlab {

Arrangement enumerate_faces(const ProjectiveOrder& order) {
  const int n = static_cast<int>(order.pair_count());
  if (n < 2) throw TooSmall("the arrangement needs at least two great circles");
  Arrangement arr;
  arr.n_ = static_cast<std::size_t>(n);
  const Chirotope& reps = order.representatives();
  std::unordered_map<std::string, int> edge_lookup, vertex_lookup;
  std::vector<std::int8_t> sides(static_cast<std::size_t>(n));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int r = 0; r < n; ++r)
        if (r != i && r != j) sides[static_cast<std::size_t>(r)] = static_cast<std::int8_t>(reps.sign(i, j, r));
      for (int si = -1; si <= 1; ++si)
        for (int sj = -1; sj <= 1; ++sj) {
          sides[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(si);
          sides[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(sj);
          std::string key(reinterpret_cast<const char*>(sides.data()), sides.size());
          const int zeros = (si == 0) + (sj == 0);
          auto& lookup = zeros == 0 ? arr.cell_lookup_ : (zeros == 1 ? edge_lookup : vertex_lookup);
          auto& list = zeros == 0 ? arr.cells_ : (zeros == 1 ? arr.edges_ : arr.vertices_);
          auto [it, fresh] = lookup.try_emplace(std::move(key), static_cast<int>(list.size()));
          if (fresh) list.emplace_back(sides, Anchor{i, j, si, sj});
        }
    }

  arr.cell_edge_counts_.assign(arr.cells_.size(), 0);
  arr.cell_circles_.assign(arr.cells_.size(), {});
  arr.edge_cells_.reserve(arr.edges_.size());
  for (const Hemiset& e : arr.edges_) {
    const int k = e.boundary_pairs().front();
    std::array<int, 2> adj{};
    for (int s = 0; s < 2; ++s) {
      std::vector<std::int8_t> c = e.sides();
      c[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(s == 0 ? 1 : -1);
      auto it = arr.cell_lookup_.find(std::string(reinterpret_cast<const char*>(c.data()), c.size()));
      if (it == arr.cell_lookup_.end()) throw std::logic_error("edge without an adjacent cell");
      adj[static_cast<std::size_t>(s)] = it->second;
      arr.cell_edge_counts_[static_cast<std::size_t>(it->second)] += 1;
      arr.cell_circles_[static_cast<std::size_t>(it->second)].push_back(k);
    }
    arr.edge_cells_.push_back(adj);
  }
  for (auto& c : arr.cell_circles_) std::sort(c.begin(), c.end());

  int idx = 0;
  for (const auto* list : {&arr.cells_, &arr.edges_, &arr.vertices_})
    for (const Hemiset& h : *list) arr.face_lookup_.emplace(h.key(), idx++);
  return arr;
}

Arrangement enumerate_faces(const ProjectiveConfig& cfg) { return enumerate_faces(ProjectiveOrder::of(cfg)); }

std::vector<Hemiset> enumerate_cells(const ProjectiveOrder& order) { return enumerate_faces(order).cells(); }
std::vector<Hemiset> enumerate_cells(const ProjectiveConfig& cfg) { return enumerate_faces(cfg).cells(); }

FaceCensus Arrangement::census() const {
  return {cells_.size(), edges_.size(), vertices_.size(), cell_edge_counts_};
}

int Arrangement::cell_index(const Hemiset& h) const {
  auto it = cell_lookup_.find(h.key());
  return it == cell_lookup_.end() ? -1 : it->second;
}

int Arrangement::face_index(const Hemiset& h) const {
  auto it = face_lookup_.find(h.key());
  return it == face_lookup_.end() ? -1 : it->second;
}

std::vector<Hemiset> Arrangement::all_faces() const {
  std::vector<Hemiset> out(cells_);
  out.insert(out.end(), edges_.begin(), edges_.end());
  out.insert(out.end(), vertices_.begin(), vertices_.end());
  return out;
}

int Arrangement::zone_edge_sum(int circle) const {
  if (circle < 0 || static_cast<std::size_t>(circle) >= n_) throw InvalidArgument("no such great circle");
  int sum = 0;
  for (std::size_t c = 0; c < cells_.size(); ++c)
    if (std::binary_search(cell_circles_[c].begin(), cell_circles_[c].end(), circle))
      sum += cell_edge_counts_[c];
  return sum;
}

int Arrangement::zone_cell_count(int circle) const {
  if (circle < 0 || static_cast<std::size_t>(circle) >= n_) throw InvalidArgument("no such great circle");
  int count = 0;
  for (const auto& circles : cell_circles_)
    if (std::binary_search(circles.begin(), circles.end(), circle)) ++count;
  return count;
}

int zone_edge_sum(const ProjectiveOrder& order, int circle) { return enumerate_faces(order).zone_edge_sum(circle); }
int zone_edge_sum(const ProjectiveConfig& cfg, int circle) { return enumerate_faces(cfg).zone_edge_sum(circle); }

}  // namespace otlab
