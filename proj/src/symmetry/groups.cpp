#include <algorithm>
#include <set>

#include "otlab/symmetry.hpp"

namespace otlab {

namespace {

std::vector<int> cyclic_subgroup(const SymmetryGroup& g, int gen) {
  std::vector<int> out;
  Permutation cur = g[static_cast<std::size_t>(gen)];
  out.push_back(0);
  while (!cur.is_identity()) {
    out.push_back(g.index_of(cur));
    cur = compose(cur, g[static_cast<std::size_t>(gen)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, int> element_orders(const SymmetryGroup& g) {
  std::map<int, int> counts;
  for (const auto& e : g.elements()) counts[e.order()] += 1;
  return counts;
}

bool is_dihedral(const SymmetryGroup& g, int m) {
  // r of order m and an involution s outside <r> with s r s = r^-1
  for (std::size_t ri = 0; ri < g.order(); ++ri) {
    if (g[ri].order() != m) continue;
    const auto rot = cyclic_subgroup(g, static_cast<int>(ri));
    const Permutation r_inv = g[ri].inverse();
    for (std::size_t si = 0; si < g.order(); ++si) {
      if (g[si].order() != 2 || std::binary_search(rot.begin(), rot.end(), static_cast<int>(si))) continue;
      if (compose(g[si], compose(g[ri], g[si])) == r_inv) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> maximal_cyclic_subgroups(const SymmetryGroup& group) {
  std::set<std::vector<int>> subs;
  for (std::size_t i = 0; i < group.order(); ++i) subs.insert(cyclic_subgroup(group, static_cast<int>(i)));
  std::vector<std::vector<int>> all(subs.begin(), subs.end());
  std::vector<std::vector<int>> out;
  for (const auto& a : all) {
    bool maximal = true;
    for (const auto& b : all)
      if (b.size() > a.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

McsStats mcs_stats(const SymmetryGroup& group) {
  McsStats s;
  for (const auto& c : maximal_cyclic_subgroups(group)) s.counts[static_cast<int>(c.size())] += 1;
  return s;
}

McsStats expected_mcs(const GroupClass& c) {
  McsStats s;
  switch (c.kind) {
    case GroupClass::Kind::Cyclic: s.counts[c.m] = 1; break;
    case GroupClass::Kind::Dihedral:
      s.counts[2] += c.m;
      s.counts[c.m] += 1;
      break;
    case GroupClass::Kind::A4: s.counts = {{2, 3}, {3, 4}}; break;
    case GroupClass::Kind::S4: s.counts = {{2, 6}, {3, 4}, {4, 3}}; break;
    case GroupClass::Kind::A5: s.counts = {{2, 15}, {3, 10}, {5, 6}}; break;
  }
  return s;
}

GroupClass classify(const SymmetryGroup& group) {
  const int n = static_cast<int>(group.order());
  const McsStats stats = mcs_stats(group);
  const auto orders = element_orders(group);
  GroupClass c;
  if (orders.rbegin()->first == n) {
    c = {GroupClass::Kind::Cyclic, n};
  } else if (n % 2 == 0 && is_dihedral(group, n / 2)) {
    c = {GroupClass::Kind::Dihedral, n / 2};
  } else if (n == 12 && orders == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}}) {
    c = {GroupClass::Kind::A4, 0};
  } else if (n == 24 && orders == std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}) {
    c = {GroupClass::Kind::S4, 0};
  } else if (n == 60 && orders == std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}) {
    c = {GroupClass::Kind::A5, 0};
  } else {
    throw UnclassifiableGroup("group of order " + std::to_string(n) + " matches no rotation group");
  }
  if (!(stats == expected_mcs(c)))
    throw UnclassifiableGroup("maximal cyclic subgroup statistics disagree with " + c.name());
  return c;
}

GroupClass SymmetryGroup::classification() const { return classify(*this); }

std::string OrbitType::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s + "]";
}

bool orbit_type_allowed(const OrbitType& t, std::size_t group_order) {
  const int n = static_cast<int>(group_order);
  const std::vector<std::vector<int>> allowed{
      {1, 1}, {2, n / 2, n / 2}, {4, 4, 6}, {6, 8, 12}, {12, 20, 30}};
  std::vector<int> sorted = t.sizes;
  std::sort(sorted.begin(), sorted.end());
  for (auto a : allowed) {
    std::sort(a.begin(), a.end());
    if (a == sorted) {
      if (a.size() == 3 && a[0] + a[1] + a[2] != n + 2) return false;
      return true;
    }
  }
  return false;
}

}  // namespace otlab
