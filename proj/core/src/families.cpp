#include "specham/families.hpp"

#include <stdexcept>

namespace specham {

std::string family_name(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::M: return "M";
    case Family::N: return "N";
    case Family::Split: return "split";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "L" || name == "l") return Family::L;
  if (name == "M" || name == "m") return Family::M;
  if (name == "N" || name == "n") return Family::N;
  if (name == "split" || name == "SPLIT" || name == "Split") return Family::Split;
  return std::nullopt;
}

std::array<int, 3> ExtremalSpec::class_sizes() const {
  switch (family) {
    case Family::L: return {k, 1, n - k - 1};
    case Family::M: return {k, k, n - 2 * k};
    case Family::N: return {k + 1, k, n - 2 * k - 1};
    case Family::Split: return {k + 1, 0, n - k - 1};
  }
  return {0, 0, 0};
}

void ExtremalSpec::validate() const {
  int k_min = (family == Family::N || family == Family::Split) ? 0 : 1;
  if (k < k_min) throw std::invalid_argument("family parameter k too small");
  if (n < 2 * k + 1) throw std::invalid_argument("family needs n >= 2k+1");
}

ExtremalGraph build_extremal(const ExtremalSpec& spec) {
  spec.validate();
  auto sizes = spec.class_sizes();
  Partition p;
  int next = 0;
  for (int i = 0; i < sizes[0]; ++i) p.X.push_back(next++);
  for (int i = 0; i < sizes[1]; ++i) p.Y.push_back(next++);
  for (int i = 0; i < sizes[2]; ++i) p.Z.push_back(next++);

  Graph g(spec.n);
  auto add_clique = [&](const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
  };
  auto add_all_cross = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
      for (int v : b) g.add_edge(u, v);
  };

  switch (spec.family) {
    case Family::L:
      // X u Y and Z u Y are cliques; X is independent of Z
      add_clique(p.X);
      add_clique(p.Z);
      add_all_cross(p.Y, p.X);
      add_all_cross(p.Y, p.Z);
      break;
    case Family::M:
    case Family::N:
      // X independent, joined to all of Y; Y u Z is a clique
      add_clique(p.Y);
      add_clique(p.Z);
      add_all_cross(p.Y, p.Z);
      add_all_cross(p.X, p.Y);
      break;
    case Family::Split:
      add_clique(p.X);
      add_clique(p.Z);
      break;
  }
#ifndef NDEBUG
  g.check_consistent();
#endif
  return {std::move(g), std::move(p)};
}

std::string edge_class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::YY: return "YY";
    case EdgeClass::YZ: return "YZ";
    case EdgeClass::ZZ: return "ZZ";
  }
  return "?";
}

std::optional<EdgeClass> edge_class_from_name(const std::string& name) {
  if (name == "YY" || name == "yy") return EdgeClass::YY;
  if (name == "YZ" || name == "yz") return EdgeClass::YZ;
  if (name == "ZZ" || name == "zz") return EdgeClass::ZZ;
  return std::nullopt;
}

std::optional<std::pair<int, int>> class_edge_representative(const ExtremalSpec& spec,
                                                             const Partition& p, EdgeClass c) {
  switch (c) {
    case EdgeClass::YY:
      if (p.Y.size() < 2) return std::nullopt;
      return std::make_pair(p.Y[0], p.Y[1]);
    case EdgeClass::YZ:
      if (p.Y.empty() || p.Z.empty()) return std::nullopt;
      return std::make_pair(p.Y[0], p.Z[0]);
    case EdgeClass::ZZ:
      if (p.Z.size() < 2) return std::nullopt;
      // Split's Z is a clique, as is every other family's Y u Z
      return std::make_pair(p.Z[0], p.Z[1]);
  }
  return std::nullopt;
}

std::vector<EdgeClass> delta_preserving_orbits(const ExtremalSpec& spec) {
  spec.validate();
  auto sizes = spec.class_sizes();
  // degrees by class in the intact graph
  int y_deg = spec.n - 1;
  int z_deg = 0;
  switch (spec.family) {
    case Family::L: z_deg = spec.n - spec.k - 1; break;
    case Family::M: z_deg = spec.n - spec.k - 1; break;
    case Family::N: z_deg = spec.n - spec.k - 2; break;
    case Family::Split:
      z_deg = spec.n - spec.k - 2;
      y_deg = 0;
      break;
  }
  std::vector<EdgeClass> out;
  if (spec.family != Family::Split) {
    if (sizes[1] >= 2 && y_deg - 1 >= spec.k) out.push_back(EdgeClass::YY);
    if (sizes[1] >= 1 && sizes[2] >= 1 && y_deg - 1 >= spec.k && z_deg - 1 >= spec.k)
      out.push_back(EdgeClass::YZ);
  }
  if (sizes[2] >= 2 && z_deg - 1 >= spec.k) out.push_back(EdgeClass::ZZ);
  return out;
}

}  // namespace specham
