#include "exg/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "exg/root_system.hpp"

namespace exg {

namespace {

bool component_less(const SubsystemComponent& a, const SubsystemComponent& b) {
  if (a.type.rank != b.type.rank) return a.type.rank < b.type.rank;
  if (a.type.family != b.type.family) return a.type.family < b.type.family;
  return a.tilde < b.tilde;  // untilded before tilde
}

std::string component_name(const SubsystemComponent& c) {
  return (c.tilde ? "~" : "") + c.type.name();
}

// Identifies one connected diagram from its pairing matrix and node lengths.
SubsystemComponent classify_component(const std::vector<int>& nodes,
                                      const std::vector<std::vector<int>>& cartan,
                                      const std::vector<bool>& is_long,
                                      bool ambient_two_lengths) {
  const int n = static_cast<int>(nodes.size());
  SubsystemComponent out;
  out.tilde = false;
  if (ambient_two_lengths) {
    out.tilde = std::none_of(nodes.begin(), nodes.end(), [&](int v) { return is_long[v]; });
  }

  auto bond = [&](int a, int b) { return cartan[nodes[a]][nodes[b]] * cartan[nodes[b]][nodes[a]]; };

  if (n == 1) {
    out.type = GroupType{Family::A, 1};
    return out;
  }

  std::vector<int> degree(n, 0);
  int max_bond = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (bond(a, b) > 0) ++degree[a];
      max_bond = std::max(max_bond, bond(a, b));
    }

  if (max_bond == 3) {
    out.type = GroupType{Family::G, 2};
    return out;
  }

  const int forks = static_cast<int>(std::count_if(degree.begin(), degree.end(), [](int d) { return d >= 3; }));

  if (max_bond == 2) {
    // B_n, C_n or F_4; all are chains.
    if (forks != 0) throw InconsistencyError("double bond in a forked diagram");
    if (n == 2) {
      out.type = GroupType{Family::B, 2};  // B2 = C2, one canonical name
      return out;
    }
    const int longs = static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [&](int v) { return is_long[v]; }));
    const int shorts = n - longs;
    if (n == 4 && longs == 2 && shorts == 2) {
      out.type = GroupType{Family::F, 4};
      out.tilde = false;
      return out;
    }
    if (shorts == 1) {
      out.type = GroupType{Family::B, n};
      return out;
    }
    if (longs == 1) {
      out.type = GroupType{Family::C, n};
      return out;
    }
    throw InconsistencyError("unrecognized doubly-laced diagram");
  }

  // Simply laced: A, D or E.
  if (forks == 0) {
    out.type = GroupType{Family::A, n};
    return out;
  }
  if (forks > 1) throw InconsistencyError("diagram with more than one fork");
  int fork = 0;
  for (int a = 0; a < n; ++a)
    if (degree[a] >= 3) fork = a;
  if (degree[fork] > 3) throw InconsistencyError("node of degree > 3");

  // Arm lengths from the fork.
  std::vector<int> arms;
  for (int a = 0; a < n; ++a) {
    if (a == fork || bond(fork, a) == 0) continue;
    int len = 1, prev = fork, cur = a;
    while (true) {
      int next = -1;
      for (int b = 0; b < n; ++b) {
        if (b == prev || b == cur || bond(cur, b) == 0) continue;
        next = b;
        break;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw InconsistencyError("fork without three arms");
  if (arms[0] == 1 && arms[1] == 1) {
    out.type = GroupType{Family::D, n};
    return out;
  }
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    out.type = GroupType{Family::E, n};
    return out;
  }
  throw InconsistencyError("unrecognized simply-laced diagram");
}

}  // namespace

int SubsystemDescriptor::rank() const {
  int r = torus_rank;
  for (const auto& c : components) r += c.type.rank;
  return r;
}

std::string subsystem_label(const std::vector<SubsystemComponent>& components, int torus_rank) {
  std::vector<SubsystemComponent> sorted = components;
  std::sort(sorted.begin(), sorted.end(), component_less);
  std::string label;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    label += component_name(sorted[i]);
    if (j - i > 1) label += "^" + std::to_string(j - i);
    i = j;
  }
  if (torus_rank > 0) label += "T" + std::to_string(torus_rank);
  if (label.empty()) label = "T0";
  return label;
}

SubsystemDescriptor make_descriptor(std::vector<SubsystemComponent> components, int torus_rank) {
  std::sort(components.begin(), components.end(), component_less);
  SubsystemDescriptor d;
  d.components = std::move(components);
  d.torus_rank = torus_rank;
  d.label = subsystem_label(d.components, torus_rank);
  return d;
}

SubsystemDescriptor classify_simple_system(const RootSystem& ambient,
                                           const std::vector<std::vector<int>>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> cartan(n, std::vector<int>(n, 2));
  std::vector<bool> is_long(n, true);
  for (int a = 0; a < n; ++a)
    is_long[a] = ambient.squared_length(nodes[a]) > 2 || !ambient.has_two_lengths();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      cartan[a][b] = ambient.pair_with_coroot(nodes[a], nodes[b]);
      if (cartan[a][b] > 0) throw DomainError("node set is not a simple system (positive pairing)");
    }
  }

  // Split into connected components.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int a = 0; a < n; ++a) {
    if (comp[a] >= 0) continue;
    std::vector<int> stack{a};
    comp[a] = ncomp;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b)
        if (comp[b] < 0 && cartan[v][b] != 0) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }

  std::vector<SubsystemComponent> components;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> members;
    for (int a = 0; a < n; ++a)
      if (comp[a] == c) members.push_back(a);
    components.push_back(classify_component(members, cartan, is_long, ambient.has_two_lengths()));
  }
  return make_descriptor(std::move(components), ambient.rank() - n);
}

SubsystemDescriptor parse_subsystem_label(const std::string& label) {
  std::vector<SubsystemComponent> components;
  int torus_rank = 0;
  std::size_t i = 0;
  while (i < label.size()) {
    bool tilde = false;
    if (label[i] == '~') {
      tilde = true;
      ++i;
    }
    if (i >= label.size() || !std::isalpha(static_cast<unsigned char>(label[i])))
      throw InvalidTypeError("cannot parse subsystem label '" + label + "'");
    const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(label[i])));
    ++i;
    int rank = 0;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) {
      rank = rank * 10 + (label[i] - '0');
      ++i;
    }
    if (fam == 'T') {
      torus_rank += rank;
      continue;
    }
    int count = 1;
    if (i < label.size() && label[i] == '^') {
      ++i;
      count = 0;
      while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) {
        count = count * 10 + (label[i] - '0');
        ++i;
      }
      if (count <= 0) throw InvalidTypeError("bad multiplicity in subsystem label '" + label + "'");
    }
    const GroupType t{static_cast<Family>(fam), rank};
    require_valid_type(t);
    for (int k = 0; k < count; ++k) components.push_back(SubsystemComponent{t, tilde});
  }
  return make_descriptor(std::move(components), torus_rank);
}

}  // namespace exg
