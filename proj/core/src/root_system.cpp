#include "exg/root_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "exg/dynkin.hpp"

namespace exg {

namespace {

// Chain with an extra bond between a and b of multiplicity given by the pair
// (c_ab, c_ba). Indices are 0-based here; public numbering is 1-based Bourbaki.
void link(std::vector<std::vector<int>>& c, int a, int b, int cab = -1, int cba = -1) {
  c[a][b] = cab;
  c[b][a] = cba;
}

}  // namespace

std::vector<std::vector<int>> cartan_matrix(GroupType type) {
  require_valid_type(type);
  const int n = type.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;

  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case Family::B:
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      link(c, n - 2, n - 1, -2, -1);
      break;
    case Family::C:
      // alpha_n long.
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      link(c, n - 2, n - 1, -1, -2);
      break;
    case Family::D:
      if (n == 2) break;  // A1 x A1, no bonds
      for (int i = 0; i + 1 < n - 1; ++i) link(c, i, i + 1);
      link(c, n - 3, n - 1);
      c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4.
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case Family::F:
      // 1 - 2 => 3 - 4 with alpha_1, alpha_2 long.
      link(c, 0, 1);
      link(c, 1, 2, -2, -1);
      link(c, 2, 3);
      break;
    case Family::G:
      // alpha_1 long, alpha_2 short; highest root 2a1 + 3a2.
      link(c, 0, 1, -3, -1);
      break;
  }
  return c;
}

int Root::height() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

bool Root::is_positive() const {
  for (int c : coeffs)
    if (c != 0) return c > 0;
  return false;
}

RootSystem::RootSystem(GroupType type) : type_(type), cartan_(cartan_matrix(type)) {
  const int n = type_.rank;

  // Half squared lengths of the simple roots from the Cartan asymmetry:
  // c_ij (a_j, a_j) = 2 (a_i, a_j) = c_ji (a_i, a_i), so d_j/d_i = c_ji/c_ij.
  // Propagated exactly, rescaling every assigned entry when a ratio divides.
  simple_length_.assign(n, 0);
  std::vector<int> d(n, 0);
  d[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (d[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (cartan_[i][j] == 0 || d[j] != 0) continue;
        const int den = cartan_[i][j];
        int num = d[i] * cartan_[j][i];
        if (num % den != 0) {
          const int scale = den < 0 ? -den : den;
          for (int& v : d)
            if (v != 0) v *= scale;
          num = d[i] * cartan_[j][i];
        }
        d[j] = num / den;
        changed = true;
      }
    }
    // disconnected diagram: seed the next component
    for (int i = 0; i < n && !changed; ++i)
      if (d[i] == 0) {
        d[i] = 1;
        changed = true;
      }
  }
  const int dmin = *std::min_element(d.begin(), d.end());
  for (int i = 0; i < n; ++i) simple_length_[i] = 2 * d[i] / dmin;
  two_lengths_ = *std::max_element(simple_length_.begin(), simple_length_.end()) > 2;

  // Reflection closure from the simple roots. Heights are bounded by the
  // height of the highest root, so this terminates.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int j = 0; j < n; ++j) {
        const int pairing = pair_with_simple_coroot(beta, j);
        if (pairing == 0) continue;
        std::vector<int> image = beta;
        image[j] -= pairing;
        bool positive = true, negative = true;
        for (int c : image) {
          if (c > 0) negative = false;
          if (c < 0) positive = false;
        }
        if (!positive && !negative)
          throw InconsistencyError("mixed-sign vector in reflection closure for " + type_.name());
        if (!positive) continue;  // negatives are mirrored at the end
        if (seen.insert(image).second) next.push_back(image);
      }
    }
    frontier = std::move(next);
  }

  positive_roots_.reserve(seen.size());
  for (const auto& coeffs : seen) {
    Root r;
    r.coeffs = coeffs;
    r.is_long = squared_length(coeffs) > 2 || !two_lengths_;
    positive_roots_.push_back(std::move(r));
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
    const int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
  });

  roots_ = positive_roots_;
  for (const auto& r : positive_roots_) {
    Root neg = r;
    for (int& c : neg.coeffs) c = -c;
    roots_.push_back(std::move(neg));
  }

  highest_root_ = positive_roots_.back();
  for (const auto& r : positive_roots_)
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
      if (r.coeffs[i] > highest_root_.coeffs[i])
        throw InconsistencyError("highest root fails coefficientwise dominance for " + type_.name());
}

int RootSystem::pair_with_simple_coroot(const std::vector<int>& beta, int j) const {
  int s = 0;
  for (int i = 0; i < type_.rank; ++i) s += beta[i] * cartan_[i][j];
  return s;
}

int RootSystem::inner_twice(const std::vector<int>& a, const std::vector<int>& b) const {
  int s = 0;
  for (int i = 0; i < type_.rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < type_.rank; ++j) {
      if (b[j] == 0) continue;
      s += a[i] * b[j] * cartan_[i][j] * simple_length_[j];
    }
  }
  return s;
}

int RootSystem::pair_with_coroot(const std::vector<int>& a, const std::vector<int>& b) const {
  const int len_b = squared_length(b);
  const int inner2 = inner_twice(a, b);
  if (inner2 % len_b != 0) throw InconsistencyError("non-integral coroot pairing");
  return inner2 / len_b;
}

int RootSystem::squared_length(const std::vector<int>& beta) const {
  // (beta, beta) = sum_ij b_i b_j c_ij d_j with d_j = simple_length_[j] / 2;
  // work in units where short roots have squared length 2.
  int s = 0;
  for (int i = 0; i < type_.rank; ++i) {
    if (beta[i] == 0) continue;
    for (int j = 0; j < type_.rank; ++j) {
      if (beta[j] == 0) continue;
      s += beta[i] * beta[j] * cartan_[i][j] * simple_length_[j];
    }
  }
  if (s % 2 != 0) throw InconsistencyError("non-integral squared length");
  return s / 2;
}

bool RootSystem::contains(const std::vector<int>& coeffs) const {
  Root probe;
  probe.coeffs = coeffs;
  if (probe.is_positive())
    return std::any_of(positive_roots_.begin(), positive_roots_.end(),
                       [&](const Root& r) { return r.coeffs == coeffs; });
  std::vector<int> neg(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  return std::any_of(positive_roots_.begin(), positive_roots_.end(),
                     [&](const Root& r) { return r.coeffs == neg; });
}

std::vector<Root> RootSystem::subsystem_closure(const std::vector<std::vector<int>>& seeds) const {
  // Closure of the seeds under reflections in elements of the generated set.
  std::set<std::vector<int>> members;
  for (const auto& s : seeds) {
    if (!contains(s)) throw DomainError("subsystem seed is not a root of " + type_.name());
    members.insert(s);
  }
  bool grew = !members.empty();
  while (grew) {
    grew = false;
    const std::vector<std::vector<int>> current(members.begin(), members.end());
    for (const auto& beta : current) {
      for (const auto& alpha : current) {
        const int pairing = pair_with_coroot(alpha, beta);
        if (pairing == 0) continue;
        std::vector<int> image(type_.rank);
        for (int i = 0; i < type_.rank; ++i) image[i] = alpha[i] - pairing * beta[i];
        if (members.insert(image).second) grew = true;
      }
    }
  }

  std::vector<Root> out;
  out.reserve(members.size());
  for (const auto& coeffs : members) {
    Root r;
    r.coeffs = coeffs;
    r.is_long = squared_length(coeffs) > 2 || !two_lengths_;
    out.push_back(std::move(r));
  }
  return out;
}

const RootSystem& get_root_system(GroupType type) {
  static std::mutex mutex;
  static std::map<GroupType, RootSystem> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, RootSystem(type)).first;
  return it->second;
}

int subsystem_dim(const SubsystemDescriptor& descriptor) {
  int dim = descriptor.torus_rank;
  for (const auto& c : descriptor.components) {
    const RootSystem& rs = get_root_system(c.type);
    dim += rs.root_count() + rs.rank();
  }
  return dim;
}

ExtendedDiagram RootSystem::extended_diagram() const {
  const int n = type_.rank;
  ExtendedDiagram ext;
  ext.marks.resize(n + 1);
  ext.marks[0] = 1;
  for (int i = 0; i < n; ++i) ext.marks[i + 1] = highest_root_.coeffs[i];

  ext.node_coeffs.resize(n + 1);
  ext.node_is_long.resize(n + 1);
  std::vector<int> neg_theta(n);
  for (int i = 0; i < n; ++i) neg_theta[i] = -highest_root_.coeffs[i];
  ext.node_coeffs[0] = neg_theta;
  ext.node_is_long[0] = highest_root_.is_long;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    ext.node_coeffs[i + 1] = e;
    ext.node_is_long[i + 1] = squared_length(e) > 2 || !two_lengths_;
  }

  ext.cartan.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      if (a == b) {
        ext.cartan[a][b] = 2;
        continue;
      }
      ext.cartan[a][b] = pair_with_coroot(ext.node_coeffs[a], ext.node_coeffs[b]);
    }
  }
  return ext;
}

}  // namespace exg
