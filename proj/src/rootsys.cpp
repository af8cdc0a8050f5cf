#include "flagvar/rootsys.hpp"

#include <algorithm>
#include <unordered_set>

namespace flagvar {

namespace {

using Gram = std::vector<std::vector<long long>>;

// Inner products of simple roots, Bourbaki numbering, scaled so every entry
// is an integer. Pairings 2(x,y)/(y,y) are scale invariant, so the overall
// normalization per factor is irrelevant.
Gram gram_for(const RootSystemType& t) {
  const int n = t.rank;
  Gram g(n, std::vector<long long>(n, 0));
  auto link = [&](int i, int j, long long v) { g[i][j] = g[j][i] = v; };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Series::B:  // alpha_n short
      for (int i = 0; i < n; ++i) g[i][i] = (i == n - 1) ? 1 : 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Series::C:  // alpha_n long
      for (int i = 0; i < n; ++i) g[i][i] = (i == n - 1) ? 4 : 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Series::D:  // alpha_n attached to alpha_{n-2}
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 2, -1);
      link(n - 3, n - 1, -1);
      break;
    case Series::E:  // chain 1-3-4-5-..., node 2 attached to node 4
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Series::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      g = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    case Series::G:  // alpha_1 short, alpha_2 long
      g = {{2, -3}, {-3, 6}};
      break;
  }
  return g;
}

int height_of(const std::vector<int>& v) {
  int h = 0;
  for (int c : v) h += c;
  return h;
}

// Canonical positive-root order: height first, then coefficient vectors with
// earlier nodes more significant (larger leading coefficient first).
bool canonical_less(const std::vector<int>& a, const std::vector<int>& b) {
  int ha = height_of(a), hb = height_of(b);
  if (ha != hb) return ha < hb;
  return a > b;
}

}  // namespace

Series series_from_char(char c) {
  switch (c) {
    case 'A': return Series::A;
    case 'B': return Series::B;
    case 'C': return Series::C;
    case 'D': return Series::D;
    case 'E': return Series::E;
    case 'F': return Series::F;
    case 'G': return Series::G;
  }
  raise(Errc::InvalidType, std::string("unknown series '") + c + "'");
}

void RootSystemType::validate() const {
  bool ok = false;
  switch (series) {
    case Series::A: ok = rank >= 1; break;
    case Series::B: ok = rank >= 2; break;
    case Series::C: ok = rank >= 2; break;
    case Series::D: ok = rank >= 3; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
    case Series::F: ok = rank == 4; break;
    case Series::G: ok = rank == 2; break;
  }
  if (!ok) raise(Errc::InvalidType, "rank " + std::to_string(rank) + " not admissible for series " + std::string(1, static_cast<char>(series)));
}

std::string RootSystemType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

int Root::height() const { return height_of(coeffs); }

SystemPtr RootSystem::build(const RootSystemType& type) { return build_product({type}); }

SystemPtr RootSystem::build_product(const std::vector<RootSystemType>& factors) {
  if (factors.empty()) raise(Errc::InvalidType, "no factors given");
  for (const auto& f : factors) f.validate();

  auto sys = std::shared_ptr<RootSystem>(new RootSystem());
  sys->factors_ = factors;
  sys->offsets_.push_back(0);
  for (const auto& f : factors) sys->offsets_.push_back(sys->offsets_.back() + f.rank);
  const int n = sys->offsets_.back();
  sys->rank_ = n;

  // Block-diagonal Gram matrix; cross-factor pairings vanish, so generation
  // below never mixes factors.
  sys->gram_.assign(n, std::vector<long long>(n, 0));
  for (std::size_t f = 0; f < factors.size(); ++f) {
    Gram g = gram_for(factors[f]);
    int off = sys->offsets_[f];
    for (int i = 0; i < factors[f].rank; ++i)
      for (int j = 0; j < factors[f].rank; ++j) sys->gram_[off + i][off + j] = g[i][j];
  }
  sys->cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sys->cartan_[i][j] = static_cast<int>(2 * sys->gram_[i][j] / sys->gram_[i][i]);

  // Breadth-first closure from the simple roots: gamma + alpha_i is a root
  // exactly when q = p - <gamma, alpha_i^v> is positive, where p counts how
  // far the alpha_i-string continues below gamma. Processing by height keeps
  // every root of the string below gamma already available.
  std::unordered_set<std::vector<int>, CoeffVectorHash> seen;
  std::vector<std::vector<int>> wave;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    wave.push_back(e);
  }
  std::vector<std::vector<int>> all(wave);
  while (!wave.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& gamma : wave) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        std::vector<int> down = gamma;
        for (;;) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        if (p - sys->pairing(gamma, i) > 0) {
          std::vector<int> up = gamma;
          up[i] += 1;
          if (seen.insert(up).second) {
            next.push_back(up);
            all.push_back(up);
          }
        }
      }
    }
    wave = std::move(next);
  }

  std::sort(all.begin(), all.end(), canonical_less);
  const int m = static_cast<int>(all.size());
  sys->positive_.reserve(m);
  for (int k = 0; k < m; ++k) {
    sys->positive_.push_back(Root{all[k], k});
    sys->index_.emplace(all[k], k);
    std::vector<int> neg(all[k]);
    for (int& c : neg) c = -c;
    sys->index_.emplace(std::move(neg), m + k);
  }
  return sys;
}

std::string RootSystem::name() const {
  std::string s;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (f) s += "x";
    s += factors_[f].name();
  }
  return s;
}

const Root& RootSystem::simple(int node1) const {
  if (node1 < 1 || node1 > rank_) raise(Errc::InvalidNode, "node " + std::to_string(node1) + " outside 1.." + std::to_string(rank_));
  std::vector<int> e(rank_, 0);
  e[node1 - 1] = 1;
  return positive_[index_.at(e)];
}

Root RootSystem::root(int index) const {
  const int m = positive_count();
  if (index < 0 || index >= 2 * m) raise(Errc::ForeignRoot, "root index " + std::to_string(index) + " out of range");
  if (index < m) return positive_[index];
  Root r = positive_[index - m];
  for (int& c : r.coeffs) c = -c;
  r.index = index;
  return r;
}

bool RootSystem::is_root(std::span<const int> coeffs) const { return index_of(coeffs).has_value(); }

std::optional<int> RootSystem::index_of(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank_) return std::nullopt;
  std::vector<int> v(coeffs.begin(), coeffs.end());
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void RootSystem::check_member(const Root& r) const {
  if (r.index < 0 || r.index >= root_count() || root(r.index).coeffs != r.coeffs)
    raise(Errc::ForeignRoot, "root does not belong to " + name());
}

std::optional<Root> RootSystem::add_roots(const Root& a, const Root& b) const {
  check_member(a);
  check_member(b);
  std::vector<int> sum(rank_);
  for (int i = 0; i < rank_; ++i) sum[i] = a.coeffs[i] + b.coeffs[i];
  auto idx = index_of(sum);
  if (!idx) return std::nullopt;
  return root(*idx);
}

std::optional<int> RootSystem::sum_index(int a, int b) const {
  Root ra = root(a), rb = root(b);
  std::vector<int> sum(rank_);
  for (int i = 0; i < rank_; ++i) sum[i] = ra.coeffs[i] + rb.coeffs[i];
  return index_of(sum);
}

Root RootSystem::highest_root() const {
  if (!irreducible()) raise(Errc::ReducibleSystem, name() + " has several factors; query each component");
  int best = -1, bestH = -1, ties = 0;
  for (int k = 0; k < positive_count(); ++k) {
    int h = positive_[k].height();
    if (h > bestH) {
      bestH = h;
      best = k;
      ties = 1;
    } else if (h == bestH) {
      ++ties;
    }
  }
  if (ties != 1) raise(Errc::ReducibleSystem, "no unique maximal root in " + name());
  return positive_[best];
}

int RootSystem::pairing(std::span<const int> coeffs, int node0) const {
  long long num = 0;
  for (int j = 0; j < rank_; ++j) num += coeffs[j] * gram_[j][node0];
  return static_cast<int>(2 * num / gram_[node0][node0]);
}

int RootSystem::factor_of_node(int node1) const {
  if (node1 < 1 || node1 > rank_) raise(Errc::InvalidNode, "node " + std::to_string(node1) + " outside 1.." + std::to_string(rank_));
  for (int f = 0; f < factor_count(); ++f)
    if (node1 - 1 < offsets_[f + 1]) return f;
  return factor_count() - 1;
}

std::vector<std::pair<int, SystemPtr>> diagram_components(const std::vector<RootSystemType>& types) {
  if (types.empty()) raise(Errc::InvalidType, "no factors given");
  std::vector<std::pair<int, SystemPtr>> out;
  out.reserve(types.size());
  for (std::size_t f = 0; f < types.size(); ++f) out.emplace_back(static_cast<int>(f), RootSystem::build(types[f]));
  return out;
}

}  // namespace flagvar
