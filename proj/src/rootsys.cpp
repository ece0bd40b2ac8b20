#include "qkchev/rootsys.hpp"

#include "qkchev/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <utility>

namespace qkchev {

namespace {

const char* family_letter(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
  }
  return "?";
}

struct Diagram {
  std::vector<std::pair<int, int>> bonds;
  std::vector<int> len2;
};

Diagram diagram(const LieType& t) {
  const int n = t.rank;
  Diagram g;
  g.len2.assign(n, 1);
  auto chain = [&](int upto) {
    for (int j = 0; j + 1 < upto; ++j) g.bonds.emplace_back(j, j + 1);
  };
  switch (t.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n);
      for (int j = 0; j + 1 < n; ++j) g.len2[j] = 2;
      break;
    case Family::C:
      chain(n);
      g.len2[n - 1] = 2;
      break;
    case Family::D:
      chain(n - 1);
      g.bonds.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      chain(n - 1);
      g.bonds.emplace_back(2, n - 1);
      break;
    case Family::F:
      chain(4);
      g.len2 = {2, 2, 1, 1};
      break;
    case Family::G:
      chain(2);
      g.len2 = {1, 3};
      break;
  }
  return g;
}

}  // namespace

LieType LieType::make(Family f, int rank) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = rank >= 1 && rank <= kMaxRank; break;
    case Family::B:
    case Family::C: ok = rank >= 2 && rank <= kMaxRank; break;
    case Family::D: ok = rank >= 3 && rank <= kMaxRank; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw PreconditionError(std::string("invalid Lie type ") + family_letter(f) + std::to_string(rank) +
                            " (E needs rank 6-8, F rank 4, G rank 2, B/C rank >= 2, D rank >= 3, max rank " +
                            std::to_string(kMaxRank) + ")");
  return LieType{f, rank};
}

LieType LieType::parse(const std::string& s) {
  if (s.size() < 2) throw PreconditionError("cannot parse Lie type '" + s + "'");
  static const std::string letters = "ABCDEFG";
  auto pos = letters.find(static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))));
  if (pos == std::string::npos) throw PreconditionError("unknown family in '" + s + "'");
  int rank = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw PreconditionError("bad rank in '" + s + "'");
    rank = rank * 10 + (s[k] - '0');
    if (rank > 99) throw PreconditionError("bad rank in '" + s + "'");
  }
  return make(static_cast<Family>(pos), rank);
}

std::string LieType::name() const { return family_letter(family) + std::to_string(rank); }

int expected_positive_count(const LieType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

double weyl_group_order(const LieType& t) {
  const int n = t.rank;
  double fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  switch (t.family) {
    case Family::A: return fact * (n + 1);
    case Family::B:
    case Family::C: return fact * static_cast<double>(1u << n);
    case Family::D: return fact * static_cast<double>(1u << (n - 1));
    case Family::E: return n == 6 ? 51840.0 : n == 7 ? 2903040.0 : 696729600.0;
    case Family::F: return 1152.0;
    case Family::G: return 12.0;
  }
  return 0;
}

RootSystem::RootSystem(LieType t) : type_(LieType::make(t.family, t.rank)), rank_(t.rank) {
  const int n = rank_;
  Diagram g = diagram(type_);
  d_ = g.len2;
  cartan_ = IMat::Zero(n, n);
  for (int j = 0; j < n; ++j) cartan_(j, j) = 2;
  for (auto [a, b] : g.bonds) {
    cartan_(a, b) = -std::max(d_[a], d_[b]) / d_[b];
    cartan_(b, a) = -std::max(d_[a], d_[b]) / d_[a];
  }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (cartan_(j, k) * d_[k] != cartan_(k, j) * d_[j]) fail_internal("Cartan matrix not symmetrizable");

  // Positive roots: closure of the simple roots under simple reflections,
  // discarding anything that leaves the positive cone.
  std::deque<RootVec> queue;
  std::vector<RootVec> found;
  auto seen = [&](const RootVec& b) { return index_.count(b) > 0; };
  for (int j = 0; j < n; ++j) {
    RootVec a = RootVec::unit(n, j);
    index_.emplace(a, 0);
    found.push_back(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    RootVec b = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      RootVec c = reflect_simple(j, b);
      if (!c.nonnegative() || c.is_zero() || seen(c)) continue;
      index_.emplace(c, 0);
      found.push_back(c);
      queue.push_back(c);
    }
  }
  std::sort(found.begin(), found.end(), [](const RootVec& x, const RootVec& y) {
    if (x.sum() != y.sum()) return x.sum() < y.sum();
    return y < x;
  });
  roots_ = std::move(found);
  index_.clear();
  for (int r = 0; r < num_positive(); ++r) index_.emplace(roots_[r], r);
  if (num_positive() != expected_positive_count(type_)) fail_internal("positive root count for " + type_.name());
  for (int j = 0; j < n; ++j)
    if (roots_[j] != RootVec::unit(n, j)) fail_internal("simple roots not first");

  for (const RootVec& b : roots_) {
    root_weights_.push_back(to_weight(b));
    int two_len = 0;  // 2 (b, b) with short roots normalised to (a, a) = 1
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) two_len += b[j] * b[k] * cartan_(j, k) * d_[k];
    if (two_len % 2) fail_internal("odd root length");
    const int len2 = two_len / 2;
    CorootVec c(n);
    for (int k = 0; k < n; ++k) {
      if ((b[k] * d_[k]) % len2) fail_internal("non-integral coroot");
      c[k] = b[k] * d_[k] / len2;
    }
    coroots_.push_back(c);
  }
  theta_ = num_positive() - 1;
  for (int r = 0; r < num_positive(); ++r)
    if (!(theta() - roots_[r]).nonnegative()) fail_internal("highest root is not maximal");
  Weight twice_rho(n);
  for (const Weight& w : root_weights_) twice_rho += w;
  for (int j = 0; j < n; ++j)
    if (twice_rho[j] != 2) fail_internal("<rho, alpha_j^vee> != 1");
}

std::optional<int> RootSystem::find_root(const RootVec& b) const {
  if (b.size() != rank_) return std::nullopt;
  auto it = index_.find(b);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::index_of(const RootVec& b) const {
  auto r = find_root(b);
  if (!r) throw PreconditionError("not a positive root: " + format_coords(b));
  return *r;
}

bool RootSystem::in_subsystem(int r, NodeSet s) const {
  for (int j = 0; j < rank_; ++j)
    if (roots_[r][j] != 0 && !contains(s, j)) return false;
  return true;
}

Weight RootSystem::rho() const {
  Weight w(rank_);
  for (int j = 0; j < rank_; ++j) w[j] = 1;
  return w;
}

int RootSystem::two_rho_pairing(int r, NodeSet s) const {
  int total = 0;
  for (int q = 0; q < num_positive(); ++q)
    if (!in_subsystem(q, s)) total += pairing(root_weights_[q], coroots_[r]);
  return total;
}

int RootSystem::pairing(const Weight& lam, const CorootVec& xi) const {
  if (lam.size() != rank_ || xi.size() != rank_) throw PreconditionError("pairing: dimension mismatch");
  return lam.coeffs().dot(xi.coeffs());
}

Weight RootSystem::to_weight(const RootVec& b) const {
  if (b.size() != rank_) throw PreconditionError("to_weight: dimension mismatch");
  return Weight(IVec(cartan_.transpose() * b.coeffs()));
}

std::vector<Rational> RootSystem::to_root_coords(const Weight& lam) const {
  // Solve cartan^T c = lam exactly.
  const int n = rank_;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = cartan_(c, r);
    m[r][n] = lam[r];
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[piv][col].numerator() == 0) ++piv;
    std::swap(m[piv], m[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].numerator() == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Rational> out(n);
  for (int r = 0; r < n; ++r) out[r] = m[r][n] / m[r][r];
  return out;
}

CorootVec RootSystem::coroot_of(const RootVec& b) const {
  if (auto r = find_root(b)) return coroots_[*r];
  if (auto r = find_root(-b)) return -coroots_[*r];
  throw PreconditionError("not a root: " + format_coords(b));
}

Weight RootSystem::reflect(const RootVec& b, const Weight& lam) const {
  return lam - to_weight(b) * pairing(lam, coroot_of(b));
}

Weight RootSystem::reflect_simple(int j, const Weight& lam) const {
  Weight out = lam;
  const int c = lam[j];
  for (int k = 0; k < rank_; ++k) out[k] -= c * cartan_(j, k);
  return out;
}

RootVec RootSystem::reflect_simple(int j, const RootVec& b) const {
  int c = 0;
  for (int k = 0; k < rank_; ++k) c += b[k] * cartan_(k, j);
  RootVec out = b;
  out[j] -= c;
  return out;
}

std::string RootSystem::format_root(const RootVec& b) const {
  std::string out;
  for (int j = 0; j < b.size(); ++j) {
    int c = b[j];
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "a" + std::to_string(j + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qkchev
