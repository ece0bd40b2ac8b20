#include "qkchev/weyl.hpp"

#include "qkchev/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

namespace qkchev {

std::size_t default_group_bound() {
  if (const char* env = std::getenv("QKFLAG_MAX_GROUP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

WeylGroup::WeylGroup(const RootSystem& rs, std::size_t max_size) : rs_(rs) {
  const double order = weyl_group_order(rs.type());
  if (order > static_cast<double>(max_size)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "Weyl group of " << rs.type().name() << " has " << order << " elements, above the bound " << max_size
        << " (raise QKFLAG_MAX_GROUP to allow it)";
    throw PreconditionError(msg.str());
  }
  const int n = rank();
  const auto total = static_cast<std::size_t>(order);
  keys_.reserve(total * n);
  len_.reserve(total);
  lookup_.reserve(total);

  auto add = [&](const Weight& k, int len) {
    lookup_.emplace(k, static_cast<Elem>(len_.size()));
    for (int j = 0; j < n; ++j) keys_.push_back(k[j]);
    len_.push_back(len);
  };
  add(rs.rho(), 0);
  for (std::size_t w = 0; w < len_.size(); ++w) {
    Weight k = key(static_cast<Elem>(w));
    for (int j = 0; j < n; ++j) {
      if (k[j] <= 0) continue;  // s_j w is shorter
      Weight nk = rs.reflect_simple(j, k);
      if (!lookup_.count(nk)) add(nk, len_[w] + 1);
    }
  }
  if (len_.size() != total) fail_internal("Weyl group enumeration size mismatch for " + rs.type().name());

  left_.resize(total * n);
  for (std::size_t w = 0; w < total; ++w) {
    Weight k = key(static_cast<Elem>(w));
    for (int j = 0; j < n; ++j) left_[w * n + j] = find(rs.reflect_simple(j, k));
  }
  // w = s_{j1} ... s_{jk} read off left descents; w^{-1} is then built by
  // left-multiplying in the order j1, j2, ...
  inv_.resize(total);
  for (std::size_t w = 0; w < total; ++w) {
    Elem x = static_cast<Elem>(w), y = identity();
    while (x != identity()) {
      Weight k = key(x);
      int j = 0;
      while (k[j] >= 0) ++j;
      x = lmul(j, x);
      y = lmul(j, y);
    }
    inv_[w] = y;
  }
  right_.resize(total * n);
  for (std::size_t w = 0; w < total; ++w)
    for (int j = 0; j < n; ++j) right_[w * n + j] = inv_[lmul(j, inv_[w])];

  refl_.resize(rs.num_positive());
  for (int r = 0; r < rs.num_positive(); ++r) {
    Weight k = rs.rho() - rs.root_weight(r) * rs.pairing(rs.rho(), rs.coroot(r));
    refl_[r] = find(k);
    if (refl_[r] < 0) fail_internal("reflection not found");
  }
}

Weight WeylGroup::key(Elem w) const {
  const int n = rank();
  Weight k(n);
  for (int j = 0; j < n; ++j) k[j] = keys_[static_cast<std::size_t>(w) * n + j];
  return k;
}

Elem WeylGroup::find(const Weight& w_rho) const {
  auto it = lookup_.find(w_rho);
  return it == lookup_.end() ? -1 : it->second;
}

Elem WeylGroup::mul(Elem u, Elem v) const {
  for (int j : reduced_word(v)) u = rmul(u, j);
  return u;
}

Elem WeylGroup::from_word(const std::vector<int>& word) const {
  Elem w = identity();
  for (int j : word) {
    if (j < 0 || j >= rank()) throw PreconditionError("simple reflection index out of range");
    w = rmul(w, j);
  }
  return w;
}

std::vector<int> WeylGroup::reduced_word(Elem w, bool smallest_first) const {
  std::vector<int> rev;
  const int n = rank();
  while (w != identity()) {
    int j = -1;
    if (smallest_first) {
      for (j = 0; j < n && !right_descent(w, j); ++j) {}
    } else {
      for (j = n - 1; j >= 0 && !right_descent(w, j); --j) {}
    }
    rev.push_back(j);
    w = rmul(w, j);
  }
  return {rev.rbegin(), rev.rend()};
}

Elem WeylGroup::reflection(int r) const { return refl_[r]; }

void WeylGroup::build_reflection_table() const {
  const int p = rs_.num_positive();
  std::vector<std::vector<int>> words(p);
  for (int r = 0; r < p; ++r) words[r] = reduced_word(refl_[r]);
  right_refl_.resize(static_cast<std::size_t>(size()) * p);
  for (Elem w = 0; w < size(); ++w)
    for (int r = 0; r < p; ++r) {
      Elem x = w;
      for (int j : words[r]) x = rmul(x, j);
      right_refl_[static_cast<std::size_t>(w) * p + r] = x;
    }
}

Elem WeylGroup::rmul_reflection(Elem w, int r) const {
  std::call_once(refl_once_, [this] { build_reflection_table(); });
  return right_refl_[static_cast<std::size_t>(w) * rs_.num_positive() + r];
}

Weight WeylGroup::act(Elem w, const Weight& lam) const {
  Weight out = lam;
  auto word = reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = rs_.reflect_simple(*it, out);
  return out;
}

RootVec WeylGroup::act(Elem w, const RootVec& b) const {
  RootVec out = b;
  auto word = reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = rs_.reflect_simple(*it, out);
  return out;
}

bool WeylGroup::bruhat_leq(Elem u, Elem w) const {
  // Peel a right descent s off w; the lifting property says u <= w iff
  // min(u, us) <= ws.
  if (len_[u] > len_[w]) return false;
  while (w != identity()) {
    int j = 0;
    while (!right_descent(w, j)) ++j;
    if (right_descent(u, j)) u = rmul(u, j);
    w = rmul(w, j);
    if (len_[u] > len_[w]) return false;
  }
  return u == identity();
}

Elem WeylGroup::min_rep(Elem w, NodeSet s) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < rank(); ++j)
      if (contains(s, j) && right_descent(w, j)) {
        w = rmul(w, j);
        changed = true;
      }
  }
  return w;
}

Elem WeylGroup::longest_in(NodeSet s) const {
  Elem w = identity();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < rank(); ++j)
      if (contains(s, j) && !right_descent(w, j)) {
        w = rmul(w, j);
        changed = true;
      }
  }
  return w;
}

Elem WeylGroup::max_rep(Elem w, NodeSet s) const { return mul(min_rep(w, s), longest_in(s)); }

bool WeylGroup::is_min_rep(Elem w, NodeSet s) const {
  for (int j = 0; j < rank(); ++j)
    if (contains(s, j) && right_descent(w, j)) return false;
  return true;
}

bool WeylGroup::is_max_rep(Elem w, NodeSet s) const {
  for (int j = 0; j < rank(); ++j)
    if (contains(s, j) && !right_descent(w, j)) return false;
  return true;
}

const std::vector<Elem>& WeylGroup::subgroup(NodeSet s) const {
  std::lock_guard<std::mutex> lock(sub_mu_);
  auto& slot = subgroups_[s];
  if (!slot) {
    std::vector<Elem> out{identity()};
    std::vector<char> seen(static_cast<std::size_t>(size()), 0);
    seen[identity()] = 1;
    for (std::size_t q = 0; q < out.size(); ++q)
      for (int j = 0; j < rank(); ++j) {
        if (!contains(s, j)) continue;
        Elem x = rmul(out[q], j);
        if (!seen[x]) {
          seen[x] = 1;
          out.push_back(x);
        }
      }
    std::sort(out.begin(), out.end());
    slot = std::make_unique<std::vector<Elem>>(std::move(out));
  }
  return *slot;
}

std::vector<Elem> WeylGroup::min_reps(NodeSet s) const {
  std::vector<Elem> out;
  for (Elem w = 0; w < size(); ++w)
    if (is_min_rep(w, s)) out.push_back(w);
  return out;
}

std::vector<Elem> WeylGroup::max_reps(NodeSet s) const {
  std::vector<Elem> out;
  for (Elem w = 0; w < size(); ++w)
    if (is_max_rep(w, s)) out.push_back(w);
  return out;
}

std::string WeylGroup::format(Elem w) const {
  if (w == identity()) return "e";
  std::string out;
  for (int j : reduced_word(w)) {
    if (!out.empty()) out += ",";
    out += std::to_string(j + 1);
  }
  return out;
}

Elem WeylGroup::parse(const std::string& s) const {
  if (s == "e" || s.empty()) return identity();
  std::vector<int> word;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int j = 0;
    try {
      std::size_t used = 0;
      j = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad Weyl group word '" + s + "'");
    }
    if (j < 1 || j > rank()) throw PreconditionError("reflection index " + tok + " out of range in '" + s + "'");
    word.push_back(j - 1);
  }
  return from_word(word);
}

}  // namespace qkchev
