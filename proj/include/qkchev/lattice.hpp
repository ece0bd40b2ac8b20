#pragma once

#include <Eigen/Core>
#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace qkchev {

inline constexpr int kMaxRank = 8;

template <class Scalar>
using DynVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, 0, kMaxRank, 1>;
template <class Scalar>
using DynMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxRank, kMaxRank>;

using IVec = DynVec<int>;
using IMat = DynMat<int>;
using Rational = boost::rational<long long>;

// A vector in one of the three lattices we care about. The tag keeps
// weights, root coordinates and coroot coordinates from mixing silently.
template <class Tag, class Scalar = int>
class Lattice {
 public:
  using Coeffs = DynVec<Scalar>;

  Lattice() = default;
  explicit Lattice(int rank) : c_(Coeffs::Zero(rank)) {}
  explicit Lattice(const Coeffs& c) : c_(c) {}
  Lattice(std::initializer_list<Scalar> xs) : c_(static_cast<Eigen::Index>(xs.size())) {
    Eigen::Index k = 0;
    for (Scalar x : xs) c_(k++) = x;
  }

  static Lattice zero(int rank) { return Lattice(rank); }
  static Lattice unit(int rank, int j) {
    Lattice v(rank);
    v.c_(j) = 1;
    return v;
  }

  int size() const { return static_cast<int>(c_.size()); }
  Scalar operator[](int j) const { return c_(j); }
  Scalar& operator[](int j) { return c_(j); }
  const Coeffs& coeffs() const { return c_; }
  Coeffs& coeffs() { return c_; }

  Lattice operator+(const Lattice& o) const { return Lattice(Coeffs(c_ + o.c_)); }
  Lattice operator-(const Lattice& o) const { return Lattice(Coeffs(c_ - o.c_)); }
  Lattice operator-() const { return Lattice(Coeffs(-c_)); }
  Lattice operator*(Scalar s) const { return Lattice(Coeffs(c_ * s)); }
  Lattice& operator+=(const Lattice& o) {
    c_ += o.c_;
    return *this;
  }
  Lattice& operator-=(const Lattice& o) {
    c_ -= o.c_;
    return *this;
  }

  bool operator==(const Lattice& o) const { return c_.size() == o.c_.size() && c_ == o.c_; }
  bool operator!=(const Lattice& o) const { return !(*this == o); }
  // Lexicographic; only used to give containers a deterministic order.
  bool operator<(const Lattice& o) const {
    for (int j = 0; j < size() && j < o.size(); ++j)
      if (c_(j) != o.c_(j)) return c_(j) < o.c_(j);
    return size() < o.size();
  }

  bool is_zero() const { return (c_.array() == 0).all(); }
  bool nonnegative() const { return (c_.array() >= 0).all(); }
  Scalar sum() const { return c_.sum(); }

  // Componentwise partial order: a.leq(b) iff b - a has nonnegative entries.
  bool leq(const Lattice& o) const { return (c_.array() <= o.c_.array()).all(); }

  std::vector<Scalar> to_vector() const { return std::vector<Scalar>(c_.data(), c_.data() + c_.size()); }
  static Lattice from_vector(const std::vector<Scalar>& xs) {
    Lattice v(static_cast<int>(xs.size()));
    for (std::size_t k = 0; k < xs.size(); ++k) v.c_(static_cast<Eigen::Index>(k)) = xs[k];
    return v;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(c_.size());
    for (Eigen::Index k = 0; k < c_.size(); ++k)
      h = h * 1000003u ^ std::hash<Scalar>{}(c_(k));
    return h;
  }

 private:
  Coeffs c_;
};

struct WeightTag {};
struct RootTag {};
struct CorootTag {};

// Weight: coordinates in the fundamental-weight basis, entry j = <lambda, alpha_j^vee>.
using Weight = Lattice<WeightTag>;
// RootVec: coordinates in the simple-root basis.
using RootVec = Lattice<RootTag>;
// CorootVec: coordinates in the simple-coroot basis.
using CorootVec = Lattice<CorootTag>;

template <class L>
struct LatticeHash {
  std::size_t operator()(const L& v) const { return v.hash(); }
};

// Subsets of the Dynkin node set, 0-based bits.
using NodeSet = std::uint32_t;

inline bool contains(NodeSet s, int j) { return (s >> j) & 1u; }
inline NodeSet all_nodes(int rank) { return rank >= 32 ? ~0u : ((1u << rank) - 1u); }
inline NodeSet complement(NodeSet s, int rank) { return all_nodes(rank) & ~s; }
inline NodeSet singleton(int j) { return 1u << j; }
inline int popcount(NodeSet s) { return __builtin_popcount(s); }

// [xi]_K: zero the coordinates outside K.
inline CorootVec project(const CorootVec& xi, NodeSet k) {
  CorootVec r = xi;
  for (int j = 0; j < r.size(); ++j)
    if (!contains(k, j)) r[j] = 0;
  return r;
}

std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& s);

// 1-based comma list, e.g. {0,2} -> "1,3".
std::string format_nodes(NodeSet s, int rank);
NodeSet parse_nodes(const std::string& s, int rank);

template <class Tag>
std::string format_coords(const Lattice<Tag>& v) {
  std::string out = "[";
  for (int j = 0; j < v.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(v[j]);
  }
  return out + "]";
}

}  // namespace qkchev
