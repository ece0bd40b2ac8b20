#pragma once

#include "qkchev/qls.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>

namespace qkchev {

// Owns the per-type objects every computation needs: root system, Weyl
// group, the full quantum Bruhat graph with one set of shortest-path tables,
// and one ShapeContext per node (built on first use).
class Context {
 public:
  explicit Context(LieType t, std::size_t max_group = default_group_bound());
  explicit Context(const std::string& type_name) : Context(LieType::parse(type_name)) {}
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const RootSystem& roots() const { return rs_; }
  const WeylGroup& group() const { return g_; }
  const QuantumBruhatGraph& full() const { return full_; }
  // qwt and distances do not depend on the reflection order, so one table
  // set serves every caller that only needs those.
  const ShortestPaths& paths() const { return paths_; }
  int rank() const { return rs_.rank(); }
  NodeSet all() const { return all_nodes(rs_.rank()); }

  const ShapeContext& shape(int i, bool alt_order = false) const;

 private:
  RootSystem rs_;
  WeylGroup g_;
  QuantumBruhatGraph full_;
  ReflectionOrder order_;
  ShortestPaths paths_;
  mutable std::mutex mu_;
  mutable std::array<std::unique_ptr<ShapeContext>, 2 * kMaxRank> shapes_;
};

}  // namespace qkchev
