#include "qkchev/context.hpp"

#include "qkchev/error.hpp"

namespace qkchev {

Context::Context(LieType t, std::size_t max_group)
    : rs_(t), g_(rs_, max_group), full_(g_, 0), order_(g_, 0), paths_(full_, order_) {}

const ShapeContext& Context::shape(int i, bool alt_order) const {
  if (i < 0 || i >= rank()) throw PreconditionError("node " + std::to_string(i + 1) + " out of range");
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = shapes_[2 * i + (alt_order ? 1 : 0)];
  if (!slot) slot = std::make_unique<ShapeContext>(full_, i, 0, alt_order);
  return *slot;
}

}  // namespace qkchev
