#pragma once
#include <concepts>
#include <cstdint>

#include "er/field.hpp"

namespace er {

// The arithmetic surface shared by Field and Tower; graph builders and the
// coloring pipelines are templated over it.
template <class F>
concept FiniteField = requires(const F& f, fe a, fe b, std::uint64_t e) {
  { f.q() } -> std::convertible_to<std::uint64_t>;
  { f.p() } -> std::convertible_to<fe>;
  { f.add(a, b) } -> std::same_as<fe>;
  { f.sub(a, b) } -> std::same_as<fe>;
  { f.neg(a) } -> std::same_as<fe>;
  { f.mul(a, b) } -> std::same_as<fe>;
  { f.inv(a) } -> std::same_as<fe>;
  { f.pow(a, e) } -> std::same_as<fe>;
  { f.scalar(e) } -> std::same_as<fe>;
};

static_assert(FiniteField<Field>);

}  // namespace er
