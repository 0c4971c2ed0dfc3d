// k-nested implications: the formula shape
//   b_k -> X_k (b_{k-1} -> X_{k-1} ( ... (b_0 -> core) ... ))
// where each X_i is X, Z, or K[a].  Infinitary rule premises and
// conclusions are stated inside such contexts.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptel/formula.hpp"

namespace ptel {

struct NestedOp {
  enum class Kind { Next, WeakPrev, Know } kind = Kind::Next;
  std::string agent;  // Know only

  static NestedOp next() { return {Kind::Next, ""}; }
  static NestedOp wprev() { return {Kind::WeakPrev, ""}; }
  static NestedOp know(const std::string& a) { return {Kind::Know, a}; }

  bool operator==(const NestedOp&) const = default;
  // "X", "Z" or "K[a]"; parse accepts the same spellings.
  std::string str() const;
  static std::optional<NestedOp> parse(const std::string& text);
};

struct NestedContext {
  std::vector<Formula> B;  // b_0 ... b_k  (size k+1)
  std::vector<NestedOp> X;  // X_1 ... X_k  (size k)

  std::size_t k() const { return X.size(); }
  bool well_formed() const { return !B.empty() && B.size() == X.size() + 1; }
};

// Throws std::invalid_argument if the context is malformed.
Formula build_k_nested(const NestedContext& ctx, const Formula& core);

// Exact inverse: yields core iff build_k_nested(ctx, core) equals f
// structurally; empty otherwise.
std::optional<Formula> match_k_nested(const Formula& f, const NestedContext& ctx);

}  // namespace ptel
