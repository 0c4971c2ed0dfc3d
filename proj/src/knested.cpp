#include "ptel/knested.hpp"

#include <stdexcept>

namespace ptel {

std::string NestedOp::str() const {
  switch (kind) {
    case Kind::Next: return "X";
    case Kind::WeakPrev: return "Z";
    case Kind::Know: return "K[" + agent + "]";
  }
  return "?";
}

std::optional<NestedOp> NestedOp::parse(const std::string& text) {
  if (text == "X") return next();
  if (text == "Z") return wprev();
  if (text.size() > 3 && text.compare(0, 2, "K[") == 0 && text.back() == ']')
    return know(text.substr(2, text.size() - 3));
  return std::nullopt;
}

namespace {

Formula apply_op(const NestedOp& op, const Formula& f) {
  switch (op.kind) {
    case NestedOp::Kind::Next: return Formula::next(f);
    case NestedOp::Kind::WeakPrev: return Formula::wprev(f);
    case NestedOp::Kind::Know: return Formula::know(op.agent, f);
  }
  throw std::logic_error("bad nested op");
}

}  // namespace

Formula build_k_nested(const NestedContext& ctx, const Formula& core) {
  if (!ctx.well_formed()) throw std::invalid_argument("malformed nested context");
  Formula acc = Formula::implies(ctx.B[0], core);
  for (std::size_t i = 1; i < ctx.B.size(); ++i)
    acc = Formula::implies(ctx.B[i], apply_op(ctx.X[i - 1], acc));
  return acc;
}

std::optional<Formula> match_k_nested(const Formula& f, const NestedContext& ctx) {
  if (!ctx.well_formed()) return std::nullopt;
  Formula cur = f;
  for (std::size_t i = ctx.B.size(); i-- > 1;) {
    if (cur.op() != Op::Implies || cur.child(0) != ctx.B[i]) return std::nullopt;
    const Formula& body = cur.child(1);
    const NestedOp& op = ctx.X[i - 1];
    switch (op.kind) {
      case NestedOp::Kind::Next:
        if (body.op() != Op::Next) return std::nullopt;
        break;
      case NestedOp::Kind::WeakPrev:
        if (body.op() != Op::WeakPrev) return std::nullopt;
        break;
      case NestedOp::Kind::Know:
        if (body.op() != Op::Know || body.agent() != op.agent) return std::nullopt;
        break;
    }
    cur = body.child();
  }
  if (cur.op() != Op::Implies || cur.child(0) != ctx.B[0]) return std::nullopt;
  return cur.child(1);
}

}  // namespace ptel
