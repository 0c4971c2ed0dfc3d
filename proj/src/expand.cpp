#include <stdexcept>

#include "ptel/syntax.hpp"

namespace ptel {

namespace {

Formula taut_over(const Formula& a) {  // a -> a, expanded
  return Formula::nnot(Formula::aand(a, Formula::nnot(a)));
}

}  // namespace

Formula expand(const Formula& f, const AgentSignature& sig) {
  switch (f.op()) {
    case Op::Atom:
      return f;
    case Op::True:
      return taut_over(Formula::active(sig.agents().front()));
    case Op::False: {
      Formula a = Formula::active(sig.agents().front());
      return Formula::aand(a, Formula::nnot(a));
    }
    case Op::Not:
      return Formula::nnot(expand(f.child(), sig));
    case Op::And:
      return Formula::aand(expand(f.child(0), sig), expand(f.child(1), sig));
    case Op::Next:
      return Formula::next(expand(f.child(), sig));
    case Op::Until:
      return Formula::until(expand(f.child(0), sig), expand(f.child(1), sig));
    case Op::WeakPrev:
      return Formula::wprev(expand(f.child(), sig));
    case Op::Since:
      return Formula::since(expand(f.child(0), sig), expand(f.child(1), sig));
    case Op::Know:
      return Formula::know(f.agent(), expand(f.child(), sig));
    case Op::Common:
      return Formula::common(expand(f.child(), sig));
    case Op::Implies: {
      Formula l = expand(f.child(0), sig), r = expand(f.child(1), sig);
      return Formula::nnot(Formula::aand(l, Formula::nnot(r)));
    }
    case Op::Or: {
      Formula l = expand(f.child(0), sig), r = expand(f.child(1), sig);
      return Formula::nnot(Formula::aand(Formula::nnot(l), Formula::nnot(r)));
    }
    case Op::Iff: {
      Formula l = expand(f.child(0), sig), r = expand(f.child(1), sig);
      Formula lr = Formula::nnot(Formula::aand(l, Formula::nnot(r)));
      Formula rl = Formula::nnot(Formula::aand(r, Formula::nnot(l)));
      return Formula::aand(lr, rl);
    }
    case Op::Sometime: {
      Formula a = expand(f.child(), sig);
      return Formula::until(taut_over(a), a);
    }
    case Op::Always: {
      Formula na = Formula::nnot(expand(f.child(), sig));
      return Formula::nnot(Formula::until(taut_over(na), na));
    }
    case Op::Once: {
      Formula a = expand(f.child(), sig);
      return Formula::since(taut_over(a), a);
    }
    case Op::Sofar: {
      Formula na = Formula::nnot(expand(f.child(), sig));
      return Formula::nnot(Formula::since(taut_over(na), na));
    }
    case Op::Everyone: {
      Formula a = expand(f.child(), sig);
      std::vector<Formula> ks;
      ks.reserve(sig.size());
      for (const std::string& ag : sig.agents()) ks.push_back(Formula::know(ag, a));
      return Formula::conj(ks);
    }
    case Op::Prob: {
      Formula a = expand(f.child(), sig);
      const Rat& s = f.bound();
      switch (f.cmp()) {
        case Cmp::Ge:
          return Formula::prob(Cmp::Ge, s, a);
        case Cmp::Lt:
          return Formula::nnot(Formula::prob(Cmp::Ge, s, a));
        case Cmp::Le:
          return Formula::prob(Cmp::Ge, Rat(1) - s, Formula::nnot(a));
        case Cmp::Gt:
          return Formula::nnot(Formula::prob(Cmp::Ge, Rat(1) - s, Formula::nnot(a)));
        case Cmp::Eq:
          return Formula::aand(Formula::prob(Cmp::Ge, s, a),
                               Formula::prob(Cmp::Ge, Rat(1) - s, Formula::nnot(a)));
      }
      break;
    }
    case Op::ProbA: {
      Formula a = expand(f.child(), sig);
      const Rat& s = f.bound();
      const std::string& ag = f.agent();
      switch (f.cmp()) {
        case Cmp::Ge:
          return Formula::proba(ag, Cmp::Ge, s, a);
        case Cmp::Lt:
          return Formula::nnot(Formula::proba(ag, Cmp::Ge, s, a));
        case Cmp::Le:
          return Formula::proba(ag, Cmp::Ge, Rat(1) - s, Formula::nnot(a));
        case Cmp::Gt:
          return Formula::nnot(Formula::proba(ag, Cmp::Ge, Rat(1) - s, Formula::nnot(a)));
        case Cmp::Eq:
          return Formula::aand(Formula::proba(ag, Cmp::Ge, s, a),
                               Formula::proba(ag, Cmp::Ge, Rat(1) - s, Formula::nnot(a)));
      }
      break;
    }
  }
  throw std::logic_error("expand: unhandled operator");
}

}  // namespace ptel
