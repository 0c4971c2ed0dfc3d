#include <sstream>

#include "ptel/syntax.hpp"

namespace ptel {

namespace {

// Binding strength; larger binds tighter.  Binary operators associate to
// the right, so the right operand is printed at the operator's own level
// and the left operand one level tighter.
int level(Op op) {
  switch (op) {
    case Op::Implies: return 1;
    case Op::Iff: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Until:
    case Op::Since: return 5;
    default: return 6;  // unary and leaves
  }
}

bool is_binary(Op op) {
  switch (op) {
    case Op::Implies:
    case Op::Iff:
    case Op::Or:
    case Op::And:
    case Op::Until:
    case Op::Since: return true;
    default: return false;
  }
}

const char* binary_token(Op op) {
  switch (op) {
    case Op::Implies: return "->";
    case Op::Iff: return "<->";
    case Op::Or: return "|";
    case Op::And: return "&";
    case Op::Until: return "U";
    case Op::Since: return "S";
    default: return "?";
  }
}

void emit(std::ostream& os, const Formula& f, int min_level) {
  Op op = f.op();
  int lv = level(op);
  bool parens = lv < min_level;
  if (parens) os << '(';
  if (is_binary(op)) {
    emit(os, f.child(0), lv + 1);
    os << ' ' << binary_token(op) << ' ';
    emit(os, f.child(1), lv);
  } else {
    switch (op) {
      case Op::Atom: os << f.name(); break;
      case Op::True: os << "true"; break;
      case Op::False: os << "false"; break;
      case Op::Not:
        os << '~';
        emit(os, f.child(), 6);
        break;
      case Op::Next: os << "X "; emit(os, f.child(), 6); break;
      case Op::WeakPrev: os << "Z "; emit(os, f.child(), 6); break;
      case Op::Sometime: os << "F "; emit(os, f.child(), 6); break;
      case Op::Always: os << "G "; emit(os, f.child(), 6); break;
      case Op::Once: os << "O "; emit(os, f.child(), 6); break;
      case Op::Sofar: os << "H "; emit(os, f.child(), 6); break;
      case Op::Common: os << "C "; emit(os, f.child(), 6); break;
      case Op::Everyone: os << "E "; emit(os, f.child(), 6); break;
      case Op::Know:
        os << "K[" << f.agent() << "] ";
        emit(os, f.child(), 6);
        break;
      case Op::Prob:
        os << "Pr" << cmp_token(f.cmp()) << rat_string(f.bound()) << ' ';
        emit(os, f.child(), 6);
        break;
      case Op::ProbA:
        os << "Pr[" << f.agent() << ']' << cmp_token(f.cmp()) << rat_string(f.bound()) << ' ';
        emit(os, f.child(), 6);
        break;
      default: os << "?"; break;
    }
  }
  if (parens) os << ')';
}

}  // namespace

std::string print(const Formula& f) {
  std::ostringstream os;
  emit(os, f, 0);
  return os.str();
}

}  // namespace ptel
