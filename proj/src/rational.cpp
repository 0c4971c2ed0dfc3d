#include "ptel/rational.hpp"

#include <stdexcept>

namespace ptel {

std::string rat_string(const Rat& r) {
  if (r.denominator() == 1) return r.numerator().str();
  return r.numerator().str() + "/" + r.denominator().str();
}

std::optional<Rat> parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      BigInt n(text);
      return Rat(n);
    }
    BigInt n(text.substr(0, slash));
    BigInt d(text.substr(slash + 1));
    if (d == 0) return std::nullopt;
    return Rat(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::uint64_t ceil_to_u64(const Rat& r) {
  if (r <= 0) return 0;
  BigInt q = (r.numerator() + r.denominator() - 1) / r.denominator();
  return q.convert_to<std::uint64_t>();
}

}  // namespace ptel
