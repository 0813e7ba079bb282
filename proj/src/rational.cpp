#include "gfg/rational.hpp"

#include <stdexcept>

namespace gfg {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

}  // namespace gfg
