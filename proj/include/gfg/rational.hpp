#ifndef GFG_RATIONAL_HPP
#define GFG_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace gfg {

// Exact rational scalar. mpq_class keeps values reduced with positive
// denominator, which is exactly the invariant we need.
using Rat = mpq_class;

// Parses "p/q", "-3/7" or "5". Throws std::invalid_argument on bad input.
Rat rat_parse(const std::string& s);

// Canonical textual form: "p" when q = 1, otherwise "p/q".
std::string rat_str(const Rat& r);

}  // namespace gfg

#endif
