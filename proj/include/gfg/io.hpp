#ifndef GFG_IO_HPP
#define GFG_IO_HPP

#include "gfg/catalog.hpp"
#include "gfg/elementary_group.hpp"

namespace gfg {

// JSON serialization of an algebra-with-grading. The emission is
// deterministic (sorted keys, canonical rationals, canonical layer bases),
// so save(load(s)) == save(catalog entry) byte for byte.
std::string algebra_to_json(const CatalogEntry& entry);

// Parses and fully validates (antisymmetry, Jacobi, grading axioms); throws
// std::invalid_argument with a descriptive message on any failure.
CatalogEntry algebra_from_json(const std::string& text);

// Same, but collects grading/Jacobi violations into a report instead of
// throwing (structural JSON errors still throw).
CatalogEntry algebra_from_json_report(const std::string& text, Report& out);

// "[1,0,-1/2]" -> coordinate column of the given dimension.
Matrix parse_vector(const std::string& text, int dim);

// Word specification "+[...];-[...];..." -> signed generator list; each
// vector is a full-algebra coordinate column.
std::vector<std::pair<int, Matrix>> parse_word(const std::string& text, int dim);

// Builds the group element of a parsed word; checks each letter lies in the
// required nilpotent part.
GroupElement word_to_element(const GradedFrame& fr,
                             const std::vector<std::pair<int, Matrix>>& word);

}  // namespace gfg

#endif
