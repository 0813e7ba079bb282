#ifndef GFG_PROPERTIES_HPP
#define GFG_PROPERTIES_HPP

#include <random>

#include "gfg/catalog.hpp"
#include "gfg/flag_geometry.hpp"
#include "gfg/vector_fields.hpp"

namespace gfg {

// Deterministic small-integer sampler for the randomized suites.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : eng_(seed) {}

  Rat small_rat();                              // integer in [-3, 3]
  Matrix small_vector(const Matrix& embed);     // embed * random coords
  Matrix plus_vector(const GradedFrame& fr);    // random element of n+_1
  Matrix minus_vector(const GradedFrame& fr);   // random element of n-_1
  GroupElement word(const GradedFrame& fr);     // 1-3 alternating letters
  int pick(int lo, int hi);

 private:
  std::mt19937_64 eng_;
};

struct PropertyReport {
  std::string name;
  int trials = 0;    // attempts
  int checked = 0;   // non-vacuous checks performed
  int failures = 0;
  std::vector<std::string> messages;
  bool ok() const { return failures == 0; }
};

PropertyReport suite_grading(const CatalogEntry& entry);
PropertyReport suite_transversality(const GradedFrame& fr, Rng& rng, int trials);
PropertyReport suite_torsor(const GradedFrame& fr, Rng& rng, int trials);
PropertyReport suite_chart(const GradedFrame& fr, Rng& rng, int trials);
PropertyReport suite_cocycle(const GradedFrame& fr, Rng& rng, int trials);
PropertyReport suite_transform(const GradedFrame& fr, Rng& rng, int trials);
PropertyReport suite_kernel(const GradedFrame& fr, Rng& rng, int trials);
PropertyReport suite_stabilizer(const GradedFrame& fr, Rng& rng, int trials);
PropertyReport suite_homography(const CatalogEntry& entry, const GradedFrame& fr,
                                Rng& rng, int trials);

// Every suite above, in order.
std::vector<PropertyReport> run_all_suites(const CatalogEntry& entry,
                                           const GradedFrame& fr,
                                           unsigned long long seed, int trials);

}  // namespace gfg

#endif
