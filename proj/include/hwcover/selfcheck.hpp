#pragma once

// Consistency checks of a group law against the affine representation.

#include <random>
#include <string>
#include <vector>

#include "hwcover/element.hpp"

namespace hwcover {

struct LawCheck {
  Int relator_failures = 0;
  Int homomorphism_failures = 0;
  Int associativity_failures = 0;
  Int inverse_failures = 0;
  Int samples = 0;

  bool ok() const {
    return relator_failures == 0 && homomorphism_failures == 0 && associativity_failures == 0 && inverse_failures == 0;
  }
};

inline Element random_element(std::mt19937_64& rng, Int bound) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<Int> half(-bound, bound);
  return {static_cast<Letter>(letter(rng)), half(rng), half(rng), half(rng)};
}

/// Evaluates every relator under `law` and compares `samples` random
/// products with composition of their affine images.
inline LawCheck check_group_law(const GroupLaw& law, Int samples, std::uint64_t seed = 1, Int bound = 10) {
  LawCheck r;
  r.samples = samples;
  for (const GeneratorWord& w : relators())
    if (eval_word(w, law) != identity()) ++r.relator_failures;
  std::mt19937_64 rng(seed);
  for (Int i = 0; i < samples; ++i) {
    const Element p = random_element(rng, bound);
    const Element q = random_element(rng, bound);
    const Element s = random_element(rng, bound);
    const Element pq = law.multiply(p, q);
    if (to_affine(pq) != compose(to_affine(p), to_affine(q))) ++r.homomorphism_failures;
    if (law.multiply(pq, s) != law.multiply(p, law.multiply(q, s))) ++r.associativity_failures;
    const Element pi = law.inverse(p);
    if (law.multiply(p, pi) != identity() || law.multiply(pi, p) != identity()) ++r.inverse_failures;
  }
  return r;
}

}  // namespace hwcover
