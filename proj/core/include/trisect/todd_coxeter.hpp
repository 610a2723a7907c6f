#ifndef TRISECT_TODD_COXETER_HPP
#define TRISECT_TODD_COXETER_HPP

#include <span>

#include "trisect/budget.hpp"
#include "trisect/presentation.hpp"

namespace trisect {

struct ToddCoxeterResult {
  bool completed = false;
  long long index = 0;           // subgroup index, valid when completed
  long long cosets_defined = 0;  // total cosets ever defined

  bool overflowed() const { return !completed; }
};

/// HLT-style coset enumeration over the subgroup generated by the given
/// words. Deterministic: fixed relator order, lowest-numbered live coset
/// processed first, rows completed in column order. When the enumeration
/// finishes within the coset budget the returned index is exact; otherwise
/// the result reports an overflow.
ToddCoxeterResult todd_coxeter_index(const Presentation& p, std::span<const Word> subgroup_generators,
                                     const Budget& budget);

}  // namespace trisect

#endif  // TRISECT_TODD_COXETER_HPP
