#ifndef FAREYPRIM_FAREY_HPP_
#define FAREYPRIM_FAREY_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fareyprim/continued_fraction.hpp"
#include "fareyprim/rational.hpp"

namespace fareyprim {

class FareyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Parity { Even, Odd };

enum class SignFilter { Positive, Negative, Both };

/// The two distinguished neighbours of x ordered by value. On the positive
/// side 1/0 counts as +infinity, on the negative side as -infinity.
struct Parents {
  Rational smaller;
  Rational larger;
};

/// Signed left-right sequence +-(n0; n1, ..., nt) of the geodesic from the
/// imaginary axis to x.
struct LeftRightSequence {
  int orientation = 1;
  std::vector<std::int64_t> steps;

  friend bool operator==(const LeftRightSequence&, const LeftRightSequence&) = default;
};

/// Sum of |entries| of the continued fraction; 0 for 0/1 and 1/0.
std::int64_t farey_level(Rational x);

/// |p s - q r| == 1
bool is_neighbor(Rational x, Rational y);

/// Farey sum (p + r)/(q + s). When one argument is 1/0 it is read as -1/0
/// if the other is negative, so the result lies between the two on the same
/// side of the axis. Throws FareyError if x and y are not neighbours.
Rational mediant(Rational x, Rational y);

/// CF truncation [a0; ..., a_{k-1}] and decrement [a0; ..., a_k - 1], ordered.
/// Throws FareyError for 0/1 and 1/0.
Parents parents(Rational x);

/// Even iff |p| q is even. 1/0 is even.
Parity parity(Rational x);

/// Every rational with 1 <= level <= max_level and the requested sign, once
/// each, in nondecreasing level order (ascending |x| within a level; with
/// SignFilter::Both a level's positives precede its negatives).
std::vector<Rational> rationals_by_level(std::int64_t max_level, SignFilter sign);

/// Throws FareyError for 0/1 and 1/0.
LeftRightSequence left_right_sequence(Rational x);

std::string to_string(Parity p);
std::string to_string(const LeftRightSequence& s);

}  // namespace fareyprim

#endif  // FAREYPRIM_FAREY_HPP_
