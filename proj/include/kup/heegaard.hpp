#ifndef KUP_HEEGAARD_HPP
#define KUP_HEEGAARD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kup {

/// One crossing of an upper and a lower circle; the sign is input data (the
/// surface embedding is not represented).
struct PointOcc {
  std::string label;
  bool positive = true;
  bool operator==(const PointOcc&) const = default;
};

/// A circle with orientation and base point encoded by the point order: the
/// first entry is the first intersection point after the base point.
struct Circle {
  std::string name;
  std::vector<PointOcc> points;
  bool operator==(const Circle&) const = default;
};

struct HeegaardDiagram {
  unsigned genus = 1;
  std::vector<Circle> upper;  // in circle order
  std::vector<Circle> lower;
  bool operator==(const HeegaardDiagram&) const = default;
};

/// sigma maps the position of a point in the lower order to its position in
/// the upper order (1-based); kappa = 0 for positive points, 1 for negative.
struct DiagramPermutation {
  std::vector<size_t> sigma;  // sigma[i-1] = position in upper order
  std::vector<int> upper_kappas;
  std::vector<int> lower_kappas;
};

struct diagram_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CircleSide { upper, lower };

/// Checks all diagram invariants: circle counts match the genus, every label
/// occurs exactly once per side, signs agree between the two occurrences.
void validate_diagram(const HeegaardDiagram& d);

/// Line-oriented format with '#' comments:
///   genus 2
///   upper u1: 1+ 2+ 3- ...
///   lower l1: ...
/// Errors carry 1-based line numbers.
HeegaardDiagram parse_diagram(const std::string& text);
std::string serialize_diagram(const HeegaardDiagram& d);

DiagramPermutation extract_permutation(const HeegaardDiagram& d);

/// lens:<p> (one circle pair sharing p positive points, aligned orders),
/// s1xs2 (genus 1, no points), poincare (the classical genus-2 diagram).
HeegaardDiagram builtin_diagram(const std::string& spec);

// Moves. All return a new diagram and validate it. Indices are 1-based.
HeegaardDiagram flip_orientation(const HeegaardDiagram& d, CircleSide side,
                                 size_t i);
HeegaardDiagram shift_basepoint(const HeegaardDiagram& d, CircleSide side,
                                size_t i, size_t steps);
/// Transposes circles i and i+1 in the side's order.
HeegaardDiagram swap_circles(const HeegaardDiagram& d, CircleSide side,
                             size_t i);
HeegaardDiagram stabilize(const HeegaardDiagram& d);
/// Inserts a fresh cancelling (+,-) pair shared by upper circle ui and lower
/// circle lj, at 0-based positions upos / lpos of the point sequences.
HeegaardDiagram two_point_insert(const HeegaardDiagram& d, size_t ui,
                                 size_t lj, size_t upos, size_t lpos);
/// Removes the pair named by two labels, which must be adjacent on both their
/// circles and of opposite signs.
HeegaardDiagram two_point_cancel(const HeegaardDiagram& d,
                                 const std::string& a, const std::string& b);
/// Slides circle i past circle j (i != j, same side): appends fresh copies of
/// j's points to i; each copy sits in the other-side circle immediately
/// before its original when that point is positive, immediately after it when
/// negative.
HeegaardDiagram handle_slide(const HeegaardDiagram& d, CircleSide side,
                             size_t i, size_t j);

/// Deterministic pseudorandom valid diagram (not necessarily realizable on a
/// surface).
HeegaardDiagram random_diagram(uint64_t seed, unsigned genus,
                               unsigned max_points);

}  // namespace kup

#endif
