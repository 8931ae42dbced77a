#ifndef FAREYPRIM_FAREY_SVG_HPP_
#define FAREYPRIM_FAREY_SVG_HPP_

#include <cstdint>
#include <string>

#include "fareyprim/rational.hpp"

namespace fareyprim {

/// Upper half plane picture of the Farey tessellation to `depth` (both signs),
/// with the geodesic from i to `target` and its left-right sequence.
///
/// Structure, stable for tests:
///   - one `<path class="farey-arc" data-left=".." data-right="..">` per
///     neighbour pair among 0/1, 1/0 and every rational of level <= depth;
///   - one `<line class="tick" data-value="..">` per finite vertex;
///   - exactly one `<path id="gamma">`;
///   - `<circle id="basepoint">` at i and `<text id="left-right">`.
///
/// Throws InvalidRational for 1/0 and std::invalid_argument for depth < 1.
std::string render_farey_svg(Rational target, std::int64_t depth);

}  // namespace fareyprim

#endif  // FAREYPRIM_FAREY_SVG_HPP_
