#pragma once

#include <vector>

namespace uowc {

struct Disc {
    double x = 0.0;
    double y = 0.0;
    double r = 0.0;
};

// Exact area of the union of discs, by integrating the boundary arcs
// (Green's theorem). Discs with nonpositive radius are ignored.
double disc_union_area(const std::vector<Disc>& discs);

// Fraction of `beam` covered by the union of `occluders`, in [0,1].
// Uses area(U ∩ B) = area(U) + area(B) - area(U ∪ B).
double occluded_fraction(const Disc& beam, const std::vector<Disc>& occluders);

}  // namespace uowc
