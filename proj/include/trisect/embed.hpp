#pragma once

#include <map>

#include "trisect/complex.hpp"

namespace trisect {

struct Point {
  double x = 0, y = 0;
};

// Binding vertices of a disk surface spaced evenly on the unit circle,
// counterclockwise in the direction the surface's faces run along them.
std::map<int, Point> binding_layout(const Diagram& D, int tag);

// Tutte embedding of a disk surface: binding vertices fixed (from
// binding_layout unless given), every other vertex the average of its
// neighbours. Faces with more than three sides get a virtual centre so the
// result is a straight-line drawing with counterclockwise faces. Throws
// NotADisk when the surface is not a disk.
std::map<int, Point> disk_embedding(const Diagram& D, int tag, const std::map<int, Point>* boundary = nullptr);

}  // namespace trisect
