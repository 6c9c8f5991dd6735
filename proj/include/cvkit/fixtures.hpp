#pragma once

#include <string>

#include "cvkit/errors.hpp"
#include "cvkit/triangulation.hpp"

namespace cvkit::fixtures {

// Once-punctured torus: every side of triangle 0 glued to the same side of triangle 1.
inline Triangulation ex11() { return build(2, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}}, "ex11"); }

// Thrice-punctured sphere from two triangles glued along their boundaries.
inline Triangulation sphere3() { return build(2, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 1}}}, "sphere3"); }

// Four-punctured sphere: inner triangle (p1,p2,p3) and outer triangles
// (p2,p1,p4), (p3,p2,p4), (p1,p3,p4); dual graph K4.
inline Triangulation n4ex() {
  return build(4,
               {{{0, 2}, {1, 2}},
                {{0, 0}, {2, 2}},
                {{0, 1}, {3, 2}},
                {{1, 1}, {2, 0}},
                {{2, 1}, {3, 0}},
                {{3, 1}, {1, 0}}},
               "n4ex");
}

// n4ex with the diagonal p2p3 replaced by a second arc p1p4:
// triangles (p1,p2,p4), (p2,p1,p4), (p3,p1,p4), (p1,p3,p4).
inline Triangulation n4ex2() {
  return build(4,
               {{{0, 2}, {1, 2}},
                {{0, 0}, {1, 1}},
                {{0, 1}, {2, 0}},
                {{2, 1}, {3, 0}},
                {{2, 2}, {3, 2}},
                {{1, 0}, {3, 1}}},
               "n4ex2");
}

// The two-petal flower: two folded triangles with their single sides glued.
inline Triangulation flower3() {
  return build(2, {{{0, 1}, {0, 2}}, {{1, 1}, {1, 2}}, {{0, 0}, {1, 0}}}, "flower:3");
}

inline Triangulation by_name(const std::string& name) {
  if (name == "ex11") return ex11();
  if (name == "n4ex") return n4ex();
  if (name == "n4ex2") return n4ex2();
  if (name == "sphere3") return sphere3();
  if (name.rfind("flower:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(7));
    } catch (...) {
      fail(ErrorCode::UnknownFixture, name);
    }
    if (n == 3) return flower3();
    return flower(n);
  }
  fail(ErrorCode::UnknownFixture, name);
}

}  // namespace cvkit::fixtures
