#pragma once

#include <string>
#include <vector>

#include "movtk/io.hpp"
#include "movtk/tournament.hpp"

namespace fixtures {

// a..f; every edge not listed below points from the later letter to the
// earlier one: c->f and b->e.
inline const char* kFig1 =
    "6\n"
    "0 0 0 0 0 0\n"
    "1 0 0 0 1 0\n"
    "1 1 0 0 0 1\n"
    "1 1 1 0 0 0\n"
    "1 0 1 1 0 0\n"
    "1 1 0 1 1 0\n"
    "labels: a b c d e f\n";

// x, top, bottom, y with a=(x,top) b=(x,bottom) c=(top,y) d=(bottom,y)
// e=(bottom,top) and y->x.
inline const char* kFig9 =
    "4\n"
    "0 1 1 0\n"
    "0 0 0 1\n"
    "0 1 0 1\n"
    "1 0 0 0\n"
    "labels: x top bottom y\n";

enum Fig1 { a, b, c, d, e, f };
enum Fig9 { x, top, bottom, y };

inline movtk::Tournament fig1() { return movtk::io::parse_tournament(kFig1); }
inline movtk::Tournament fig9() { return movtk::io::parse_tournament(kFig9); }

inline movtk::Tournament three_cycle() {
  return movtk::Tournament::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, {"a", "b", "c"});
}

}  // namespace fixtures
