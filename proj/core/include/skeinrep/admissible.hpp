#ifndef SKEINREP_ADMISSIBLE_HPP
#define SKEINREP_ADMISSIBLE_HPP

namespace skeinrep {

// Level-p admissibility of a trivalent vertex colored (a, b, c):
// even total, triangle inequality, a+b+c <= p-4, and each color in
// [0, p/2-2].
inline bool admissible(int a, int b, int c, int p) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  if (c < a - b || c < b - a || c > a + b) return false;
  if (a + b + c > p - 4) return false;
  const int cmax = p / 2 - 2;
  return a <= cmax && b <= cmax && c <= cmax;
}

// Parity and triangle inequality only: whether the raw trivalent diagram
// exists at all, ignoring the level truncation.
inline bool triad_realizable(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return !(c < a - b || c < b - a || c > a + b);
}

}  // namespace skeinrep

#endif
