#pragma once

#include <vector>

#include "pdel/eha.hpp"

namespace pdel::testing {

/// Powerset lattice of a k-point set: element index == subset bitmask.
inline FiniteLattice powerset_lattice(int k) {
  int n = 1 << k;
  std::vector<std::pair<int, int>> leq;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a & ~b) == 0) leq.emplace_back(a, b);
  return FiniteLattice::build(n, leq);
}

/// Powerset EHA whose single agent's cells are given by a point partition.
inline Eha powerset_eha(int k, const std::vector<int>& cellOfPoint,
                        const std::string& agent = "i") {
  Eha A;
  A.lat = powerset_lattice(k);
  A.agents = {agent};
  int n = 1 << k;
  int cells = 0;
  for (int c : cellOfPoint) cells = std::max(cells, c + 1);
  std::vector<int> cellMask(cells, 0);
  for (int pt = 0; pt < k; ++pt) cellMask[cellOfPoint[pt]] |= 1 << pt;
  std::vector<int16_t> dia(n), box(n);
  for (int x = 0; x < n; ++x) {
    int d = 0, b = 0;
    for (int c = 0; c < cells; ++c) {
      if (cellMask[c] & x) d |= cellMask[c];
      if ((cellMask[c] & x) == cellMask[c]) b |= cellMask[c];
    }
    dia[x] = int16_t(d);
    box[x] = int16_t(b);
  }
  A.diamond = {dia};
  A.box = {box};
  return A;
}

/// The five up-sets of the poset s0 <= s1, s0 <= s2, as a lattice:
/// 0 = {}, 1 = {s1}, 2 = {s2}, 3 = {s1,s2}, 4 = {s0,s1,s2}.
inline FiniteLattice upset_lattice_v() {
  std::vector<std::pair<int, int>> leq = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3},
                                          {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  return FiniteLattice::build(5, leq);
}

}  // namespace pdel::testing
