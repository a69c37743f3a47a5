// Independent constructions shared by the unit tests.
#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <vector>

#include "biquandle/algebra.hpp"
#include "biquandle/diagram.hpp"

namespace biq::test {

/// Every valid biquandle on {1,2,3}: both tables range over all choices of
/// three column permutations, and validate_axioms filters.
inline std::vector<FiniteBiquandle> all_biquandles_of_order_3() {
  std::vector<std::vector<Element>> perms;
  std::vector<Element> p{1, 2, 3};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto table = [&](int code) {
    Table t(3, std::vector<Element>(3));
    for (int y = 0; y < 3; ++y, code /= 6)
      for (int x = 0; x < 3; ++x) t[x][y] = perms[code % 6][x];
    return t;
  };
  std::vector<FiniteBiquandle> out;
  for (int o = 0; o < 216; ++o)
    for (int u = 0; u < 216; ++u) {
      BiquandleTables t{table(o), table(u)};
      if (validate_axioms(t).ok()) out.push_back(FiniteBiquandle::from_tables(t));
    }
  return out;
}

/// Closure of a braid word on `width` strands, drawn top to bottom. Letter
/// +i crosses positions i and i+1 (1-based) with the right strand over,
/// -i with the left strand over. Strands untouched by every letter become
/// free loops.
inline SemiarcDiagram braid_closure(int width, const std::vector<int>& word) {
  int next = width;
  std::vector<int> pos(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) pos[i] = i;
  std::vector<Crossing> xs;
  for (int letter : word) {
    const int i = std::abs(letter) - 1;
    const int left = pos[i], right = pos[i + 1];
    const int left_cont = next++, right_cont = next++;  // left strand moves right and vice versa
    if (letter > 0) xs.push_back({Sign::positive, left, right, left_cont, right_cont});
    else xs.push_back({Sign::negative, right, left, right_cont, left_cont});
    pos[i] = right_cont;
    pos[i + 1] = left_cont;
  }
  // The bottom of position p is glued to the top of position p.
  std::map<int, int> glue;
  for (int p = 0; p < width; ++p) glue[pos[p]] = p;
  auto root = [&](int s) {
    while (glue.count(s) && glue[s] != s) s = glue[s];
    return s;
  };
  std::map<int, int> id;
  int free_loops = 0;
  for (int p = 0; p < width; ++p)
    if (pos[p] == p) ++free_loops;
  for (auto& x : xs)
    for (int* s : {&x.under_in, &x.over_in, &x.under_out, &x.over_out}) {
      const int r = root(*s);
      if (!id.count(r)) {
        const int fresh = static_cast<int>(id.size());
        id[r] = fresh;
      }
      *s = id[r];
    }
  return SemiarcDiagram(static_cast<int>(id.size()), xs, free_loops);
}

}  // namespace biq::test
