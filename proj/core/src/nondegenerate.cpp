#include "infocoh/nondegenerate.hpp"

#include <algorithm>
#include <numeric>

#include "infocoh/errors.hpp"

namespace infocoh {
namespace {

struct Grid {
  int k = 0;
  int l = 0;
  std::vector<char> occupied;  // original index pair (i,j) -> i*l + j

  bool occ(int i, int j) const { return occupied[size_t(i) * l + j] != 0; }
};

// Slot lookup under the current enumerations; positions are 1-based.
struct View {
  const Grid* grid = nullptr;
  const std::vector<int>* ox = nullptr;
  const std::vector<int>* oy = nullptr;

  bool at(int a, int b) const {
    return grid->occ((*ox)[a - 1], (*oy)[b - 1]);
  }
};

bool row_tail(const View& v, int from, int k, int b) {
  for (int i = from; i <= k; ++i)
    if (!v.at(i, b)) return false;
  return true;
}

bool col_tail(const View& v, int a, int from, int l) {
  for (int j = from; j <= l; ++j)
    if (!v.at(a, j)) return false;
  return true;
}

bool admits(const View& v, int k, int l, const std::vector<char>& steps) {
  int a = 1;
  int b = 1;
  std::vector<char> col_seen(size_t(k) + 1, 0);
  std::vector<char> row_seen(size_t(l) + 1, 0);
  auto visit = [&](int pa, int pb) {
    if (pa > k - 1 || pb > l - 1) return true;
    int cnt = 0;
    for (int da = 0; da <= 1; ++da)
      for (int db = 0; db <= 1; ++db) cnt += v.at(pa + da, pb + db) ? 1 : 0;
    if (cnt < 3) return false;
    col_seen[pa] = 1;
    row_seen[pb] = 1;
    return true;
  };
  if (!visit(a, b)) return false;
  for (char s : steps) {
    if (s == 'E') {
      // Steps into the last column restate the corner recurrence and carry
      // no constraint.
      if (a <= k - 2) {
        if (b + 1 > l) return false;
        bool pat_a = v.at(a, b + 1) && row_tail(v, a + 1, k, b);
        bool pat_b = v.at(a, b) && row_tail(v, a + 1, k, b + 1);
        if (!pat_a && !pat_b) return false;
      }
      ++a;
    } else {
      if (b <= l - 2) {
        if (a + 1 > k) return false;
        bool pat_a = v.at(a + 1, b) && col_tail(v, a, b + 1, l);
        bool pat_b = v.at(a, b) && col_tail(v, a + 1, b + 1, l);
        if (!pat_a && !pat_b) return false;
      }
      ++b;
    }
    if (!visit(a, b)) return false;
  }
  for (int c = 1; c <= k - 1; ++c)
    if (!col_seen[c]) return false;
  for (int r = 1; r <= l - 1; ++r)
    if (!row_seen[r]) return false;
  return true;
}

void all_paths(int east, int north, std::vector<char>& cur,
               std::vector<std::vector<char>>& out) {
  if (east == 0 && north == 0) {
    out.push_back(cur);
    return;
  }
  if (east > 0) {
    cur.push_back('E');
    all_paths(east - 1, north, cur, out);
    cur.pop_back();
  }
  if (north > 0) {
    cur.push_back('N');
    all_paths(east, north - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::pair<int, int>> path_points(const std::vector<char>& steps) {
  std::vector<std::pair<int, int>> pts;
  pts.reserve(steps.size() + 1);
  int a = 1;
  int b = 1;
  pts.emplace_back(a, b);
  for (char s : steps) {
    if (s == 'E')
      ++a;
    else
      ++b;
    pts.emplace_back(a, b);
  }
  return pts;
}

}  // namespace

std::optional<NondegWitness> search_nondegenerate(
    int k, int l, const std::vector<std::pair<int, int>>& present) {
  if (k < 1 || l < 1) fail(Errc::BadArgument, "grid dimensions must be >= 1");
  Grid grid;
  grid.k = k;
  grid.l = l;
  grid.occupied.assign(size_t(k) * l, 0);
  for (auto [i, j] : present) {
    if (i < 0 || i >= k || j < 0 || j >= l)
      fail(Errc::BadArgument, "occupied slot outside grid");
    grid.occupied[size_t(i) * l + j] = 1;
  }

  std::vector<std::vector<char>> paths;
  {
    std::vector<char> cur;
    all_paths(k - 1, l - 1, cur, paths);
  }

  std::vector<int> ox(static_cast<size_t>(k));
  std::iota(ox.begin(), ox.end(), 0);
  do {
    std::vector<int> oy(static_cast<size_t>(l));
    std::iota(oy.begin(), oy.end(), 0);
    do {
      View v{&grid, &ox, &oy};
      for (const auto& steps : paths) {
        if (admits(v, k, l, steps)) {
          NondegWitness w;
          w.order_x = ox;
          w.order_y = oy;
          w.path = path_points(steps);
          return w;
        }
      }
    } while (std::next_permutation(oy.begin(), oy.end()));
  } while (std::next_permutation(ox.begin(), ox.end()));
  return std::nullopt;
}

std::optional<NondegWitness> nondegenerate_witness(const Structure& s, int x,
                                                   int y) {
  if (x == y)
    fail(Errc::BadArgument, "nondegeneracy needs two distinct variables");
  auto xy = s.meet(x, y);
  if (!xy)
    fail(Errc::MissingProduct, "no declared product of '" +
                                   s.variable(x).id + "' and '" +
                                   s.variable(y).id + "'");
  const auto& to_x = s.fiber_map(*xy, x);
  const auto& to_y = s.fiber_map(*xy, y);
  std::vector<std::pair<int, int>> present;
  present.reserve(to_x.size());
  for (size_t o = 0; o < to_x.size(); ++o)
    present.emplace_back(to_x[o], to_y[o]);
  return search_nondegenerate(s.outcome_count(x), s.outcome_count(y), present);
}

}  // namespace infocoh
