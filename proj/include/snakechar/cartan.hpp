#ifndef SNAKECHAR_CARTAN_HPP
#define SNAKECHAR_CARTAN_HPP

#include <stdexcept>
#include <vector>

namespace snakechar {

enum class LieType { A, B };

/// Cartan datum for the simply-laced type A_n and the two-root-length type B_n.
/// Convention: C[i][j] = 2 (a_i, a_j) / (a_i, a_i), so in type B_n the short node
/// is n, C[n-1][n] = -1 and C[n][n-1] = -2, d = (2,...,2,1), and B = D C is symmetric.
/// Nodes are 1-based; row/column 0 of the stored matrix is unused.
struct CartanData {
  LieType type;
  int n;
  std::vector<std::vector<int>> C;
  std::vector<int> d;
  int t_max;

  int cartan(int i, int j) const { return C[i][j]; }
  int sym(int i) const { return d[i]; }
  int b(int i, int j) const { return d[i] * C[i][j]; }
  bool valid_node(int i) const { return 1 <= i && i <= n; }
};

inline CartanData make_cartan(LieType type, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (type == LieType::B && n < 2) throw std::invalid_argument("type B needs rank >= 2");
  CartanData cd;
  cd.type = type;
  cd.n = n;
  cd.C.assign(n + 1, std::vector<int>(n + 1, 0));
  cd.d.assign(n + 1, type == LieType::A ? 1 : 2);
  cd.d[0] = 0;
  for (int i = 1; i <= n; ++i) {
    cd.C[i][i] = 2;
    if (i > 1) cd.C[i][i - 1] = -1;
    if (i < n) cd.C[i][i + 1] = -1;
  }
  if (type == LieType::B) {
    cd.d[n] = 1;
    cd.C[n][n - 1] = -2;
  }
  cd.t_max = type == LieType::A ? 1 : 2;
  return cd;
}

}  // namespace snakechar

#endif
