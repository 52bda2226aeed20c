#include "equlat/checks/oracles.hpp"

#include <algorithm>
#include <string>

#include "equlat/automatic.hpp"

namespace equlat::oracle {

Matrix matrix_of(const Partition& e) {
  const std::size_t n = e.universe_size();
  Matrix m(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) m[x][y] = e.related(x, y);
  }
  return m;
}

Partition partition_of(const Matrix& m) {
  std::vector<std::size_t> labels(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::size_t y = 0;
    while (!m[y][x]) ++y;
    labels[x] = y;
  }
  return Partition::from_labels(labels);
}

Partition meet(const Partition& e, const Partition& f) {
  auto a = matrix_of(e);
  const auto b = matrix_of(f);
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) a[x][y] = a[x][y] && b[x][y];
  }
  return partition_of(a);
}

Partition chain_closure_join(const Partition& e, const Partition& f) {
  auto r = matrix_of(e);
  const auto b = matrix_of(f);
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) r[x][y] = r[x][y] || b[x][y];
  }
  // Chains of length ≤ 2^k after k squarings.
  for (std::size_t reach = 1; reach < n; reach *= 2) {
    Matrix next = r;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t z = 0; z < n; ++z) {
        if (!r[x][z]) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (r[z][y]) next[x][y] = true;
        }
      }
    }
    r = std::move(next);
  }
  return partition_of(r);
}

bool is_complement(const Partition& e, const Partition& f) {
  const std::size_t n = e.universe_size();
  return oracle::meet(e, f) == Partition::bottom(n) && chain_closure_join(e, f) == Partition::top(n);
}

Partition singular(std::size_t n, std::span<const std::size_t> members) {
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = x;
  std::size_t least = n;
  for (std::size_t x : members) least = std::min(least, x);
  for (std::size_t x : members) labels[x] = least;
  return Partition::from_labels(labels);
}

Matrix dfa_matrix(const Dfa& d, std::size_t bound) {
  Matrix m(bound, std::vector<bool>(bound));
  for (std::size_t a = 0; a < bound; ++a) {
    const std::string left = binrep(a) + "B";
    for (std::size_t b = 0; b < bound; ++b) m[a][b] = d.accepts(word_from_string(left + binrep(b)));
  }
  return m;
}

bool reflexive(const Matrix& m) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (!m[x][x]) return false;
  }
  return true;
}

bool symmetric(const Matrix& m) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (m[x][y] != m[y][x]) return false;
    }
  }
  return true;
}

bool transitive(const Matrix& m) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (!m[x][y]) continue;
      for (std::size_t z = 0; z < m.size(); ++z) {
        if (m[y][z] && !m[x][z]) return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> components(std::span<const Natural> points,
                                    const std::function<bool(const Natural&, const Natural&)>& edge) {
  const std::size_t n = points.size();
  std::vector<std::size_t> id(n, n);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (id[s] != n) continue;
    id[s] = next;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < n; ++y) {
        if (id[y] == n && (edge(points[x], points[y]) || edge(points[y], points[x]))) {
          id[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return id;
}

}  // namespace equlat::oracle
