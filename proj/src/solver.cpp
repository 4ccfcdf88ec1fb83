#include "toricsplit/solver.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "toricsplit/error.hpp"

namespace toricsplit {

namespace {

bool unimodular_subset(const Fan& fan, const std::vector<std::size_t>& subset) {
  std::vector<IntVector> rows;
  for (auto j : subset) rows.push_back(fan.ray(j));
  return abs(determinant(IntMatrix::from_rows(rows, fan.dim()))) == 1;
}

// Advances `c` to the next n-subset of {0..J-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& c, std::size_t total) {
  const std::size_t n = c.size();
  for (std::size_t i = n; i-- > 0;) {
    if (c[i] < total - n + i) {
      ++c[i];
      for (std::size_t k = i + 1; k < n; ++k) c[k] = c[k - 1] + 1;
      return true;
    }
  }
  return false;
}

void check_kernel(const Fan& fan, const IntMatrix& q) {
  auto kernel = integer_kernel(q);
  auto principal = principal_columns(fan);
  bool ok = kernel.size() == fan.dim();
  for (const auto& p : principal) {
    IntVector image = q.apply(p);
    ok = ok && std::all_of(image.begin(), image.end(), [](const Int& v) { return sgn(v) == 0; });
  }
  if (!ok) {
    throw Error("solver", "kernel of Q has rank " + std::to_string(kernel.size()) +
                              " and is not the principal-divisor lattice (dimension " +
                              std::to_string(fan.dim()) + ")");
  }
}

// Per-column sign state while rows are being filled in.
struct ColumnState {
  bool pos = false, zero = false, neg = false;
  void add(const Int& v) {
    int s = sgn(v);
    pos |= s > 0;
    zero |= s == 0;
    neg |= s < 0;
  }
  bool ok(Strictness st) const {
    if (st == Strictness::Default) return !(neg && (pos || zero));
    return static_cast<int>(pos) + static_cast<int>(zero) + static_cast<int>(neg) <= 1;
  }
};

// For each row i of q: coefficients c with q_i = sum_{k<i} c_k q_k, if any.
std::vector<std::optional<RatVector>> row_dependencies(const IntMatrix& q) {
  std::vector<std::optional<RatVector>> deps(q.rows());
  for (std::size_t i = 1; i < q.rows(); ++i) {
    // Columns q_0..q_{i-1} followed by q_i.
    RatMatrix m(q.cols(), i + 1);
    for (std::size_t j = 0; j < q.cols(); ++j)
      for (std::size_t k = 0; k <= i; ++k) m(j, k) = Rational(q(k, j));
    RowReduced red = rref(m);
    if (!red.pivot_cols.empty() && red.pivot_cols.back() == i) continue;
    RatVector c(i);
    for (std::size_t row = 0; row < red.pivot_cols.size(); ++row) c[red.pivot_cols[row]] = red.r(row, i);
    deps[i] = std::move(c);
  }
  return deps;
}

}  // namespace

bool column_sign_ok(const IntVector& image, Strictness strictness) {
  ColumnState s;
  for (const auto& v : image) s.add(v);
  return s.ok(strictness);
}

std::vector<std::size_t> reduction_rays(const Fan& fan) {
  const std::size_t n = fan.dim(), total = fan.num_rays();
  std::vector<std::size_t> last;
  for (std::size_t j = total - n; j < total; ++j) last.push_back(j);
  if (unimodular_subset(fan, last)) return last;
  std::vector<std::size_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = i;
  do {
    if (unimodular_subset(fan, c)) return c;
  } while (next_subset(c, total));
  throw Error("fan", "no unimodular ray subset");
}

IntVector canonical_class_rep(const IntVector& x, const Fan& fan) {
  if (x.size() != fan.num_rays()) throw Error("dimension", "class has the wrong length");
  const auto subset = reduction_rays(fan);
  const std::size_t n = fan.dim();
  std::vector<IntVector> rows;
  for (auto j : subset) rows.push_back(fan.ray(j));
  IntMatrix v = IntMatrix::from_rows(rows, n);
  IntMatrix rhs(n, 1);
  for (std::size_t k = 0; k < n; ++k) rhs(k, 0) = x[subset[k]];
  auto sol = solve_integral(v, rhs);
  if (!sol) throw Error("fan", "reduction subset is not unimodular");
  IntVector m = sol->x.col(0);
  IntVector out = x;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= dot(m, fan.ray(j));
  return out;
}

std::vector<SplittingType> find_splitting_types(const Fan& fan, const IntMatrix& q,
                                                const SplittingSystem& xi,
                                                Strictness strictness) {
  const std::size_t rows = q.rows();
  if (xi.size() != rows || q.cols() != fan.num_rays()) {
    throw Error("dimension", "Q and the splitting system do not match");
  }
  if (rows == 0) return {};
  const std::size_t r = xi.degrees[0].size();
  for (const auto& d : xi.degrees)
    if (d.size() != r) throw Error("dimension", "splitting tuples have different ranks");
  check_kernel(fan, q);

  // Distinct orderings of every row's tuple.
  std::vector<std::vector<std::vector<Int>>> orderings(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Int> t = xi.degrees[i];
    std::sort(t.begin(), t.end());
    do orderings[i].push_back(t);
    while (std::next_permutation(t.begin(), t.end()));
    std::reverse(orderings[i].begin(), orderings[i].end());
  }

  std::vector<SplittingType> found;
  std::set<std::vector<IntVector>> seen;
  IntMatrix rp(rows, r);
  std::vector<std::vector<ColumnState>> state(rows + 1, std::vector<ColumnState>(r));
  // tied[l]: columns l and l+1 agree on every row so far.
  std::vector<std::vector<char>> tied(rows + 1, std::vector<char>(r > 0 ? r - 1 : 0, 1));
  std::size_t candidate = 0;
  const auto deps = row_dependencies(q);

  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i == rows) {
      std::size_t id = candidate++;
      auto sol = solve_integral(q, rp);
      if (!sol) return;
      SplittingType st;
      st.permutation_id = id;
      st.r_prime = rp;
      st.x = sol->x;
      for (std::size_t l = 0; l < r; ++l) {
        IntVector col = st.x.col(l);
        st.sign_classes.push_back(sign_of_image(rp.col(l)));
        st.canonical.push_back(canonical_class_rep(col, fan));
      }
      std::sort(st.canonical.begin(), st.canonical.end());
      if (seen.insert(st.canonical).second) found.push_back(std::move(st));
      return;
    }
    for (const auto& ord : orderings[i]) {
      bool ok = true;
      for (std::size_t l = 0; l + 1 < r && ok; ++l)
        if (tied[i][l] && ord[l] < ord[l + 1]) ok = false;
      if (!ok) continue;
      if (deps[i]) {
        // A dependent row of Q forces the matching row of R'.
        for (std::size_t l = 0; l < r && ok; ++l) {
          Rational forced = 0;
          for (std::size_t k = 0; k < i; ++k) forced += (*deps[i])[k] * Rational(rp(k, l));
          ok = forced == Rational(ord[l]);
        }
        if (!ok) continue;
      }
      for (std::size_t l = 0; l < r && ok; ++l) {
        state[i + 1][l] = state[i][l];
        state[i + 1][l].add(ord[l]);
        ok = state[i + 1][l].ok(strictness);
      }
      if (!ok) continue;
      for (std::size_t l = 0; l + 1 < r; ++l) tied[i + 1][l] = tied[i][l] && ord[l] == ord[l + 1];
      for (std::size_t l = 0; l < r; ++l) rp(i, l) = ord[l];
      dfs(i + 1);
    }
  };
  dfs(0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace toricsplit
