#include "strongconv/numeric/lp.hpp"

#include "strongconv/errors.hpp"
#include "strongconv/numeric/matrix.hpp"

#include <optional>

namespace strongconv::numeric {

Halfspace normalized(const Halfspace& h) {
  const Rational f = primitive_scale_factor(h.normal);
  return Halfspace{scale(h.normal, f), h.offset * f};
}

std::strong_ordering compare_halfspaces(const Halfspace& a, const Halfspace& b) {
  if (auto c = compare_lex(a.normal, b.normal); c != 0) return c;
  if (a.offset < b.offset) return std::strong_ordering::less;
  if (b.offset < a.offset) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool satisfies(const Halfspace& h, std::span<const Rational> x) { return dot(h.normal, x) <= h.offset; }

std::string to_string(LPStatus status) {
  switch (status) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Dense tableau. Row `m` is the objective row in z - c.x = 0 form, so the
// current objective value sits in its right-hand side and a negative entry
// marks an improving column.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t vars) : m_(rows), n_(vars), t_(rows + 1, vars + 1), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return t_(r, c); }
  Rational& rhs(std::size_t r) { return t_(r, n_); }
  Rational& obj(std::size_t c) { return t_(m_, c); }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return m_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = 1 / t_(pr, pc);
    for (std::size_t k = 0; k <= n_; ++k) {
      if (t_(pr, k) != 0) t_(pr, k) *= inv;
    }
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == pr || !alive(r) || t_(r, pc) == 0) continue;
      const Rational f = t_(r, pc);
      for (std::size_t k = 0; k <= n_; ++k) {
        if (t_(pr, k) != 0) t_(r, k) -= f * t_(pr, k);
      }
    }
    basis_[pr] = pc;
  }

  bool alive(std::size_t r) const { return r == m_ || dead_.empty() || !dead_[r]; }
  void kill(std::size_t r) {
    if (dead_.empty()) dead_.assign(m_, false);
    dead_[r] = true;
  }

  // Bland's rule over columns [0, usable). Returns false on unboundedness.
  bool optimize(std::size_t usable) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < usable; ++c) {
        if (t_(m_, c) < 0) {
          enter = c;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (!alive(r) || t_(r, *enter) <= 0) continue;
        Rational ratio = t_(r, n_) / t_(r, *enter);
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

 private:
  std::size_t m_;
  std::size_t n_;
  RationalMatrix t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> dead_;
};

// Moves an optimal point along directions that keep every tight constraint
// tight until the tight normals span the space, or stops if the region
// contains a line.
Vector move_to_vertex(Vector x, std::span<const Halfspace> constraints) {
  const std::size_t d = x.size();
  for (std::size_t guard = 0; guard <= d; ++guard) {
    std::vector<Vector> tight;
    for (const auto& h : constraints) {
      if (dot(h.normal, x) == h.offset) tight.push_back(h.normal);
    }
    std::vector<Vector> null = tight.empty()
                                   ? std::vector<Vector>{}
                                   : nullspace_basis(RationalMatrix::from_rows(tight, d));
    if (tight.empty()) {
      for (std::size_t i = 0; i < d; ++i) {
        Vector e(d, Rational(0));
        e[i] = 1;
        null.push_back(std::move(e));
      }
    }
    if (null.empty()) return x;
    const Vector& z = null.front();
    bool moved = false;
    for (int sign : {1, -1}) {
      std::optional<Rational> step;
      for (const auto& h : constraints) {
        Rational rate = dot(h.normal, z) * sign;
        if (rate <= 0) continue;
        Rational s = (h.offset - dot(h.normal, x)) / rate;
        if (!step || s < *step) step = std::move(s);
      }
      if (step) {
        for (std::size_t i = 0; i < d; ++i) x[i] += z[i] * (*step) * sign;
        moved = true;
        break;
      }
    }
    if (!moved) return x;
  }
  return x;
}

}  // namespace

LPOutcome lp_maximize(std::span<const Rational> objective, std::span<const Halfspace> constraints) {
  const std::size_t d = objective.size();
  for (const auto& h : constraints) {
    if (h.normal.size() != d) throw InputError("LP constraint dimension does not match objective");
  }
  const std::size_t m = constraints.size();
  std::size_t artificial_count = 0;
  for (const auto& h : constraints) {
    if (h.offset < 0) ++artificial_count;
  }
  // Columns: u (d), v (d), slacks (m), artificials.
  const std::size_t u0 = 0, v0 = d, s0 = 2 * d, a0 = 2 * d + m;
  const std::size_t vars = a0 + artificial_count;
  Tableau tab(m, vars);
  std::size_t next_art = a0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& h = constraints[i];
    const bool flip = h.offset < 0;
    const int sgn = flip ? -1 : 1;
    for (std::size_t j = 0; j < d; ++j) {
      if (h.normal[j] == 0) continue;
      tab.at(i, u0 + j) = h.normal[j] * sgn;
      tab.at(i, v0 + j) = -h.normal[j] * sgn;
    }
    tab.at(i, s0 + i) = sgn;
    tab.rhs(i) = h.offset * sgn;
    if (flip) {
      tab.at(i, next_art) = 1;
      tab.basic(i) = next_art++;
    } else {
      tab.basic(i) = s0 + i;
    }
  }

  if (artificial_count > 0) {
    // Phase 1: maximize -(sum of artificials).
    for (std::size_t c = a0; c < vars; ++c) tab.obj(c) = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basic(i) < a0) continue;
      for (std::size_t c = 0; c <= vars; ++c) {
        const Rational& e = c == vars ? tab.rhs(i) : tab.at(i, c);
        if (e != 0) tab.obj(c) -= e;
      }
    }
    tab.optimize(vars);
    if (tab.obj(vars) < 0) return LPOutcome{LPStatus::infeasible, Rational(0), {}};
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basic(i) < a0) continue;
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < a0; ++c) {
        if (tab.at(i, c) != 0) {
          col = c;
          break;
        }
      }
      if (col) {
        tab.pivot(i, *col);
      } else {
        tab.kill(i);
      }
    }
  }

  // Phase 2 objective over u - v.
  for (std::size_t c = 0; c <= vars; ++c) tab.obj(c) = 0;
  for (std::size_t j = 0; j < d; ++j) {
    tab.obj(u0 + j) = -objective[j];
    tab.obj(v0 + j) = objective[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!tab.alive(i)) continue;
    const std::size_t b = tab.basic(i);
    if (tab.obj(b) == 0) continue;
    const Rational f = tab.obj(b);
    for (std::size_t c = 0; c <= vars; ++c) {
      const Rational& e = c == vars ? tab.rhs(i) : tab.at(i, c);
      if (e != 0) tab.obj(c) -= f * e;
    }
  }
  if (!tab.optimize(a0)) return LPOutcome{LPStatus::unbounded, Rational(0), {}};

  Vector x(d, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (!tab.alive(i)) continue;
    const std::size_t b = tab.basic(i);
    if (b < v0) {
      x[b - u0] += tab.rhs(i);
    } else if (b < s0) {
      x[b - v0] -= tab.rhs(i);
    }
  }
  x = move_to_vertex(std::move(x), constraints);
  Rational value = dot(objective, x);
  return LPOutcome{LPStatus::optimal, std::move(value), std::move(x)};
}

bool lp_feasible(std::size_t dim, std::span<const Halfspace> constraints) {
  const Vector zero(dim, Rational(0));
  return lp_maximize(zero, constraints).status == LPStatus::optimal;
}

}  // namespace strongconv::numeric
