#include "strongconv/separation/separation.hpp"

#include "strongconv/bodies/operations.hpp"
#include "strongconv/errors.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

namespace strongconv::separation {

using numeric::compare_halfspaces;
using numeric::dot;

ColoredPointSet::ColoredPointSet(std::size_t dim, std::size_t colors, std::vector<ColoredPoint> points)
    : dim_(dim), colors_(colors), points_(std::move(points)), classes_(colors) {
  if (colors == 0) throw InputError("a colored point set needs at least one color");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].x.size() != dim) throw InputError("point " + std::to_string(i) + " has the wrong dimension");
    if (points_[i].color >= colors) throw InputError("point " + std::to_string(i) + " has color " + std::to_string(points_[i].color) + " out of range");
    classes_[points_[i].color].push_back(i);
  }
  for (std::size_t c = 0; c < colors; ++c) {
    if (classes_[c].empty()) throw InputError("color class " + std::to_string(c) + " is empty");
  }
}

std::vector<Vector> ColoredPointSet::class_points(std::size_t i) const {
  std::vector<Vector> out;
  for (std::size_t idx : classes_.at(i)) out.push_back(points_[idx].x);
  return out;
}

Separator::Separator(ConvexBody k, const ConvexBody& c) : k_(k), q_(k) {
  if (c.dim() != k.dim()) throw InputError("compactum dimension does not match body");
  if (c.has_vertices() && c.vertices().size() == 1) {
    q_ = k_.translated(numeric::negate(c.vertices()[0]));
  } else {
    if (k.dim() > 3) throw InputError("separation from a non-point compactum needs d <= 3");
    q_ = bodies::minkowski_sum(k_, c.reflected());
  }
  prepare();
}

Separator::Separator(ConvexBody k, const Vector& p) : k_(k), q_(k.translated(numeric::negate(p))) { prepare(); }

void Separator::prepare() {
  if (q_.dim() != 2 || q_.polygon().size() < 3) return;
  angular_ = q_.angular_edges();
  std::vector<std::size_t> order(angular_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return compare_halfspaces(angular_[a], angular_[b]) < 0; });
  canonical_rank_.assign(angular_.size(), 0);
  for (std::size_t r = 0; r < order.size(); ++r) canonical_rank_[order[r]] = r;
}

std::optional<SeparationWitness> Separator::operator()(const std::vector<Vector>& s) const {
  if (s.empty()) throw InputError("separation of an empty set");
  if (!angular_.empty()) {
    const auto poly = bodies::erode_polygon(k_, s);
    if (!poly) return std::nullopt;
    const auto sweep = bodies::planar::support_sweep(*poly, angular_);
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < angular_.size(); ++j) {
      if (sweep.values[j] > angular_[j].offset && (!best || canonical_rank_[j] < canonical_rank_[*best])) best = j;
    }
    if (!best) return std::nullopt;
    return SeparationWitness{(*poly)[sweep.argmax[*best]], angular_[*best]};
  }
  const auto p = bodies::erode(k_, s);
  if (!p) return std::nullopt;
  for (const auto& h : q_.halfspaces()) {
    if (p->has_vertices()) {
      std::optional<Vector> arg;
      Rational val;
      for (const auto& v : p->vertices()) {
        Rational x = dot(h.normal, v);
        if (!arg || x > val || (x == val && numeric::compare_lex(v, *arg) < 0)) {
          val = std::move(x);
          arg = v;
        }
      }
      if (val > h.offset) return SeparationWitness{*arg, h};
    } else {
      const auto r = numeric::lp_maximize(h.normal, p->halfspaces());
      if (r.status == numeric::LPStatus::optimal && r.optimum > h.offset) return SeparationWitness{r.point, h};
    }
  }
  return std::nullopt;
}

std::optional<SeparationWitness> separate(const ConvexBody& k, const std::vector<Vector>& s, const ConvexBody& c) {
  return Separator(k, c)(s);
}

std::optional<SeparationWitness> separate_from_point(const ConvexBody& k, const std::vector<Vector>& s, const Vector& p) {
  return Separator(k, p)(s);
}

bool verify_witness(const ConvexBody& k, const std::vector<Vector>& s, const ConvexBody& c, const SeparationWitness& w) {
  for (const auto& x : s) {
    if (!k.contains(numeric::add(x, w.translate))) return false;
  }
  const auto& h = w.violated_facet;
  if (dot(h.normal, w.translate) <= h.offset) return false;
  // K ⊕ (-C) must lie in the facet's halfspace: h_K(a) + h_C(-a) <= b.
  return bodies::support_value(k, h.normal) + bodies::support_value(c, numeric::negate(h.normal)) <= h.offset;
}

std::optional<std::uint64_t> first_index(std::uint64_t count, unsigned jobs,
                                         const std::function<bool(std::uint64_t)>& pred) {
  if (jobs <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  constexpr std::uint64_t block = 8;
  std::atomic<std::uint64_t> best{count};
  std::atomic<std::uint64_t> next_block{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t start = next_block.fetch_add(1) * block;
        if (start >= count || start >= best.load()) return;
        for (std::uint64_t i = start; i < std::min(count, start + block); ++i) {
          if (i >= best.load()) return;
          if (pred(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  if (best.load() == count) return std::nullopt;
  return best.load();
}

namespace {

std::vector<std::size_t> decode_transversal(const ColoredPointSet& x, std::uint64_t index) {
  std::vector<std::size_t> out(x.colors());
  for (std::size_t c = x.colors(); c-- > 0;) {
    const auto& cls = x.class_indices(c);
    out[c] = cls[index % cls.size()];
    index /= cls.size();
  }
  return out;
}

std::uint64_t transversal_count(const ColoredPointSet& x, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < x.colors(); ++c) {
    const std::uint64_t s = x.class_indices(c).size();
    if (total > cap / s) throw SizeLimitError("more than " + std::to_string(cap) + " transversals");
    total *= s;
  }
  if (total > cap) throw SizeLimitError("more than " + std::to_string(cap) + " transversals");
  return total;
}

std::vector<Vector> points_at(const ColoredPointSet& x, const std::vector<std::size_t>& idx) {
  std::vector<Vector> out;
  for (std::size_t i : idx) out.push_back(x.points()[i].x);
  return out;
}

// Shared hypothesis scan; returns false and fills the report on a violation.
bool check_hypothesis(const Separator& sep, const ColoredPointSet& x, const VerifyOptions& opts, ColorfulReport& report) {
  if (x.dim() != sep.body().dim()) throw InputError("point set dimension does not match body");
  report.nonstandard = x.colors() != x.dim() + 1;
  if (report.nonstandard && !opts.allow_nonstandard) {
    throw InputError("expected " + std::to_string(x.dim() + 1) + " colors, got " + std::to_string(x.colors()) +
                     " (allow nonstandard counts explicitly)");
  }
  const std::uint64_t total = transversal_count(x, opts.transversal_cap);
  const auto bad = first_index(total, opts.jobs, [&](std::uint64_t i) {
    return !sep(points_at(x, decode_transversal(x, i))).has_value();
  });
  if (bad) {
    report.hypothesis_holds = false;
    report.violating_transversal = decode_transversal(x, *bad);
    report.transversals_checked = *bad + 1;
    return false;
  }
  report.hypothesis_holds = true;
  report.transversals_checked = total;
  return true;
}

ColorfulReport colorful_with(const Separator& sep, const ColoredPointSet& x, const VerifyOptions& opts) {
  ColorfulReport report;
  if (!check_hypothesis(sep, x, opts, report)) return report;
  for (std::size_t c = 0; c < x.colors(); ++c) {
    if (auto w = sep(x.class_points(c))) {
      report.separated_color = c;
      report.witness = std::move(*w);
      break;
    }
  }
  return report;
}

}  // namespace

ColorfulReport verify_colorful(const ConvexBody& k, const ColoredPointSet& x, const VerifyOptions& opts) {
  return colorful_with(Separator(k, numeric::zero_vector(k.dim())), x, opts);
}

ColorfulReport verify_colorful_compactum(const ConvexBody& k, const ColoredPointSet& x, const ConvexBody& c,
                                         const VerifyOptions& opts) {
  return colorful_with(Separator(k, c), x, opts);
}

ColorfulReport verify_very_colorful(const ConvexBody& k, const ColoredPointSet& x, const VerifyOptions& opts) {
  const Vector origin = numeric::zero_vector(k.dim());
  if (x.dim() != k.dim()) throw InputError("point set dimension does not match body");
  if (!k.contains_strictly(origin)) throw PreconditionError("the origin is not in the interior of the body");
  for (std::size_t i = 0; i < x.points().size(); ++i) {
    if (!k.contains_strictly(x.points()[i].x)) {
      throw PreconditionError("point " + std::to_string(i) + " " + numeric::to_string(x.points()[i].x) +
                              " is not in the interior of the body");
    }
  }
  const Separator sep(k, origin);
  ColorfulReport report;
  if (!check_hypothesis(sep, x, opts, report)) return report;
  for (std::size_t i = 0; i < x.colors(); ++i) {
    for (std::size_t j = i + 1; j < x.colors(); ++j) {
      auto s = x.class_points(i);
      auto sj = x.class_points(j);
      s.insert(s.end(), sj.begin(), sj.end());
      if (auto w = sep(s)) {
        report.separated_pair = std::make_pair(i, j);
        report.witness = std::move(*w);
        return report;
      }
    }
  }
  return report;
}

SubsetSearch minimal_subset(std::size_t n, const std::function<bool(const std::vector<std::size_t>&)>& pred,
                            std::uint64_t cap, std::size_t max_size) {
  SubsetSearch out;
  for (std::size_t k = 1; k <= std::min(n, max_size); ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      if (++out.subsets_checked > cap) throw SizeLimitError("more than " + std::to_string(cap) + " subsets");
      if (pred(idx)) {
        out.subset = idx;
        return out;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

bool in_strong_hull(const ConvexBody& k, const std::vector<Vector>& x, const Vector& p) {
  if (!bodies::erode(k, x)) throw NotCoverableError("the point set is not contained in any translate of the body");
  return !separate_from_point(k, x, p).has_value();
}

SubsetSearch caratheodory_number(const ConvexBody& k, const std::vector<Vector>& x, const Vector& p, std::uint64_t cap) {
  if (x.empty()) throw InputError("empty point set");
  if (!bodies::erode(k, x)) throw NotCoverableError("the point set is not contained in any translate of the body");
  const Separator sep(k, p);
  if (sep(x)) return {};
  return minimal_subset(
      x.size(),
      [&](const std::vector<std::size_t>& idx) {
        std::vector<Vector> sub;
        for (std::size_t i : idx) sub.push_back(x[i]);
        return !sep(sub).has_value();
      },
      cap);
}

}  // namespace strongconv::separation
