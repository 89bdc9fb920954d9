#include "dea/buildhull.hpp"

#include "dea/membership.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace dea {

namespace {
using Clock = std::chrono::steady_clock;

Real seconds_since(Clock::time_point start) {
  return std::chrono::duration<Real>(Clock::now() - start).count();
}
}  // namespace

namespace {

Index argmax_candidate(const Matrix& translated,
                       const std::vector<Index>& candidates, const Vector& pi,
                       Real* max_value, std::vector<Index>* tied) {
  Index best = -1;
  Real best_value = 0;
  for (const Index idx : candidates) {
    const Real value = translated.row(idx).dot(pi);
    if (best < 0 || value > best_value) {
      best = idx;
      best_value = value;
      if (tied) {
        tied->clear();
        tied->push_back(idx);
      }
    } else if (value == best_value) {
      if (tied) tied->push_back(idx);
      // Lexicographic tie-break on coordinates, then lowest index.
      const auto a = translated.row(idx);
      const auto b = translated.row(best);
      for (Index j = 0; j < translated.cols(); ++j) {
        if (a(j) != b(j)) {
          if (a(j) > b(j)) best = idx;
          break;
        }
        if (j + 1 == translated.cols() && idx < best) best = idx;
      }
    }
  }
  if (max_value) *max_value = best_value;
  return best;
}

}  // namespace

Index translate_hyperplane(const Matrix& translated,
                           const std::vector<Index>& candidates,
                           const Vector& pi, Real beta,
                           long* inner_products) {
  if (candidates.empty())
    throw std::invalid_argument("translation needs at least one candidate");
  Real best_value = 0;
  const Index best =
      argmax_candidate(translated, candidates, pi, &best_value, nullptr);
  if (inner_products) *inner_products += static_cast<long>(candidates.size());
  if (best_value + beta <= 0)
    throw std::logic_error(
        "separation certificate admits no exterior candidate");
  return best;
}

FrameResult build_hull(const Dataset& ds, const IndexSet& init_frame,
                       const std::vector<Index>& order,
                       const BuildHullOptions& options) {
  const Index n = ds.n();
  if (init_frame.empty())
    throw std::invalid_argument("initial frame must be non-empty");
  for (const Index f : init_frame)
    if (f < 0 || f >= n) throw std::invalid_argument("init index out of range");

  // `order` must cover exactly the complement of the initial frame.
  {
    std::vector<uint8_t> seen(static_cast<size_t>(n), 0);
    for (const Index f : init_frame) {
      if (seen[static_cast<size_t>(f)])
        throw std::invalid_argument("duplicate init index");
      seen[static_cast<size_t>(f)] = 1;
    }
    for (const Index i : order) {
      if (i < 0 || i >= n || seen[static_cast<size_t>(i)])
        throw std::invalid_argument(
            "order must be a permutation of the non-initial indices");
      seen[static_cast<size_t>(i)] = 1;
    }
    if (static_cast<Index>(init_frame.size() + order.size()) != n)
      throw std::invalid_argument("order does not cover the dataset");
  }

  if (options.validate_init_frame && n > 1) {
    for (const Index f : init_frame) {
      Matrix generators(n - 1, ds.m());
      Index r = 0;
      for (Index i = 0; i < n; ++i)
        if (i != f) generators.row(r++) = ds.translated().row(i);
      const MembershipResult check = membership_test(
          generators, ds.translated().row(f).transpose(), options.solver);
      if (check.is_member)
        throw std::invalid_argument(
            "initial frame contains a non-extreme point");
    }
  }

  const auto t_start = Clock::now();
  FrameResult result;
  const Matrix& translated = ds.translated();

  Matrix partial(n, ds.m());  // generator rows of the current partial frame
  Index frame_size = 0;
  for (const Index f : init_frame) partial.row(frame_size++) = translated.row(f);

  std::vector<Index> pool(order.begin(), order.end());
  std::vector<Index> pool_pos(static_cast<size_t>(n), -1);
  for (size_t k = 0; k < pool.size(); ++k)
    pool_pos[static_cast<size_t>(pool[k])] = static_cast<Index>(k);
  const auto remove_from_pool = [&](Index idx) {
    const Index at = pool_pos[static_cast<size_t>(idx)];
    const Index last = pool.back();
    pool[static_cast<size_t>(at)] = last;
    pool_pos[static_cast<size_t>(last)] = at;
    pool.pop_back();
    pool_pos[static_cast<size_t>(idx)] = -1;
  };

  result.lp_sizes.reserve(order.size());
  size_t head = 0;
  while (!pool.empty()) {
    while (head < order.size() && pool_pos[static_cast<size_t>(order[head])] < 0)
      ++head;
    const Index b = order[head];
    const MembershipResult outcome =
        membership_test(partial.topRows(frame_size),
                        translated.row(b).transpose(), options.solver);
    ++result.lp_count;
    result.lp_sizes.push_back(frame_size);
    if (outcome.is_member) {
      remove_from_pool(b);
      continue;
    }
    const auto t_translate = Clock::now();
    Index admitted;
    if (options.exact_tie_resolution) {
      Real best_value = 0;
      std::vector<Index> tied;
      admitted = argmax_candidate(translated, pool, outcome.hyperplane_pi,
                                  &best_value, &tied);
      result.inner_products += static_cast<long>(pool.size());
      if (best_value + outcome.hyperplane_beta <= 0)
        throw std::logic_error(
            "separation certificate admits no exterior candidate");
      if (tied.size() > 1) {
        // Among tied candidates, admit one outside the hull of the others;
        // distinct points that merely collide on the functional are resolved
        // exactly, exact duplicates keep the lexicographic/index choice.
        for (const Index candidate : tied) {
          Matrix others(static_cast<Index>(tied.size()) - 1, ds.m());
          Index r = 0;
          for (const Index other : tied)
            if (other != candidate) others.row(r++) = translated.row(other);
          if (!membership_test(others, translated.row(candidate).transpose(),
                               options.solver)
                   .is_member) {
            admitted = candidate;
            break;
          }
        }
      }
    } else {
      admitted =
          translate_hyperplane(translated, pool, outcome.hyperplane_pi,
                               outcome.hyperplane_beta, &result.inner_products);
    }
    result.translation_time += seconds_since(t_translate);
    partial.row(frame_size++) = translated.row(admitted);
    result.admission_order.push_back(admitted);
    ++result.hyperplane_translations;
    remove_from_pool(admitted);
  }

  result.frame = init_frame;
  result.frame.insert(result.frame.end(), result.admission_order.begin(),
                      result.admission_order.end());
  std::sort(result.frame.begin(), result.frame.end());
  if (!result.lp_sizes.empty())
    result.avg_lp_size =
        static_cast<Real>(std::accumulate(result.lp_sizes.begin(),
                                          result.lp_sizes.end(), Index(0))) /
        static_cast<Real>(result.lp_sizes.size());
  result.wall_time = seconds_since(t_start);
  return result;
}

}  // namespace dea
