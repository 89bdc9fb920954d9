#include "dea/oracle.hpp"

#include "dea/membership.hpp"
#include "dea/models.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <thread>

namespace dea {

std::string to_string(ClassificationReport::Label label) {
  switch (label) {
    case ClassificationReport::Label::extreme_efficient:
      return "extreme_efficient";
    case ClassificationReport::Label::boundary_nonextreme:
      return "boundary_nonextreme";
    case ClassificationReport::Label::interior:
      return "interior";
  }
  return "unknown";
}

namespace {

struct DuplicateGroups {
  IndexSet representatives;            // sorted unique point owners
  std::vector<Index> representative_of;  // per DMU
  std::vector<Index> group_size_of;      // per representative DMU
};

DuplicateGroups group_duplicates(const Dataset& ds) {
  const Matrix& t = ds.translated();
  std::map<std::vector<Real>, Index> seen;
  DuplicateGroups out;
  out.representative_of.resize(static_cast<size_t>(ds.n()));
  out.group_size_of.assign(static_cast<size_t>(ds.n()), 0);
  for (Index i = 0; i < ds.n(); ++i) {
    std::vector<Real> key(t.row(i).begin(), t.row(i).end());
    auto [it, inserted] = seen.emplace(std::move(key), i);
    out.representative_of[static_cast<size_t>(i)] = it->second;
    ++out.group_size_of[static_cast<size_t>(it->second)];
    if (inserted) out.representatives.push_back(i);
  }
  return out;
}

}  // namespace

ClassificationReport classify_all(const Dataset& ds,
                                  const OracleOptions& options) {
  using Label = ClassificationReport::Label;
  const DuplicateGroups groups = group_duplicates(ds);
  const IndexSet& uniq = groups.representatives;
  const Index u = static_cast<Index>(uniq.size());

  std::vector<Label> uniq_label(static_cast<size_t>(u));
  Vector uniq_score(u);
  std::atomic<long> lp_count{0};

  const auto classify_one = [&](Index pos) {
    const Index i = uniq[static_cast<size_t>(pos)];
    long lps = 0;
    Label label;
    if (u == 1) {
      label = Label::extreme_efficient;
    } else {
      // Deleted-domain exteriority: extreme iff a^i lies outside the hull
      // of the other unique points.
      Matrix generators(u - 1, ds.m());
      Index r = 0;
      for (Index q = 0; q < u; ++q) {
        if (q == pos) continue;
        generators.row(r++) = ds.translated().row(uniq[static_cast<size_t>(q)]);
      }
      const MembershipResult member = membership_test(
          generators, ds.translated().row(i).transpose(), options.solver);
      ++lps;
      if (member.delta > options.solver.tol.member) {
        label = Label::extreme_efficient;
      } else {
        const Real t = dominance_gap(ds, uniq, i, options.solver);
        ++lps;
        label = t > options.solver.tol.member ? Label::interior
                                              : Label::boundary_nonextreme;
      }
    }
    uniq_label[static_cast<size_t>(pos)] = label;
    const ScoreResult score =
        output_oriented_score(ds, uniq, i, false, options.solver);
    ++lps;
    uniq_score(pos) = score.phi;
    lp_count += lps;
  };

  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, static_cast<int>(u));
  if (threads <= 1 || u < 32) {
    for (Index pos = 0; pos < u; ++pos) classify_one(pos);
  } else {
    std::atomic<Index> next{0};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (;;) {
            const Index pos = next.fetch_add(1);
            if (pos >= u) break;
            classify_one(pos);
          }
        } catch (...) {
          errors[static_cast<size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  ClassificationReport report;
  report.labels.resize(static_cast<size_t>(ds.n()));
  report.scores.resize(ds.n());
  report.lp_count = lp_count.load();
  std::vector<Index> pos_of(static_cast<size_t>(ds.n()), -1);
  for (Index pos = 0; pos < u; ++pos)
    pos_of[static_cast<size_t>(uniq[static_cast<size_t>(pos)])] = pos;
  for (Index i = 0; i < ds.n(); ++i) {
    const Index rep = groups.representative_of[static_cast<size_t>(i)];
    const Index pos = pos_of[static_cast<size_t>(rep)];
    Label label = uniq_label[static_cast<size_t>(pos)];
    // Duplicated points lie in each other's hull: never extreme.
    if (label == Label::extreme_efficient &&
        groups.group_size_of[static_cast<size_t>(rep)] > 1)
      label = Label::boundary_nonextreme;
    report.labels[static_cast<size_t>(i)] = label;
    report.scores(i) = uniq_score(pos);
    if (label == Label::extreme_efficient) report.frame.push_back(i);
    if (label != Label::interior) report.boundary.push_back(i);
  }
  report.density =
      static_cast<Real>(report.frame.size()) / static_cast<Real>(ds.n());
  return report;
}

}  // namespace dea
