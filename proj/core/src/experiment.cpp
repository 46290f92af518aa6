#include "rigsep/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "rigsep/errors.hpp"
#include "rigsep/flow/spread_lp.hpp"
#include "rigsep/random.hpp"

namespace rigsep {

ExperimentRecord separate(const Instance& inst, SeparatorStrategy strategy, const BalancedOptions& opt,
                          BalancedSeparatorResult* result) {
  ExperimentRecord rec;
  rec.generator = inst.kind;
  rec.size = inst.size;
  rec.seed = inst.seed;
  rec.method = to_string(strategy);
  rec.n = inst.graph.n();
  rec.m = inst.graph.m();
  rec.params["h"] = opt.h;
  const auto start = std::chrono::steady_clock::now();
  BalancedSeparatorResult res = balanced_separator(inst.graph, strategy, {}, opt);
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!is_balanced(inst.graph, res.S)) throw InvariantViolation("separate: separator is not 2/3-balanced");
  for (const auto& c : res.components)
    for (Vertex v : c)
      if (set_contains(res.S, v)) throw InvariantViolation("separate: a component meets the separator");
  rec.separator_size = res.S.size();
  rec.balance = res.total > 0.0 ? res.largest / res.total : 0.0;
  if (strategy == SeparatorStrategy::LpRounding && inst.graph.n() > 0 && is_connected(inst.graph))
    rec.lp_value = cspread_lp(inst.graph, 1, opt.lp).value;
  if (result) *result = std::move(res);
  return rec;
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t k = xs.size() / 2;
  return xs.size() % 2 ? xs[k] : 0.5 * (xs[k - 1] + xs[k]);
}

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InputError("fit_loglog: length mismatch");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0.0 && y[i] > 0.0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  LogLogFit fit;
  const double k = static_cast<double>(lx.size());
  if (lx.size() < 2) return fit;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i] / k;
    my += ly[i] / k;
  }
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx <= 1e-12) return fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - *fit.exponent * mx;
  fit.r_squared = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
  return fit;
}

ScalingStudy scaling_study(const std::string& kind, const std::vector<int>& sizes, int trials, std::uint64_t seed,
                           SeparatorStrategy strategy, const BalancedOptions& opt) {
  if (trials < 1) throw InputError("scaling_study: need at least one trial");
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw InputError("scaling_study: sizes must be ascending");
  ScalingStudy study;
  std::vector<double> xm, xn, ys;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    ScalingPoint pt;
    pt.size = sizes[si];
    pt.trials.resize(static_cast<std::size_t>(trials));
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
      const auto s = mix_seed(seed, {static_cast<std::uint64_t>(si), static_cast<std::uint64_t>(t)});
      const Instance inst = generate(kind, sizes[si], s);
      BalancedOptions o = opt;
      o.seed = mix_seed(s, 0x5e9);
      pt.trials[t] = separate(inst, strategy, o);
    });
    std::vector<double> ms, ns, ss;
    for (const auto& r : pt.trials) {
      ms.push_back(static_cast<double>(r.m));
      ns.push_back(r.n);
      ss.push_back(static_cast<double>(r.separator_size));
    }
    pt.median_m = median(ms);
    pt.median_n = median(ns);
    pt.median_separator = median(ss);
    xm.push_back(pt.median_m);
    xn.push_back(pt.median_n);
    ys.push_back(pt.median_separator);
    study.points.push_back(std::move(pt));
  }
  study.fit_vs_m = fit_loglog(xm, ys);
  study.fit_vs_n = fit_loglog(xn, ys);
  return study;
}

std::string scaling_csv(const ScalingStudy& study, bool with_time) {
  std::ostringstream out;
  out << "generator,size,seed,method,n,m,separator,balance";
  if (with_time) out << ",seconds";
  out << '\n';
  out.precision(10);
  for (const auto& pt : study.points)
    for (const auto& r : pt.trials) {
      out << r.generator << ',' << r.size << ',' << r.seed << ',' << r.method << ',' << r.n << ',' << r.m << ','
          << r.separator_size << ',' << r.balance;
      if (with_time) out << ',' << r.wall_seconds;
      out << '\n';
    }
  return out.str();
}

}  // namespace rigsep
