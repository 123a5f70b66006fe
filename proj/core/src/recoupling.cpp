#include "skeinrep/recoupling.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace skeinrep {

RecouplingContext::RecouplingContext(int p)
    : p_(p), ctx_(CycloContext::make(p)), jw_(ctx_) {}

void RecouplingContext::check_color(int c, const char* what) const {
  if (c < 0 || c > max_color())
    throw usage_error(std::string(what) + ": color " + std::to_string(c) +
                      " outside [0, p/2-2] at level p=" + std::to_string(p_));
}

CycloNum RecouplingContext::delta(int c) {
  check_color(c, "delta");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = delta_memo_.find(c);
  if (it != delta_memo_.end()) return it->second;
  CycloNum v = quantum_int(ctx_, c + 1);
  if (c % 2) v = -v;
  delta_memo_.emplace(c, v);
  return v;
}

CycloNum RecouplingContext::theta(int a, int b, int c) {
  if (!is_admissible(a, b, c))
    throw usage_error("theta(" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ") is inadmissible at level p=" + std::to_string(p_));
  std::lock_guard<std::mutex> lock(mu_);
  std::array<int, 3> key{a, b, c};
  auto it = theta_memo_.find(key);
  if (it != theta_memo_.end()) return it->second;
  const int i = (b + c - a) / 2, j = (a + c - b) / 2, k = (a + b - c) / 2;
  CycloNum v = quantum_factorial(ctx_, i + j + k + 1) * quantum_factorial(ctx_, i) *
               quantum_factorial(ctx_, j) * quantum_factorial(ctx_, k) /
               (quantum_factorial(ctx_, i + j) * quantum_factorial(ctx_, j + k) *
                quantum_factorial(ctx_, i + k));
  if ((i + j + k) % 2) v = -v;
  theta_memo_.emplace(key, v);
  return v;
}

CycloNum RecouplingContext::tet(const ColorSix& s) {
  for (const auto& [x, y, z] : {std::array<int, 3>{s.a, s.b, s.e}, {s.c, s.d, s.e},
                                {s.a, s.c, s.f}, {s.b, s.d, s.f}})
    if (!is_admissible(x, y, z))
      throw usage_error("tet vertex (" + std::to_string(x) + "," + std::to_string(y) + "," +
                        std::to_string(z) + ") is inadmissible at level p=" +
                        std::to_string(p_));
  std::lock_guard<std::mutex> lock(mu_);
  std::array<int, 6> key{s.a, s.b, s.e, s.c, s.d, s.f};
  auto it = tet_memo_.find(key);
  if (it != tet_memo_.end()) return it->second;

  const std::array<int, 4> av{(s.a + s.b + s.e) / 2, (s.c + s.d + s.e) / 2,
                              (s.a + s.c + s.f) / 2, (s.b + s.d + s.f) / 2};
  const std::array<int, 3> bv{(s.a + s.b + s.c + s.d) / 2, (s.a + s.d + s.e + s.f) / 2,
                              (s.b + s.c + s.e + s.f) / 2};
  const int lo = *std::max_element(av.begin(), av.end());
  const int hi = *std::min_element(bv.begin(), bv.end());

  CycloNum interior = CycloNum::one(ctx_);
  for (int bj : bv)
    for (int ai : av) interior *= quantum_factorial(ctx_, bj - ai);
  CycloNum edges = quantum_factorial(ctx_, s.a) * quantum_factorial(ctx_, s.b) *
                   quantum_factorial(ctx_, s.e) * quantum_factorial(ctx_, s.c) *
                   quantum_factorial(ctx_, s.d) * quantum_factorial(ctx_, s.f);

  CycloNum sum = CycloNum::zero(ctx_);
  for (int t = lo; t <= hi; ++t) {
    CycloNum den = CycloNum::one(ctx_);
    for (int ai : av) den *= quantum_factorial(ctx_, t - ai);
    for (int bj : bv) den *= quantum_factorial(ctx_, bj - t);
    CycloNum term = quantum_factorial(ctx_, t + 1) / den;
    if (t % 2) term = -term;
    sum += term;
  }
  CycloNum v = interior * sum / edges;
  tet_memo_.emplace(key, v);
  return v;
}

CycloNum RecouplingContext::sixj(const ColorSix& s) {
  return tet(s) * delta(s.f) / (theta(s.a, s.c, s.f) * theta(s.b, s.d, s.f));
}

CycloNum RecouplingContext::twist(int c) {
  check_color(c, "twist");
  CycloNum v = CycloNum::a_power(ctx_, static_cast<long>(c) * c + 2L * c);
  if (c % 2) v = -v;
  return v;
}

CycloNum RecouplingContext::curve_eigenvalue(int c) {
  check_color(c, "curve_eigenvalue");
  return -(CycloNum::a_power(ctx_, 2L * c + 2) + CycloNum::a_power(ctx_, -2L * c - 2));
}

std::vector<CacheEntry> RecouplingContext::dump_cache() {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<CacheEntry> out;
  for (const auto& [c, v] : delta_memo_) out.push_back({"delta", {c}, v});
  for (const auto& [k, v] : theta_memo_) out.push_back({"theta", {k[0], k[1], k[2]}, v});
  for (const auto& [k, v] : tet_memo_)
    out.push_back({"tet", {k[0], k[1], k[2], k[3], k[4], k[5]}, v});
  return out;
}

void RecouplingContext::preload(const std::vector<CacheEntry>& entries) {
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& e : entries) {
    if (e.kind == "delta" && e.labels.size() == 1) {
      delta_memo_.emplace(e.labels[0], e.value);
    } else if (e.kind == "theta" && e.labels.size() == 3) {
      theta_memo_.emplace(std::array<int, 3>{e.labels[0], e.labels[1], e.labels[2]}, e.value);
    } else if (e.kind == "tet" && e.labels.size() == 6) {
      tet_memo_.emplace(std::array<int, 6>{e.labels[0], e.labels[1], e.labels[2], e.labels[3],
                                           e.labels[4], e.labels[5]},
                        e.value);
    } else {
      throw usage_error("unrecognized recoupling cache entry kind \"" + e.kind + "\"");
    }
  }
}

namespace {

// Oracle theta with preconditions suppressed: 0 when the raw trivalent
// diagram does not exist, the bracket value otherwise. Defined for colors
// up to p/2 - 1.
CycloNum oracle_theta_unchecked(RecouplingContext& rc, int a, int b, int c) {
  if (!triad_realizable(a, b, c)) return CycloNum::zero(rc.cyclo());
  return evaluate_network(rc.cyclo(), theta_network(a, b, c, rc.level(), false),
                          &rc.jw_cache());
}

}  // namespace

std::vector<GateEntry> validate_recoupling(RecouplingContext& rc, int max_color, int threads) {
  const int p = rc.level();
  const int cmax = std::min(max_color, rc.max_color());
  const int oracle_max = std::min(max_color, p / 2 - 1);

  std::vector<GateEntry> jobs;

  for (int c = 0; c <= cmax; ++c) jobs.push_back({"delta", {c}, false, ""});
  for (int a = 0; a <= cmax; ++a)
    for (int b = 0; b <= cmax; ++b)
      for (int c = 0; c <= cmax; ++c)
        if (rc.is_admissible(a, b, c)) jobs.push_back({"theta", {a, b, c}, false, ""});
  for (int a = 0; a <= oracle_max; ++a)
    for (int b = 0; b <= oracle_max; ++b)
      for (int c = 0; c <= oracle_max; ++c)
        jobs.push_back({"admissible", {a, b, c}, false, ""});
  for (int A = 0; A <= cmax; ++A)
    for (int B = 0; B <= cmax; ++B)
      for (int E = 0; E <= cmax; ++E)
        for (int C = 0; C <= cmax; ++C)
          for (int D = 0; D <= cmax; ++D)
            for (int F = 0; F <= cmax; ++F)
              if (rc.is_admissible(A, B, E) && rc.is_admissible(C, D, E) &&
                  rc.is_admissible(A, C, F) && rc.is_admissible(B, D, F))
                jobs.push_back({"tet", {A, B, E, C, D, F}, false, ""});

  auto run_one = [&rc](GateEntry& e) {
    const auto& ctx = rc.cyclo();
    const auto& l = e.labels;
    if (e.kind == "delta") {
      CycloNum oracle =
          evaluate_network(ctx, loop_network(l[0], rc.level()), &rc.jw_cache());
      e.pass = (oracle == rc.delta(l[0]));
      if (!e.pass) e.detail = "closed " + rc.delta(l[0]).to_string() + " vs oracle " + oracle.to_string();
    } else if (e.kind == "theta") {
      CycloNum oracle =
          evaluate_network(ctx, theta_network(l[0], l[1], l[2], rc.level()), &rc.jw_cache());
      e.pass = (oracle == rc.theta(l[0], l[1], l[2]));
      if (!e.pass)
        e.detail = "closed " + rc.theta(l[0], l[1], l[2]).to_string() + " vs oracle " +
                   oracle.to_string();
    } else if (e.kind == "admissible") {
      CycloNum oracle = oracle_theta_unchecked(rc, l[0], l[1], l[2]);
      e.pass = (rc.is_admissible(l[0], l[1], l[2]) == !oracle.is_zero());
      if (!e.pass) e.detail = "predicate disagrees with oracle theta";
    } else {
      ColorSix s{l[0], l[1], l[2], l[3], l[4], l[5]};
      CycloNum oracle = evaluate_network(
          ctx, tet_network(l[0], l[1], l[2], l[3], l[4], l[5], rc.level()), &rc.jw_cache());
      e.pass = (oracle == rc.tet(s));
      if (!e.pass) e.detail = "closed " + rc.tet(s).to_string() + " vs oracle " + oracle.to_string();
    }
  };

  if (threads <= 1) {
    for (auto& e : jobs) run_one(e);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= jobs.size()) break;
          run_one(jobs[i]);
        }
      });
    for (auto& th : pool) th.join();
  }
  return jobs;
}

}  // namespace skeinrep
