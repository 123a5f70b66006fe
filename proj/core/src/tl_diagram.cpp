#include "skeinrep/tl_diagram.hpp"

#include <algorithm>
#include <string>

namespace skeinrep {

TlDiagram TlDiagram::identity(int n) {
  TlDiagram d;
  d.bottom = n;
  d.top = n;
  d.match.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    d.match[i] = n + i;
    d.match[n + i] = i;
  }
  return d;
}

TlDiagram TlDiagram::cup(int c) {
  TlDiagram d;
  d.bottom = 0;
  d.top = 2 * c;
  d.match.resize(2 * c);
  for (int i = 0; i < c; ++i) {
    d.match[i] = 2 * c - 1 - i;
    d.match[2 * c - 1 - i] = i;
  }
  return d;
}

TlDiagram TlDiagram::cap(int c) { return cup(c).transpose(); }

TlDiagram TlDiagram::generator(int n, int i) {
  if (i < 0 || i > n - 2) throw usage_error("TL generator index out of range");
  TlDiagram d = identity(n);
  d.match[i] = i + 1;
  d.match[i + 1] = i;
  d.match[n + i] = n + i + 1;
  d.match[n + i + 1] = n + i;
  return d;
}

TlDiagram TlDiagram::triad_up(int a, int b, int c) {
  const int ii = b + c - a, jj = a + b - c, kk = a + c - b;
  if (ii < 0 || jj < 0 || kk < 0 || ii % 2 || jj % 2 || kk % 2)
    throw usage_error("triad (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ") is not realizable");
  const int i = ii / 2, j = jj / 2, k = kk / 2;
  TlDiagram d;
  d.bottom = a;
  d.top = b + c;
  d.match.resize(a + b + c);
  auto pair = [&d](int x, int y) {
    d.match[x] = y;
    d.match[y] = x;
  };
  // left leg: j through-strands, then i arcs to the right leg
  for (int t = 0; t < j; ++t) pair(t, a + t);
  for (int t = 0; t < i; ++t) pair(a + j + t, a + b + (i - 1 - t));
  // right leg: k through-strands at its right end
  for (int t = 0; t < k; ++t) pair(j + t, a + b + i + t);
  return d;
}

TlDiagram TlDiagram::triad_down(int b, int c, int a) { return triad_up(a, b, c).transpose(); }

TlDiagram TlDiagram::transpose() const {
  TlDiagram d;
  d.bottom = top;
  d.top = bottom;
  d.match.resize(match.size());
  auto relabel = [this](int idx) {
    return idx < bottom ? top + idx : idx - bottom;
  };
  for (int idx = 0; idx < static_cast<int>(match.size()); ++idx)
    d.match[relabel(idx)] = relabel(match[idx]);
  return d;
}

bool TlDiagram::noncrossing() const {
  const int n = bottom + top;
  if (static_cast<int>(match.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (match[i] < 0 || match[i] >= n || match[i] == i || match[match[i]] != i) return false;
  // circle order: bottom left-to-right, then top right-to-left
  std::vector<int> circle(n);
  for (int i = 0; i < n; ++i)
    circle[i < bottom ? i : bottom + (top - 1 - (i - bottom))] = i;
  std::vector<int> pos(n);
  for (int s = 0; s < n; ++s) pos[circle[s]] = s;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    const int i = circle[s];
    if (pos[match[i]] > s) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != match[i]) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

std::pair<int, TlDiagram> compose_diagrams(const TlDiagram& lower, const TlDiagram& upper) {
  if (lower.top != upper.bottom) throw usage_error("diagram composition arity mismatch");
  const int B = lower.bottom, M = lower.top, T = upper.top;

  TlDiagram out;
  out.bottom = B;
  out.top = T;
  out.match.assign(B + T, -1);

  std::vector<char> seen(M, 0);

  // Walk from a boundary point to its partner. State: a point of one of the
  // two diagrams whose arc is followed next; crossings through the middle
  // boundary are marked in `seen`.
  auto resolve = [&](int side_upper, int start) {
    int side = side_upper;
    int cur = start;
    while (true) {
      if (!side) {
        int nxt = lower.match[cur];
        if (nxt < B) return std::pair<int, int>(0, nxt);  // landed on final bottom
        int m = nxt - B;
        seen[m] = 1;
        side = 1;
        cur = m;  // continue from the upper diagram's bottom point m
      } else {
        int nxt = upper.match[cur];
        if (nxt >= M) return std::pair<int, int>(1, nxt - M);  // landed on final top
        seen[nxt] = 1;
        side = 0;
        cur = B + nxt;  // continue from the lower diagram's top point nxt
      }
    }
  };

  auto final_index = [&](int is_upper, int idx) { return is_upper ? B + idx : idx; };

  for (int i = 0; i < B; ++i) {
    if (out.match[i] != -1) continue;
    auto [up, j] = resolve(0, i);
    out.match[i] = final_index(up, j);
    out.match[final_index(up, j)] = i;
  }
  for (int i = 0; i < T; ++i) {
    if (out.match[B + i] != -1) continue;
    auto [up, j] = resolve(1, M + i);
    out.match[B + i] = final_index(up, j);
    out.match[final_index(up, j)] = B + i;
  }

  int loops = 0;
  for (int m = 0; m < M; ++m) {
    if (seen[m]) continue;
    ++loops;
    int cur = m;
    while (!seen[cur]) {
      seen[cur] = 1;
      int viaUpper = upper.match[cur];        // middle index (loop stays interior)
      seen[viaUpper] = 1;
      cur = lower.match[B + viaUpper] - B;    // back down through the lower diagram
    }
  }
  return {loops, out};
}

TlDiagram tensor_diagrams(const TlDiagram& a, const TlDiagram& b) {
  TlDiagram d;
  d.bottom = a.bottom + b.bottom;
  d.top = a.top + b.top;
  d.match.resize(d.bottom + d.top);
  auto mapA = [&](int i) { return i < a.bottom ? i : d.bottom + (i - a.bottom); };
  auto mapB = [&](int i) {
    return i < b.bottom ? a.bottom + i : d.bottom + a.top + (i - b.bottom);
  };
  for (int i = 0; i < a.bottom + a.top; ++i) d.match[mapA(i)] = mapA(a.match[i]);
  for (int i = 0; i < b.bottom + b.top; ++i) d.match[mapB(i)] = mapB(b.match[i]);
  return d;
}

TlElement TlElement::from_diagram(const CycloContextPtr& ctx, const TlDiagram& d) {
  TlElement e(ctx, d.bottom, d.top);
  e.add_term(d, CycloNum::one(ctx));
  return e;
}

void TlElement::add_term(const TlDiagram& d, const CycloNum& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TlElement TlElement::operator+(const TlElement& o) const {
  if (bottom_ != o.bottom_ || top_ != o.top_)
    throw usage_error("TL element shape mismatch in addition");
  TlElement out = *this;
  for (const auto& [d, c] : o.terms_) out.add_term(d, c);
  return out;
}

TlElement TlElement::operator-(const TlElement& o) const { return *this + o.scaled(-CycloNum::one(ctx_)); }

TlElement TlElement::scaled(const CycloNum& c) const {
  TlElement out(ctx_, bottom_, top_);
  if (c.is_zero()) return out;
  for (const auto& [d, x] : terms_) out.terms_.emplace(d, x * c);
  return out;
}

CycloNum TlElement::scalar_value() const {
  if (bottom_ != 0 || top_ != 0) throw usage_error("scalar_value on an open TL element");
  if (terms_.empty()) return CycloNum::zero(ctx_);
  return terms_.begin()->second;
}

bool TlElement::operator==(const TlElement& o) const {
  return bottom_ == o.bottom_ && top_ == o.top_ && terms_ == o.terms_;
}

TlElement compose(const TlElement& lower, const TlElement& upper) {
  if (lower.top() != upper.bottom()) throw usage_error("TL element composition arity mismatch");
  const CycloContextPtr& ctx = lower.context();
  const CycloNum delta = -(CycloNum::a_power(ctx, 2) + CycloNum::a_power(ctx, -2));

  // small cache of delta powers; loops rarely exceed the strand count
  std::vector<CycloNum> dpow{CycloNum::one(ctx)};
  auto delta_pow = [&](int k) {
    while (static_cast<int>(dpow.size()) <= k) dpow.push_back(dpow.back() * delta);
    return dpow[k];
  };

  TlElement out(ctx, lower.bottom(), upper.top());
  for (const auto& [dl, cl] : lower.terms()) {
    for (const auto& [du, cu] : upper.terms()) {
      auto [loops, d] = compose_diagrams(dl, du);
      CycloNum coeff = cl * cu;
      if (loops > 0) coeff *= delta_pow(loops);
      out.add_term(d, coeff);
    }
  }
  return out;
}

TlElement tensor(const TlElement& a, const TlElement& b) {
  TlElement out(a.context(), a.bottom() + b.bottom(), a.top() + b.top());
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) out.add_term(tensor_diagrams(da, db), ca * cb);
  return out;
}

TlElement JonesWenzlCache::get(int n) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
  }
  TlElement f = jones_wenzl(ctx_, n, nullptr);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(n, f);
  return f;
}

TlElement jones_wenzl(const CycloContextPtr& ctx, int n, JonesWenzlCache* cache) {
  const int p = ctx->level();
  if (n < 0 || n > p / 2 - 1)
    throw usage_error("jones_wenzl(" + std::to_string(n) + "): quantum integer [" +
                      std::to_string(p / 2) + "] vanishes at level p=" + std::to_string(p));
  if (cache) return cache->get(n);
  auto loop_value = [&ctx](int k) {  // (-1)^k [k+1], the closure of f_k
    CycloNum v = quantum_int(ctx, k + 1);
    return k % 2 ? -v : v;
  };
  TlElement f = TlElement::from_diagram(ctx, TlDiagram::identity(0));
  for (int m = 1; m <= n; ++m) {
    // extend f_{m-1} by one strand
    TlElement ext = tensor(f, TlElement::from_diagram(ctx, TlDiagram::identity(1)));
    if (m == 1) {
      f = ext;
      continue;
    }
    TlElement e = TlElement::from_diagram(ctx, TlDiagram::generator(m, m - 2));
    CycloNum ratio = loop_value(m - 2) / loop_value(m - 1);
    f = ext - compose(compose(ext, e), ext).scaled(ratio);
  }
  return f;
}

}  // namespace skeinrep
