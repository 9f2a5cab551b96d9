#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "detail.hpp"
#include "droopjr/rules.hpp"

namespace droopjr {

namespace {

// Small dense min-cost max-flow (successive shortest paths, SPFA). Costs are
// small non-negative integers, capacities are exact.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes) : head_(nodes, -1) {}

  int add_edge(int from, int to, long long cap, long long cost) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({to, head_[from], cap, cost});
    head_[from] = id;
    edges_.push_back({from, head_[to], 0, -cost});
    head_[to] = id + 1;
    return id;
  }

  long long flow_on(int edge_id) const { return edges_[edge_id ^ 1].cap; }

  // Returns (flow, cost).
  std::pair<long long, long long> run(int s, int t) {
    long long flow = 0, cost = 0;
    const long long inf = std::numeric_limits<long long>::max() / 4;
    const int n = static_cast<int>(head_.size());
    while (true) {
      std::vector<long long> dist(n, inf);
      std::vector<int> pre(n, -1);
      std::vector<bool> inq(n, false);
      std::deque<int> queue;
      dist[s] = 0;
      queue.push_back(s);
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        inq[u] = false;
        for (int id = head_[u]; id != -1; id = edges_[id].next) {
          const auto& ed = edges_[id];
          if (ed.cap > 0 && dist[u] + ed.cost < dist[ed.to]) {
            dist[ed.to] = dist[u] + ed.cost;
            pre[ed.to] = id;
            if (!inq[ed.to]) {
              inq[ed.to] = true;
              queue.push_back(ed.to);
            }
          }
        }
      }
      if (dist[t] >= inf) break;
      long long push = inf;
      for (int v = t; v != s;) {
        int id = pre[v];
        push = std::min(push, edges_[id].cap);
        v = edges_[id ^ 1].to;
      }
      for (int v = t; v != s;) {
        int id = pre[v];
        edges_[id].cap -= push;
        edges_[id ^ 1].cap += push;
        v = edges_[id ^ 1].to;
      }
      flow += push;
      cost += push * dist[t];
    }
    return {flow, cost};
  }

 private:
  struct Edge {
    int to, next;
    long long cap, cost;
  };
  std::vector<Edge> edges_;
  std::vector<int> head_;
};

struct SeatBounds {
  long long lo, hi;
  bool dummy;
};

std::vector<SeatBounds> seat_bounds(const Election& e, Quota q) {
  const long long n = e.n(), k = e.k();
  std::vector<SeatBounds> seats;
  if (q == Quota::Hare) {
    for (int j = 0; j < k; ++j) seats.push_back({n / k, (n + k - 1) / k, false});
  } else {
    for (int j = 0; j < k; ++j) seats.push_back({n / (k + 1), (n + k) / (k + 1), false});
    seats.push_back({n / (k + 1), n / (k + 1), true});
  }
  return seats;
}

}  // namespace

MonroeScore monroe_score(const Election& e, const std::vector<int>& committee, Quota q) {
  if (static_cast<int>(committee.size()) != e.k())
    throw std::invalid_argument("monroe_score: committee must have size k");
  const int n = e.n();
  auto seats = seat_bounds(e, q);
  const int num_seats = static_cast<int>(seats.size());

  // Nodes: 0 = source, 1..n voters, then seats, then sink, then the
  // super-source/sink pair handling capacity lower bounds.
  const int src = 0, voters0 = 1, seats0 = voters0 + n, sink = seats0 + num_seats;
  const int ss = sink + 1, tt = ss + 1;
  MinCostFlow flow(tt + 1);

  for (int i = 0; i < n; ++i) {
    // Every voter is assigned: lower bound 1 handled through ss/tt.
    flow.add_edge(ss, voters0 + i, 1, 0);
  }
  flow.add_edge(src, tt, n, 0);

  std::vector<std::vector<int>> voter_edge(n, std::vector<int>(num_seats, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < num_seats; ++j) {
      long long cost =
          !seats[j].dummy && e.ballot(i).test(committee[j]) ? 0 : 1;
      voter_edge[i][j] = flow.add_edge(voters0 + i, seats0 + j, 1, cost);
    }

  long long forced_total = 0;
  for (int j = 0; j < num_seats; ++j) {
    const auto& s = seats[j];
    if (s.lo > 0) {
      flow.add_edge(seats0 + j, tt, s.lo, 0);
      flow.add_edge(ss, sink, s.lo, 0);
      forced_total += s.lo;
    }
    if (s.hi > s.lo) flow.add_edge(seats0 + j, sink, s.hi - s.lo, 0);
  }
  flow.add_edge(sink, src, n, 0);  // close the circulation

  auto [value, cost] = flow.run(ss, tt);
  if (value != n + forced_total)
    throw std::logic_error("monroe_score: no valid assignment exists");

  MonroeScore out;
  out.score = n - cost;
  out.assignment.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < num_seats; ++j)
      if (flow.flow_on(voter_edge[i][j]) > 0)
        out.assignment[i] = seats[j].dummy ? -1 : committee[j];
  return out;
}

RuleOutcome monroe(const Election& e, Quota q, TieBreakPolicy /*tie*/) {
  if (detail::binomial_capped(e.m(), e.k(), 10'000'000) > 10'000'000)
    throw std::runtime_error("monroe: instance too large, C(m,k) exceeds 10^7");
  RuleOutcome out;
  long long best = -1;
  detail::for_each_combination(e.m(), e.k(), [&](const std::vector<int>& comb) {
    MonroeScore s = monroe_score(e, comb, q);
    if (s.score > best) {
      best = s.score;
      out.committee = comb;
      out.trace.assignment = std::move(s.assignment);
      out.trace.monroe_score = s.score;
    }
    return true;
  });
  return out;
}

RuleOutcome greedy_monroe(const Election& e, Quota q, TieBreakPolicy tie) {
  const int n = e.n(), k = e.k();
  const long long div = q == Quota::Hare ? k : k + 1;
  const long long lo = n / div;
  const long long extra_rounds = n - div * lo;  // rounds that take an extra voter

  RuleOutcome out;
  out.trace.assignment.assign(n, -1);
  std::vector<bool> active(n, true), in_w(e.m(), false);

  for (int t = 1; t <= k; ++t) {
    const long long round_size = t <= extra_rounds ? lo + 1 : lo;
    int best_count = -1;
    std::vector<int> tied;
    for (int c = 0; c < e.m(); ++c) {
      if (in_w[c]) continue;
      int cnt = 0;
      for (int i : e.approvers(c))
        if (active[i]) ++cnt;
      if (cnt > best_count) {
        best_count = cnt;
        tied = {c};
      } else if (cnt == best_count) {
        tied.push_back(c);
      }
    }
    int pick = tie.choose(tied);

    std::vector<int> approving, others;
    for (int i = 0; i < n; ++i) {
      if (!active[i]) continue;
      (e.ballot(i).test(pick) ? approving : others).push_back(i);
    }
    std::vector<int> assigned(approving.begin(),
                              approving.begin() +
                                  std::min<std::size_t>(approving.size(), round_size));
    if (static_cast<long long>(assigned.size()) < round_size) {
      auto filler = tie.choose_many(
          others, static_cast<int>(round_size - static_cast<long long>(assigned.size())));
      assigned.insert(assigned.end(), filler.begin(), filler.end());
    }
    for (int i : assigned) {
      active[i] = false;
      out.trace.assignment[i] = pick;
    }
    in_w[pick] = true;
    out.trace.selection_order.push_back(pick);
    out.committee.push_back(pick);
  }
  std::sort(out.committee.begin(), out.committee.end());
  out.trace.monroe_score = 0;
  for (int i = 0; i < n; ++i)
    if (out.trace.assignment[i] >= 0 && e.ballot(i).test(out.trace.assignment[i]))
      ++out.trace.monroe_score;
  return out;
}

}  // namespace droopjr
