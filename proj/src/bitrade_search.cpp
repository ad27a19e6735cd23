#include "starcode/bitrade_search.hpp"

#include <bit>
#include <chrono>
#include <stdexcept>
#include <utility>

#include "starcode/star_graph.hpp"

namespace starcode {

namespace {

constexpr std::uint8_t kNone = 1;
constexpr std::uint8_t kT0 = 2;
constexpr std::uint8_t kT1 = 4;
constexpr std::uint8_t kAll = kNone | kT0 | kT1;

inline bool decided(std::uint8_t d) { return std::popcount(d) == 1; }

// Decided members per side, undecided members, and how many of those could
// still join each side. Kept incrementally for every ball.
struct BallState {
  std::int16_t cnt0 = 0, cnt1 = 0;
  std::int16_t avail0 = 0, avail1 = 0;
  std::int16_t undecided = 0;
};

class Engine {
 public:
  Engine(int degree, double budget_seconds,
         const std::function<bool(const std::vector<Rank>&, const std::vector<Rank>&)>&
             on_solution)
      : _on_solution(on_solution) {
    const StarGraph graph(degree);
    _nv = static_cast<std::uint32_t>(graph.vertex_count());
    _deg = degree - 1;
    const std::vector<Rank> table = graph.adjacency_table();
    _adj.assign(table.begin(), table.end());

    // Breadth-first order from the identity, neighbors in generator order.
    _bfs_pos.assign(_nv, _nv);
    _bfs_order.reserve(_nv);
    _bfs_order.push_back(0);
    _bfs_pos[0] = 0;
    for (std::uint32_t head = 0; head < _bfs_order.size(); ++head) {
      const std::uint32_t v = _bfs_order[head];
      for (int k = 0; k < _deg; ++k) {
        const std::uint32_t u = _adj[static_cast<std::size_t>(v) * _deg + k];
        if (_bfs_pos[u] == _nv) {
          _bfs_pos[u] = static_cast<std::uint32_t>(_bfs_order.size());
          _bfs_order.push_back(u);
        }
      }
    }

    _domain.assign(_nv, kAll);
    _undecided = _nv;
    _in_queue.assign(_nv, 0);
    _balls.assign(_nv, BallState{static_cast<std::int16_t>(0),
                                 static_cast<std::int16_t>(0),
                                 static_cast<std::int16_t>(degree),
                                 static_cast<std::int16_t>(degree),
                                 static_cast<std::int16_t>(degree)});
    _unbalanced.assign(_nv, 0);

    if (budget_seconds > 0) {
      _has_deadline = true;
      _deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget_seconds));
    }
  }

  BitradeSearchStats run() {
    set_domain(0, kT0);  // pin the identity into T0
    if (propagate()) dfs(0);
    return _stats;
  }

 private:
  void push_ball(std::uint32_t b) {
    if (!_in_queue[b]) {
      _in_queue[b] = 1;
      _queue.push_back(b);
    }
  }

  void apply_ball_delta(std::uint32_t b, std::uint8_t old_d, std::uint8_t new_d) {
    BallState& s = _balls[b];
    if (decided(old_d)) {
      if (old_d == kT0) --s.cnt0;
      if (old_d == kT1) --s.cnt1;
    } else {
      --s.undecided;
      if (old_d & kT0) --s.avail0;
      if (old_d & kT1) --s.avail1;
    }
    if (decided(new_d)) {
      if (new_d == kT0) ++s.cnt0;
      if (new_d == kT1) ++s.cnt1;
    } else {
      ++s.undecided;
      if (new_d & kT0) ++s.avail0;
      if (new_d & kT1) ++s.avail1;
    }
    _unbalanced[b] = s.cnt0 != s.cnt1;
  }

  void update_balls(std::uint32_t v, std::uint8_t old_d, std::uint8_t new_d,
                    bool queue) {
    apply_ball_delta(v, old_d, new_d);
    if (queue) push_ball(v);
    const std::size_t base = static_cast<std::size_t>(v) * _deg;
    for (int k = 0; k < _deg; ++k) {
      const std::uint32_t b = _adj[base + k];
      apply_ball_delta(b, old_d, new_d);
      if (queue) push_ball(b);
    }
  }

  void set_domain(std::uint32_t v, std::uint8_t bits) {
    const std::uint8_t old_d = _domain[v];
    _trail.emplace_back(v, old_d);
    if (!decided(old_d) && decided(bits)) --_undecided;
    _domain[v] = bits;
    update_balls(v, old_d, bits, true);
  }

  // false on wipeout
  bool remove_bit(std::uint32_t v, std::uint8_t bit) {
    const std::uint8_t next = _domain[v] & static_cast<std::uint8_t>(~bit);
    if (next == _domain[v]) return true;
    if (next == 0) return false;
    set_domain(v, next);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (_trail.size() > mark) {
      const auto [v, old_d] = _trail.back();
      _trail.pop_back();
      const std::uint8_t cur = _domain[v];
      if (decided(cur) && !decided(old_d)) ++_undecided;
      _domain[v] = old_d;
      update_balls(v, cur, old_d, false);
    }
  }

  // Applies the counting rules to ball b using its cached state. Changed
  // member domains re-queue every affected ball, so iterating to the
  // fixpoint is the queue's job.
  bool reduce_ball(std::uint32_t b) {
    const BallState s = _balls[b];
    if (s.cnt0 > 1 || s.cnt1 > 1) return false;
    if (s.cnt0 > s.cnt1 + s.avail1 || s.cnt1 > s.cnt0 + s.avail0) return false;

    const std::size_t base = static_cast<std::size_t>(b) * _deg;
    const auto members = [this, b, base](int i) {
      return i == 0 ? b : _adj[base + (i - 1)];
    };

    std::uint8_t strip = 0;  // sides no undecided member may join anymore
    if (s.cnt0 == 1) strip |= kT0;
    if (s.cnt1 == 1) strip |= kT1;
    if (s.cnt0 == 0 && s.cnt1 == 0) {
      // A side that can never appear forces the ball to stay uncovered.
      if (s.avail0 == 0 && s.avail1 > 0) strip |= kT1;
      if (s.avail1 == 0 && s.avail0 > 0) strip |= kT0;
    }
    if (strip != 0) {
      for (int i = 0; i <= _deg; ++i) {
        const std::uint32_t m = members(i);
        if (!decided(_domain[m]) && !remove_bit(m, strip)) return false;
      }
    }

    // A lone candidate for the missing side is forced.
    const BallState& now = _balls[b];
    std::uint8_t forced = 0;
    if (now.cnt0 == 1 && now.cnt1 == 0 && now.avail1 == 1) forced = kT1;
    if (now.cnt1 == 1 && now.cnt0 == 0 && now.avail0 == 1) forced = kT0;
    if (forced != 0) {
      for (int i = 0; i <= _deg; ++i) {
        const std::uint32_t m = members(i);
        if (!decided(_domain[m]) && (_domain[m] & forced)) {
          set_domain(m, forced);
          break;
        }
      }
    }
    return true;
  }

  bool propagate() {
    std::size_t head = 0;
    bool ok = true;
    while (head < _queue.size()) {
      const std::uint32_t b = _queue[head++];
      _in_queue[b] = 0;
      if (!reduce_ball(b)) {
        ok = false;
        break;
      }
    }
    for (std::size_t i = head; i < _queue.size(); ++i) _in_queue[_queue[i]] = 0;
    _queue.clear();
    return ok;
  }

  bool out_of_budget() {
    return _has_deadline && (_stats.nodes & 1023) == 1 &&
           std::chrono::steady_clock::now() >= _deadline;
  }

  void emit_solution() {
    std::vector<Rank> t0, t1;
    for (std::uint32_t v = 0; v < _nv; ++v) {
      if (_domain[v] == kT0) t0.push_back(v);
      if (_domain[v] == kT1) t1.push_back(v);
    }
    ++_stats.solutions;
    if (!_on_solution(t0, t1)) {
      _stopped = true;
      _stats.complete = false;
    }
  }

  // first_hint: breadth-first position below which everything is decided.
  // Along one branch decisions only accumulate, so the hint moves forward.
  void dfs(std::uint32_t first_hint) {
    if (_stopped) return;
    if (_undecided == 0) {
      emit_solution();
      return;
    }

    // Most constrained unbalanced ball: fewest undecided members, ties in
    // breadth-first order.
    std::uint32_t ball = _nv;
    std::uint8_t needed = 0;
    int best_und = 0;
    for (std::uint32_t b = 0; b < _nv; ++b) {
      if (!_unbalanced[b]) continue;
      const BallState& s = _balls[b];
      if (ball == _nv || s.undecided < best_und ||
          (s.undecided == best_und && _bfs_pos[b] < _bfs_pos[ball])) {
        ball = b;
        best_und = s.undecided;
        needed = s.cnt0 > s.cnt1 ? kT1 : kT0;
      }
    }

    if (ball != _nv) {
      // The earliest candidate that could supply the missing side.
      std::uint32_t v = _nv;
      const auto consider = [this, &v, needed](std::uint32_t m) {
        if (!decided(_domain[m]) && (_domain[m] & needed) &&
            (v == _nv || _bfs_pos[m] < _bfs_pos[v]))
          v = m;
      };
      consider(ball);
      const std::size_t base = static_cast<std::size_t>(ball) * _deg;
      for (int k = 0; k < _deg; ++k) consider(_adj[base + k]);

      branch(v, needed, true, first_hint);
      if (_stopped) return;
      branch(v, needed, false, first_hint);
      return;
    }

    // No unbalanced ball: take the first undecided vertex and try all of
    // its states.
    while (first_hint < _nv && decided(_domain[_bfs_order[first_hint]]))
      ++first_hint;
    const std::uint32_t v = _bfs_order[first_hint];
    for (std::uint8_t bit : {kT0, kT1, kNone}) {
      if (!(_domain[v] & bit)) continue;
      const std::size_t mark = _trail.size();
      ++_stats.nodes;
      if (out_of_budget()) {
        _stopped = true;
        _stats.complete = false;
        return;
      }
      set_domain(v, bit);
      if (propagate()) dfs(first_hint);
      undo_to(mark);
      if (_stopped) return;
    }
  }

  void branch(std::uint32_t v, std::uint8_t bit, bool assign,
              std::uint32_t first_hint) {
    const std::size_t mark = _trail.size();
    ++_stats.nodes;
    if (out_of_budget()) {
      _stopped = true;
      _stats.complete = false;
      return;
    }
    bool feasible = assign ? (set_domain(v, bit), true) : remove_bit(v, bit);
    if (feasible && propagate()) dfs(first_hint);
    undo_to(mark);
  }

  std::uint32_t _nv = 0;
  int _deg = 0;
  std::vector<std::uint32_t> _adj;
  std::vector<std::uint32_t> _bfs_pos, _bfs_order;
  std::vector<std::uint8_t> _domain;
  std::uint32_t _undecided = 0;
  std::vector<BallState> _balls;
  std::vector<std::uint8_t> _unbalanced;
  std::vector<std::pair<std::uint32_t, std::uint8_t>> _trail;
  std::vector<std::uint32_t> _queue;
  std::vector<std::uint8_t> _in_queue;
  const std::function<bool(const std::vector<Rank>&, const std::vector<Rank>&)>&
      _on_solution;
  BitradeSearchStats _stats;
  bool _stopped = false;
  bool _has_deadline = false;
  std::chrono::steady_clock::time_point _deadline;
};

}  // namespace

BitradeSearchStats enumerate_bitrade_assignments(
    int degree, double budget_seconds,
    const std::function<bool(const std::vector<Rank>&, const std::vector<Rank>&)>&
        on_solution) {
  if (degree < 3 || degree > 6)
    throw std::invalid_argument("bitrade search: degree must be in 3..6");
  Engine engine(degree, budget_seconds, on_solution);
  return engine.run();
}

}  // namespace starcode
