#include "gts/progen.hpp"

#include <utility>
#include <vector>

#include "gts/rng.hpp"

namespace gts {

namespace {

struct Binding {
  std::string name;
  SurfaceTypePtr ty;
};

class ProgramGen {
 public:
  ProgramGen(std::uint64_t seed, int budget) : rng_(seed), remaining_(budget) {}

  SurfaceExprPtr top() {
    if (remaining_ <= 2) return s_int(static_cast<std::int64_t>(rng_.below(20)));
    SurfaceTypePtr goal;
    double r = rng_.next_double();
    if (r < 0.6)
      goal = ut_int();
    else if (r < 0.8)
      goal = ut_dyn();
    else
      goal = rand_type(2);
    return gen(goal).first;
  }

 private:
  // Annotation types: each constructor node is ★ with probability 1/2.
  SurfaceTypePtr rand_type(int depth) {
    if (rng_.chance(0.5)) return ut_dyn();
    if (depth <= 0) return ut_int();
    double r = rng_.next_double();
    if (r < 0.5) return ut_int();
    if (r < 0.75) return ut_ref(rand_type(depth - 1));
    return ut_fun(rand_type(depth - 1), rand_type(depth - 1));
  }

  std::vector<const Binding*> candidates(const SurfaceTypePtr& goal) const {
    std::vector<const Binding*> out;
    for (const Binding& b : env_)
      if (consistent(b.ty, goal)) out.push_back(&b);
    return out;
  }

  std::string fresh_name() { return "x" + std::to_string(name_counter_++); }

  // Smallest term of a type consistent with the goal.
  std::pair<SurfaceExprPtr, SurfaceTypePtr> terminal(const SurfaceTypePtr& goal) {
    switch (goal->kind()) {
      case SurfaceType::Kind::Dyn:
      case SurfaceType::Kind::Int: {
        --remaining_;
        auto cand = candidates(goal);
        if (!cand.empty() && rng_.chance(0.5)) {
          const Binding* b = cand[rng_.below(cand.size())];
          return {s_var(b->name), b->ty};
        }
        return {s_int(static_cast<std::int64_t>(rng_.below(20))), ut_int()};
      }
      case SurfaceType::Kind::Ref: {
        --remaining_;
        auto [init, ty] = terminal(goal->content());
        return {s_ref(goal->content(), std::move(init)), goal};
      }
      case SurfaceType::Kind::Fun: {
        --remaining_;
        std::string x = fresh_name();
        env_.push_back({x, goal->dom()});
        auto [body, ty] = terminal(goal->cod());
        env_.pop_back();
        return {s_lam(std::move(x), goal->dom(), goal->cod(), std::move(body)), goal};
      }
    }
    return {s_int(0), ut_int()};
  }

  // Nodes needed to close out a term of the goal type.
  static int terminal_cost(const SurfaceTypePtr& goal) {
    switch (goal->kind()) {
      case SurfaceType::Kind::Ref: return 1 + terminal_cost(goal->content());
      case SurfaceType::Kind::Fun: return 1 + terminal_cost(goal->cod());
      default: return 1;
    }
  }

  std::pair<SurfaceExprPtr, SurfaceTypePtr> gen(const SurfaceTypePtr& goal) {
    if (remaining_ <= terminal_cost(goal) + 2) return terminal(goal);

    enum class P { Var, Lit, Add, Lam, App, RefNew, Deref, Assign };
    std::vector<std::pair<P, int>> weighted;
    auto cand = candidates(goal);
    bool intish = goal->is_dyn() || goal->kind() == SurfaceType::Kind::Int;

    if (!cand.empty()) weighted.push_back({P::Var, 4});
    if (intish) {
      weighted.push_back({P::Lit, 1});
      weighted.push_back({P::Add, 4});
      weighted.push_back({P::Assign, 1});
    }
    if (goal->is_dyn() || goal->kind() == SurfaceType::Kind::Fun)
      weighted.push_back({P::Lam, goal->kind() == SurfaceType::Kind::Fun ? 4 : 2});
    if (goal->is_dyn() || goal->kind() == SurfaceType::Kind::Ref)
      weighted.push_back({P::RefNew, goal->kind() == SurfaceType::Kind::Ref ? 4 : 1});
    weighted.push_back({P::App, 4});
    weighted.push_back({P::Deref, 1});

    int total = 0;
    for (auto& [p, w] : weighted) total += w;
    int pick = static_cast<int>(rng_.below(static_cast<std::uint64_t>(total)));
    P chosen = P::Lit;
    for (auto& [p, w] : weighted) {
      if (pick < w) {
        chosen = p;
        break;
      }
      pick -= w;
    }

    switch (chosen) {
      case P::Var: {
        --remaining_;
        const Binding* b = cand[rng_.below(cand.size())];
        return {s_var(b->name), b->ty};
      }
      case P::Lit: {
        --remaining_;
        return {s_int(static_cast<std::int64_t>(rng_.below(20))), ut_int()};
      }
      case P::Add: {
        --remaining_;
        auto [l, lt] = gen(ut_int());
        auto [r, rt] = gen(ut_int());
        return {s_add(std::move(l), std::move(r)), ut_int()};
      }
      case P::Lam: {
        --remaining_;
        SurfaceTypePtr pty, rty;
        if (goal->kind() == SurfaceType::Kind::Fun) {
          pty = goal->dom();
          rty = goal->cod();
        } else {
          pty = rand_type(2);
          rty = rand_type(2);
        }
        std::string x = fresh_name();
        env_.push_back({x, pty});
        auto [body, bt] = gen(rty);
        env_.pop_back();
        return {s_lam(std::move(x), pty, rty, std::move(body)), ut_fun(pty, rty)};
      }
      case P::App: {
        --remaining_;
        auto [f, ft] = gen(ut_fun(rand_type(1), goal));
        auto m = match_fun(ft);  // ft ∼ Fun(_, goal), so this matches
        auto [arg, at] = gen(m->first);
        return {s_app(std::move(f), std::move(arg)), m->second};
      }
      case P::RefNew: {
        --remaining_;
        SurfaceTypePtr ct =
            goal->kind() == SurfaceType::Kind::Ref ? goal->content() : rand_type(2);
        auto [init, it] = gen(ct);
        return {s_ref(ct, std::move(init)), ut_ref(ct)};
      }
      case P::Deref: {
        --remaining_;
        auto [r, rt] = gen(ut_ref(goal));
        auto m = match_ref(rt);
        return {s_deref(std::move(r)), *m};
      }
      case P::Assign: {
        --remaining_;
        auto [r, rt] = gen(ut_ref(rand_type(1)));
        auto m = match_ref(rt);
        auto [v, vt] = gen(*m);
        return {s_assign(std::move(r), std::move(v)), ut_int()};
      }
    }
    return terminal(goal);
  }

  SplitMix64 rng_;
  int remaining_;
  int name_counter_ = 0;
  std::vector<Binding> env_;
};

}  // namespace

SurfaceExprPtr gen_program(std::uint64_t seed, int size_budget) {
  // Productions reserve only locally, so a draw can run slightly over budget;
  // rebuild with a tighter internal budget until the program fits.
  SplitMix64 master(seed);
  for (int attempt = 0;; ++attempt) {
    int internal = size_budget - 3 * attempt;
    ProgramGen g(master.derive(static_cast<std::uint64_t>(attempt)).state(), internal);
    SurfaceExprPtr p = g.top();
    if (static_cast<int>(node_count(p)) <= size_budget || internal <= 2) return p;
  }
}

}  // namespace gts
