#include "gts/lattice.hpp"

#include "gts/rng.hpp"

namespace gts {

int type_weight(const SurfaceTypePtr& u) {
  switch (u->kind()) {
    case SurfaceType::Kind::Dyn: return 0;
    case SurfaceType::Kind::Int: return 1;
    case SurfaceType::Kind::Ref: return 1 + type_weight(u->content());
    case SurfaceType::Kind::Fun:
      return 1 + type_weight(u->dom()) + type_weight(u->cod());
  }
  return 0;
}

namespace {

void collect_annotations(const SurfaceExprPtr& s, std::vector<SurfaceTypePtr>& out) {
  switch (s->kind) {
    case SurfaceExpr::Kind::Lam:
      out.push_back(s->ty1);
      out.push_back(s->ty2);
      break;
    case SurfaceExpr::Kind::RefNew:
      out.push_back(s->ty1);
      break;
    default:
      break;
  }
  if (s->a) collect_annotations(s->a, out);
  if (s->b) collect_annotations(s->b, out);
}

SurfaceExprPtr rebuild(const SurfaceExprPtr& s, const std::vector<SurfaceTypePtr>& annos,
                       std::size_t& idx) {
  switch (s->kind) {
    case SurfaceExpr::Kind::Var:
    case SurfaceExpr::Kind::IntLit:
      return s;
    case SurfaceExpr::Kind::Lam: {
      SurfaceTypePtr pty = annos[idx++];
      SurfaceTypePtr rty = annos[idx++];
      SurfaceExprPtr body = rebuild(s->a, annos, idx);
      return s_lam(s->name, std::move(pty), std::move(rty), std::move(body), s->span);
    }
    case SurfaceExpr::Kind::RefNew: {
      SurfaceTypePtr ty = annos[idx++];
      SurfaceExprPtr init = rebuild(s->a, annos, idx);
      return s_ref(std::move(ty), std::move(init), s->span);
    }
    case SurfaceExpr::Kind::Add: {
      SurfaceExprPtr l = rebuild(s->a, annos, idx);
      return s_add(std::move(l), rebuild(s->b, annos, idx), s->span);
    }
    case SurfaceExpr::Kind::App: {
      SurfaceExprPtr f = rebuild(s->a, annos, idx);
      return s_app(std::move(f), rebuild(s->b, annos, idx), s->span);
    }
    case SurfaceExpr::Kind::Assign: {
      SurfaceExprPtr t = rebuild(s->a, annos, idx);
      return s_assign(std::move(t), rebuild(s->b, annos, idx), s->span);
    }
    case SurfaceExpr::Kind::Deref:
      return s_deref(rebuild(s->a, annos, idx), s->span);
  }
  return s;
}

// Replace the idx-th non-★ constructor node (pre-order) with ★.
SurfaceTypePtr erase_constructor(const SurfaceTypePtr& u, int idx) {
  if (idx == 0) return ut_dyn();
  --idx;
  switch (u->kind()) {
    case SurfaceType::Kind::Ref:
      return ut_ref(erase_constructor(u->content(), idx));
    case SurfaceType::Kind::Fun: {
      int dw = type_weight(u->dom());
      if (idx < dw) return ut_fun(erase_constructor(u->dom(), idx), u->cod());
      return ut_fun(u->dom(), erase_constructor(u->cod(), idx - dw));
    }
    default:
      return u;  // unreachable for valid indices
  }
}

}  // namespace

int type_weight(const SurfaceExprPtr& s) {
  std::vector<SurfaceTypePtr> annos;
  collect_annotations(s, annos);
  int w = 0;
  for (const SurfaceTypePtr& a : annos) w += type_weight(a);
  return w;
}

std::optional<SurfaceExprPtr> dynamize(const SurfaceExprPtr& s, int lo, int hi,
                                       std::uint64_t seed, int max_restarts) {
  SplitMix64 master(seed);
  for (int attempt = 0; attempt <= max_restarts; ++attempt) {
    SplitMix64 rng = master.derive(static_cast<std::uint64_t>(attempt));
    std::vector<SurfaceTypePtr> annos;
    collect_annotations(s, annos);
    int w = 0;
    for (const SurfaceTypePtr& a : annos) w += type_weight(a);

    while (w >= hi && w > 0) {
      int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(w)));
      for (std::size_t i = 0; i < annos.size(); ++i) {
        int aw = type_weight(annos[i]);
        if (k < aw) {
          annos[i] = erase_constructor(annos[i], k);
          break;
        }
        k -= aw;
      }
      w = 0;
      for (const SurfaceTypePtr& a : annos) w += type_weight(a);
    }

    if (w >= lo && w < hi) {
      std::size_t idx = 0;
      return rebuild(s, annos, idx);
    }
  }
  return std::nullopt;
}

std::vector<Configuration> sample_lattice(const SurfaceExprPtr& s, int max_intervals,
                                          int per_interval, std::uint64_t seed,
                                          std::vector<std::string>* skipped) {
  std::vector<Configuration> out;
  SplitMix64 master(seed);
  int total = type_weight(s);
  int id = 0;

  if (total > 0 && max_intervals > 0) {
    int k = std::min(max_intervals, total);
    for (int i = 0; i < k; ++i) {
      int lo = static_cast<int>((static_cast<std::int64_t>(i) * total) / k);
      int hi = static_cast<int>((static_cast<std::int64_t>(i) + 1) * total / k);
      for (int j = 0; j < per_interval; ++j) {
        std::uint64_t cfg_seed =
            master.derive(static_cast<std::uint64_t>(i) * 1000003u +
                          static_cast<std::uint64_t>(j))
                .state();
        std::optional<SurfaceExprPtr> prog = dynamize(s, lo, hi, cfg_seed);
        if (!prog) {
          if (skipped)
            skipped->push_back("interval [" + std::to_string(lo) + "," +
                               std::to_string(hi) + ") unreachable; sample " +
                               std::to_string(j) + " skipped");
          continue;
        }
        Configuration c;
        c.id = id++;
        c.seed = cfg_seed;
        c.interval_lo = lo;
        c.interval_hi = hi;
        c.achieved_weight = type_weight(*prog);
        c.program = *prog;
        out.push_back(std::move(c));
      }
    }
  }

  Configuration full;
  full.id = id;
  full.seed = master.derive(0xfffffffful).state();
  full.interval_lo = total;
  full.interval_hi = total + 1;
  full.achieved_weight = total;
  full.program = s;
  out.push_back(std::move(full));
  return out;
}

bool outcomes_agree(const RunOutcome& a, const RunOutcome& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != RunOutcome::Kind::Value) return true;
  if (a.value->kind != b.value->kind) return false;
  if (a.value->kind == TargetExpr::Kind::IntLit) return a.value->value == b.value->value;
  return true;  // lambdas and addresses compare by kind only
}

ConfigMetrics measure(const Configuration& c, bool open_world, std::uint64_t fuel) {
  CompileOptions opts;
  opts.open_world = open_world;
  opts.optimize = true;
  CompileResult r = compile_surface(c.program, opts);

  ConfigMetrics m;
  m.static_checks_unopt = check_census(r.erased).static_checks;
  m.static_checks_opt = check_census(r.optimized).static_checks;
  m.solver_fallback = r.solver_fallback;

  RunOutcome unopt = run(r.erased, fuel);
  RunOutcome opt = run(r.optimized, fuel);
  m.dyn_checks_unopt = unopt.stats.checks_executed_tagged;
  m.dyn_checks_opt = opt.stats.checks_executed_tagged;
  m.outcome_unopt = unopt.kind;
  m.outcome_opt = opt.kind;
  m.agree = outcomes_agree(unopt, opt);
  return m;
}

void write_csv_header(std::ostream& os) {
  os << "config_id,seed,interval_lo,interval_hi,type_weight,static_unopt,static_opt,"
        "dyn_unopt,dyn_opt,outcome_unopt,outcome_opt,agree,solver_fallback\n";
}

void write_csv_row(std::ostream& os, const Configuration& c, const ConfigMetrics& m) {
  os << c.id << ',' << c.seed << ',' << c.interval_lo << ',' << c.interval_hi << ','
     << c.achieved_weight << ',' << m.static_checks_unopt << ',' << m.static_checks_opt
     << ',' << m.dyn_checks_unopt << ',' << m.dyn_checks_opt << ','
     << outcome_name(m.outcome_unopt) << ',' << outcome_name(m.outcome_opt) << ','
     << (m.agree ? 1 : 0) << ',' << (m.solver_fallback ? 1 : 0) << '\n';
}

}  // namespace gts
