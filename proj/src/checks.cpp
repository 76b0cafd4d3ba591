#include "qtwist/checks.hpp"

#include <algorithm>
#include <chrono>

namespace qtwist {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

const char* kPrimes[] = {"2",  "3",  "5",  "7",  "11", "13", "17",
                         "19", "23", "29", "31", "37", "41", "43",
                         "47", "53", "59", "61", "67", "71"};
constexpr int kPrimeCount = 20;

}  // namespace

std::vector<BigRat> default_assignment(const VarTable& vars, int tuple) {
  if (vars.size() + tuple > kPrimeCount)
    throw Error("no default assignment tuple left");
  std::vector<BigRat> values;
  for (int i = 0; i < vars.size(); ++i)
    values.push_back(rat_from_string(kPrimes[i + tuple]));
  return values;
}

CheckReport check_param_count(int N) {
  auto t0 = Clock::now();
  VarTable vars = VarTable::for_rank(N);
  SymbolicCtx ctx(vars);
  auto rfg = r_esoteric(ctx, N, vars);
  std::vector<bool> used(vars.size(), false);
  for (const auto& [rc, v] : rfg.entries()) v.collect_vars(used);
  int count = 0;
  for (bool u : used) count += u ? 1 : 0;
  int expected = (N + 1) * (N + 2) / 2;

  CheckReport rep;
  rep.check = "param-count";
  rep.N = N;
  rep.mode = "symbolic";
  rep.pass = count == expected;
  if (!rep.pass) {
    rep.witness = Witness{0, 0, std::to_string(count),
                          std::to_string(expected)};
  }
  rep.note = std::to_string(count) + " parameters";
  rep.millis = ms_since(t0);
  return rep;
}

CheckReport check_compare_cg() {
  auto t0 = Clock::now();
  // One table holding both the twist parameters and the reference ones.
  VarTable vars = VarTable::for_rank(1);
  int p_var = vars.add("p");
  int nu_var = vars.add("nu");
  SymbolicCtx ctx(vars);

  auto rfg = r_esoteric(ctx, 1, vars);
  auto ref = cg3_reference(ctx, p_var, nu_var);
  ParamMatch match = match_parameters(vars, rfg, ref, p_var, nu_var);

  SparseMat<FieldElem> substituted(ref.dim());
  std::map<int, FieldElem> repl{{p_var, match.p_expr}, {nu_var, match.nu_expr}};
  for (const auto& [rc, v] : ref.entries())
    substituted.set(rc.first, rc.second, v.substitute_vars(repl));

  CheckReport rep = detail::compare(ctx, "compare-cg", 1, "symbolic", rfg,
                                    substituted);
  rep.note = "p=" + match.p_expr.to_string(vars) +
             ", nu=" + match.nu_expr.to_string(vars);
  rep.millis = ms_since(t0);
  return rep;
}

namespace {

template <class Ctx>
std::vector<CheckReport> run_checks_impl(const Ctx& ctx,
                                         const std::string& name, int N,
                                         const std::string& mode) {
  long n = 2 * N + 1;
  const VarTable& vars = *ctx.vars;
  std::vector<CheckReport> out;
  bool all = name == "all";

  auto timed = [&](auto&& fn) {
    auto t0 = Clock::now();
    CheckReport rep = fn();
    rep.millis = ms_since(t0);
    out.push_back(std::move(rep));
  };
  if (all || name == "ybe") {
    timed([&] {
      return check_ybe(ctx, n, N, mode, "ybe-rs", r_standard_direct(ctx, n));
    });
    timed([&] {
      return check_ybe(ctx, n, N, mode, "ybe-rfg", r_esoteric(ctx, N, vars));
    });
  }
  if (all || name == "cocycle") {
    timed([&] {
      return check_cocycle(ctx, n, N, mode, "cocycle-f1", build_f1(N));
    });
    timed([&] {
      return check_cocycle(ctx, n, N, mode, "cocycle-full",
                           build_full_twist(N, vars));
    });
  }
  if (all || name == "factorization") {
    timed([&] {
      return check_factorization(ctx, n, N, mode, build_f2(N, vars),
                                 build_f1(N));
    });
  }
  if (all || name == "hecke") {
    timed([&] {
      return check_hecke(ctx, n, N, mode, "hecke-rs",
                         r_standard_direct(ctx, n));
    });
    timed([&] {
      return check_hecke(ctx, n, N, mode, "hecke-rfg",
                         r_esoteric(ctx, N, vars));
    });
  }
  if (all || name == "intertwine") {
    timed([&] {
      return check_intertwiner(ctx, n, N, mode, "intertwine-rs",
                               r_standard_direct(ctx, n), nullptr);
    });
    timed([&] {
      TwistElement el = build_full_twist(N, vars);
      return check_intertwiner(ctx, n, N, mode, "intertwine-rfg",
                               r_esoteric(ctx, N, vars), &el);
    });
  }
  if (all || name == "rll") {
    timed([&] {
      TwistElement el = build_full_twist(N, vars);
      return check_rll(ctx, n, N, mode, r_standard_direct(ctx, n),
                       r_esoteric(ctx, N, vars), el);
    });
  }
  return out;
}

bool looks_like_genericity_failure(const Error& e) {
  std::string what = e.what();
  return what.find("division by zero") != std::string::npos ||
         what.find("singular") != std::string::npos ||
         what.find("denominator vanishes") != std::string::npos ||
         what.find("degenerate q-number") != std::string::npos;
}

}  // namespace

std::vector<CheckReport> run_named_check(const std::string& name,
                                         const CheckOptions& opts) {
  static const std::vector<std::string> known = {
      "ybe",  "cocycle",    "factorization", "hecke", "intertwine",
      "rll",  "compare-cg", "param-count",   "all"};
  if (std::find(known.begin(), known.end(), name) == known.end())
    throw Error("unknown check: " + name);

  int N = opts.N;
  std::vector<CheckReport> out;

  // The symbolic-only checks.
  if (name == "compare-cg" || name == "all") {
    if (name == "compare-cg" && N != 1)
      throw Error("compare-cg is defined for N = 1");
    if (N == 1) out.push_back(check_compare_cg());
  }
  if (name == "param-count" || name == "all") {
    out.push_back(check_param_count(N));
  }

  bool matrix_checks =
      name != "compare-cg" && name != "param-count";
  if (matrix_checks) {
    VarTable vars = VarTable::for_rank(N);
    bool symbolic;
    switch (opts.mode) {
      case CheckOptions::Mode::Symbolic:
        symbolic = true;
        break;
      case CheckOptions::Mode::Numeric:
        symbolic = false;
        break;
      default:
        symbolic = N <= 1;
    }
    if (symbolic) {
      SymbolicCtx ctx(vars);
      auto reps = run_checks_impl(ctx, name, N, "symbolic");
      out.insert(out.end(), reps.begin(), reps.end());
    } else if (!opts.assignment.empty()) {
      std::vector<BigRat> values(vars.size());
      for (int v = 0; v < vars.size(); ++v) {
        auto it = opts.assignment.find(vars.name(v));
        if (it == opts.assignment.end())
          throw Error("assignment missing variable " + vars.name(v));
        values[v] = it->second;
      }
      NumericCtx ctx(vars, values);
      auto reps = run_checks_impl(ctx, name, N, "numeric-rational");
      out.insert(out.end(), reps.begin(), reps.end());
    } else {
      // Default prime tuples, retrying on genericity failures.
      int tuple = opts.tuple;
      for (;;) {
        try {
          NumericCtx ctx(vars, default_assignment(vars, tuple));
          auto reps = run_checks_impl(ctx, name, N, "numeric-rational");
          out.insert(out.end(), reps.begin(), reps.end());
          break;
        } catch (const Error& e) {
          if (!looks_like_genericity_failure(e) || tuple > opts.tuple + 4)
            throw;
          ++tuple;
        }
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const CheckReport& a, const CheckReport& b) {
              return a.check < b.check;
            });
  return out;
}

}  // namespace qtwist
