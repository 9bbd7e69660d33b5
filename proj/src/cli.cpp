#include "jkinv/cli.hpp"

#include "jkinv/errors.hpp"
#include "jkinv/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace jkinv {

namespace {

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 25;
  long bound = 101;
  std::string format = "json";

  Sampler sampler() const {
    if (samples < 1) throw InputError("--samples must be at least 1");
    if (bound < 2) throw InputError("--bound must be at least 2");
    return Sampler(SamplingConfig{seed, samples, bound});
  }
};

void render_text(const Json& j, std::ostream& out, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << indent << it.key() << ":\n";
      render_text(v, out, indent + "  ");
    } else if (v.is_string()) {
      out << indent << it.key() << ": " << v.get<std::string>() << "\n";
    } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); })) {
      out << indent << it.key() << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << indent << "  -\n";
          render_text(e, out, indent + "    ");
        } else {
          out << indent << "  - " << e.dump() << "\n";
        }
      }
    } else {
      out << indent << it.key() << ": " << v.dump() << "\n";
    }
  }
}

void emit(const Json& j, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "text")
    render_text(j, out, "");
  else
    out << dump_canonical(j);
}

std::filesystem::path dir_of(const std::string& path) {
  std::filesystem::path p(path);
  return p.has_parent_path() ? p.parent_path() : std::filesystem::path(".");
}

int cmd_pencil(const std::string& input, bool skew, const RunConfig& cfg, std::ostream& out) {
  Pencil p = pencil_from_json(read_json_file(input));
  StrictInvariants inv = strict_invariants(p);
  Json chi = Json::array();
  for (const auto& c : characteristic_polynomial(p).coeffs) chi.push_back(to_json(c));
  Json report{{"invariants", to_json(inv)}, {"characteristicPolynomial", {{"degree", chi.size() - 1}, {"coeffs", chi}}}};
  if (skew || (p.A.is_square() && p.is_skew())) {
    SkewJK jk = skew_jk_invariants(p);
    report["skew"] = to_json(jk);
    report["coreDim"] = core_subspace(p).size();
    report["mantleDim"] = mantle_subspace(p).size();
  }
  emit(report, cfg, out);
  return exit_ok;
}

int cmd_lie(const std::string& input, const RunConfig& cfg, std::ostream& out) {
  LieAlgebra g = lie_from_json(read_json_file(input));
  validate(g);
  Sampler s = cfg.sampler();
  emit(to_json(jk_invariants_of_lie(g, s)), cfg, out);
  return exit_ok;
}

int cmd_rep(const std::string& input, const RunConfig& cfg, std::ostream& out) {
  Representation rho = rep_from_json(read_json_file(input), dir_of(input));
  validate(rho);
  Sampler s = cfg.sampler();
  emit(to_json(jk_invariants_of_rep(rho, s)), cfg, out);
  return exit_ok;
}

int cmd_semidirect(const std::string& input, const std::string& lie_path, const std::string& rep_path, bool verify,
                   const RunConfig& cfg, std::ostream& out) {
  std::optional<LieAlgebra> g;
  Representation rho;
  if (!input.empty()) {
    if (!lie_path.empty() || !rep_path.empty()) throw InputError("give either an input file or --lie/--rep");
    Json j = read_json_file(input);
    const auto base = dir_of(input);
    auto load = [&](const char* key) {
      if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
      const Json& v = j[key];
      return v.is_string() ? std::make_pair(read_json_file(base / v.get<std::string>()),
                                            dir_of((base / v.get<std::string>()).string()))
                           : std::make_pair(v, base);
    };
    auto [a, abase] = load("algebra");
    g = lie_from_json(a);
    auto [r, rbase] = load("representation");
    rho = rep_from_json(r, rbase, &*g);
  } else {
    if (rep_path.empty()) throw InputError("semidirect needs --rep (and optionally --lie)");
    if (!lie_path.empty()) g = lie_from_json(read_json_file(lie_path));
    rho = rep_from_json(read_json_file(rep_path), dir_of(rep_path), g ? &*g : nullptr);
  }
  validate(rho.algebra);
  validate(rho);
  Sampler s = cfg.sampler();
  Json report;
  int code = exit_ok;
  if (verify) {
    DualTheoremReport r = check_dual_theorem(rho.algebra, rho, s);
    report = {{"lie", to_json(r.lie)}, {"dualTheorem", to_json(r)}};
    report["dualTheorem"].erase("lie");
    if (r.verdict == Verdict::mismatch) code = exit_mismatch;
  } else {
    report = {{"lie", to_json(jk_invariants_of_lie(semidirect(rho.algebra, rho).q, s))}};
  }
  report["dim"] = rho.algebra.dim() + rho.dim_v;
  emit(report, cfg, out);
  return code;
}

int cmd_bundle_leq(const std::string& lower, const std::string& upper, const RunConfig& cfg, std::ostream& out) {
  Json lo = read_json_file(lower), up = read_json_file(upper);
  const bool skew = lo.is_object() && lo.contains("dim");
  if (skew != (up.is_object() && up.contains("dim"))) throw InputError("cannot compare a skew and a plain signature");
  bool ok;
  if (skew) {
    ok = skew_bundle_closure_contains(skew_bundle_sig_from_json(up), skew_bundle_sig_from_json(lo));
  } else {
    ok = bundle_closure_contains(bundle_sig_from_json(up), bundle_sig_from_json(lo));
  }
  if (cfg.format == "text")
    out << (ok ? "true" : "false") << "\n";
  else
    out << dump_canonical(Json{{"contains", ok}});
  return ok ? exit_ok : exit_mismatch;
}

int cmd_tables(const std::string& family, std::size_t n, std::size_t m, const RunConfig& cfg, std::ostream& out) {
  Family f = Family::parse(family + ":" + std::to_string(n));
  if (m < 1) throw InputError("--m must be at least 1");
  Classical c = build_classical(f);
  Representation rho = direct_sum(c.standard, m);
  Sampler s = cfg.sampler();
  BundleSig want_rep = expected_rep_jk(f, m);
  RepJK rep = jk_invariants_of_rep(rho, s);
  auto want_lie = expected_lie_jk(f, m);
  SkewJKReport lie = jk_invariants_of_lie(semidirect(c.algebra, rho).q, s);
  const bool rep_ok = rep.signature == want_rep;
  const bool lie_ok = want_lie && lie.signature == *want_lie;
  Json report{{"family", f.label()},
              {"m", m},
              {"representation",
               {{"expected", to_json(want_rep)},
                {"computed", to_json(rep.signature)},
                {"genericityStatus", to_string(rep.status)},
                {"match", rep_ok}}},
              {"semidirect",
               {{"expected", want_lie ? to_json(*want_lie) : Json(nullptr)},
                {"computed", to_json(lie.signature)},
                {"genericityStatus", to_string(lie.status)},
                {"match", want_lie ? Json(lie_ok) : Json(nullptr)}}}};
  int code = exit_ok;
  if (!rep_ok || (want_lie && !lie_ok))
    code = exit_mismatch;
  else if (!want_lie)
    code = exit_unknown;
  report["verdict"] = code == exit_ok ? "match" : code == exit_mismatch ? "mismatch" : "unknown";
  emit(report, cfg, out);
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jordan-Kronecker invariants of pencils, Lie algebras and representations", "jkinv"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "number of sample points")->capture_default_str();
  app.add_option("--bound", cfg.bound, "sampling height H")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::string input, lower, upper, lie_path, rep_path, family;
  bool skew = false, verify = false;
  std::size_t n = 0, m = 0;

  auto* pencil = app.add_subcommand("pencil", "strict invariants of a pencil");
  pencil->add_option("input", input, "Pencil JSON")->required();
  pencil->add_flag("--skew", skew, "require a skew pencil and report JK invariants");
  auto* lie = app.add_subcommand("lie", "JK invariants of a Lie algebra");
  lie->add_option("input", input, "LieAlgebra JSON")->required();
  auto* rep = app.add_subcommand("rep", "JK invariants of a representation");
  rep->add_option("input", input, "Representation JSON")->required();
  auto* sd = app.add_subcommand("semidirect", "JK invariants of a semi-direct sum");
  sd->add_option("input", input, "JSON with \"algebra\" and \"representation\"");
  sd->add_option("--lie", lie_path, "LieAlgebra JSON");
  sd->add_option("--rep", rep_path, "Representation JSON");
  sd->add_flag("--verify-dual", verify, "compare with the dual-representation prediction");
  auto* leq = app.add_subcommand("bundle-leq", "decide bundle closure containment");
  leq->add_option("--lower", lower, "signature JSON")->required();
  leq->add_option("--upper", upper, "signature JSON")->required();
  auto* tables = app.add_subcommand("tables", "compare a catalog case with its closed form");
  tables->add_option("--family", family, "gl, sl, so or sp")->required();
  tables->add_option("--n", n, "matrix size")->required();
  tables->add_option("--m", m, "number of copies")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "jkinv: " << e.what() << "\n";
    return exit_input;
  }

  try {
    if (*pencil) return cmd_pencil(input, skew, cfg, out);
    if (*lie) return cmd_lie(input, cfg, out);
    if (*rep) return cmd_rep(input, cfg, out);
    if (*sd) return cmd_semidirect(input, lie_path, rep_path, verify, cfg, out);
    if (*leq) return cmd_bundle_leq(lower, upper, cfg, out);
    if (*tables) return cmd_tables(family, n, m, cfg, out);
  } catch (const InputError& e) {
    err << "jkinv: input error: " << e.what() << "\n";
    return exit_input;
  } catch (const PreconditionError& e) {
    err << "jkinv: precondition failed: " << e.what() << "\n";
    return exit_precondition;
  } catch (const InvalidAlgebraError& e) {
    err << "jkinv: invalid algebra: " << e.what() << "\n";
    return exit_invalid_algebra;
  } catch (const SamplingError& e) {
    err << "jkinv: sampling failed: " << e.what() << "\n";
    return exit_failure;
  } catch (const std::exception& e) {
    err << "jkinv: internal error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_input;
}

}  // namespace jkinv
