// Command-line front end: parses a session file or a builtin example,
// dispatches the requested checks and serializes the reports.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "dext/analysis.hpp"
#include "dext/errors.hpp"
#include "dext/session.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CommonArgs {
  std::string session_path;
  std::string field_spec;
  std::string example;
  std::vector<std::string> params;
  std::string json_path;
  int max_degree = 5;
  bool trim = false;
};

struct Runner {
  CommonArgs args;
  std::vector<dext::CertReport> reports;

  dext::Field field() const {
    if (!args.field_spec.empty())
      return dext::Field::from_string(args.field_spec);
    return dext::Field::rationals();
  }

  dext::DEData load_dedata() {
    if (loaded_) return *loaded_;
    std::optional<dext::DEData> data;
    if (!args.example.empty()) {
      dext::Field f = field();
      std::map<std::string, dext::Scalar> params;
      for (const std::string& kv : args.params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw CLI::ValidationError("--param expects name=value");
        dext::NcPoly v =
            dext::parse_expression(kv.substr(eq + 1), dext::Alphabet{}, f);
        dext::Scalar s = v.is_zero() ? dext::Scalar::zero(f)
                                     : v.leading_coeff();
        params.emplace(kv.substr(0, eq), s);
      }
      data = dext::builtin(args.example, params, f).data;
    } else if (!args.session_path.empty()) {
      std::ifstream in(args.session_path);
      if (!in)
        throw dext::ParseError(0, 0,
                               "cannot open '" + args.session_path + "'");
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      dext::SessionFile s = dext::parse_session(text);
      if (!args.field_spec.empty() && !(s.field == field()))
        throw CLI::ValidationError(
            "--field conflicts with the session file's field declaration");
      if (args.max_degree == 5) args.max_degree = s.options.max_degree;
      session_ = s;
      data = s.to_dedata();
    } else {
      throw CLI::ValidationError(
          "provide a session file or --example <name>");
    }
    if (args.trim) data = dext::trim(*data);
    // the base must be confluent before any certificate means anything
    const dext::ReductionSystem& base = data->base();
    int bound = base.max_rule_degree();
    for (const dext::Ambiguity& amb : base.overlaps())
      bound = std::max(bound, amb.word.degree());
    if (bound > 0) {
      dext::CertReport rep = base.check_confluence(bound);
      rep.check = "base_confluence";
      if (!rep.passed()) throw dext::ValidationFailed(std::move(rep));
      add(std::move(rep));
    }
    loaded_ = data;
    return *data;
  }

  const std::optional<dext::SessionFile>& session() const { return session_; }

  void add(dext::CertReport rep) { reports.push_back(std::move(rep)); }

  template <class Fn>
  void timed(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    dext::CertReport rep = fn();
    auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    add(std::move(rep));
  }

  int finish() {
    bool all_pass = true;
    for (const dext::CertReport& r : reports) {
      std::cout << r.to_text() << "\n";
      if (r.elapsed_ms > 0.0)
        std::cout << "    time: " << r.elapsed_ms << " ms\n";
      all_pass = all_pass && r.passed();
    }
    if (!args.json_path.empty()) {
      json out;
      out["tool"] = "dext";
      out["version"] = "0.1.0";
      out["field"] = field().to_string();
      out["max_degree"] = args.max_degree;
      out["all_pass"] = all_pass;
      out["checks"] = json::array();
      for (const dext::CertReport& r : reports) {
        json c;
        c["check"] = r.check;
        c["verdict"] = dext::to_string(r.verdict);
        if (r.bound >= 0) c["bound"] = r.bound;
        c["witnesses"] = json::array();
        for (const auto& w : r.witnesses)
          c["witnesses"].push_back({{"kind", w.kind}, {"detail", w.detail}});
        c["data"] = json::object();
        for (const auto& [k, v] : r.data) c["data"][k] = v;
        c["notes"] = r.notes;
        out["checks"].push_back(std::move(c));
      }
      std::ofstream jf(args.json_path);
      jf << out.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
  }

 private:
  std::optional<dext::SessionFile> session_;
  std::optional<dext::DEData> loaded_;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_input = true) {
  cmd->add_option("session", args.session_path, "session file");
  cmd->add_option("--field", args.field_spec, "q or fp:<prime>");
  cmd->add_option("--example", args.example,
                  "builtin example name (trivial, B1..B4, Bh)");
  cmd->add_option("--param", args.params, "example parameter name=value");
  cmd->add_option("--json", args.json_path, "write a JSON report here");
  cmd->add_option("--max-degree", args.max_degree,
                  "degree bound for the certificates");
  cmd->add_flag("--trim", args.trim, "zero out delta and tau first");
  (void)needs_input;
}

int run_command(const std::string& cmd, Runner& r,
                const std::string& element_arg,
                const std::vector<std::string>& elements_arg, bool enumerate,
                int enum_degree, int order_max) {
  const int D = r.args.max_degree;
  dext::DEData data = r.load_dedata();

  auto build_now = [&]() { return dext::build(data); };

  if (cmd == "validate") {
    r.timed([&] { return data.validate_hom(); });
    r.timed([&] { return data.check_r3_formulas(); });
    r.timed([&] { return data.check_r3_by_ambiguity(); });
    return 0;
  }
  if (cmd == "build") {
    dext::ExtensionBuild b = build_now();
    dext::CertReport rep = dext::CertReport::pass("build");
    rep.datum("rules", std::to_string(b.presentation.rules().size()));
    for (std::size_t i = 0; i < b.presentation.rules().size(); ++i) {
      const dext::Rule& rule = b.presentation.rules()[i];
      rep.datum("rule_" + std::to_string(i),
                rule.lead.to_string(b.alphabet()) + " -> " +
                    rule.rhs.to_string(b.alphabet()));
    }
    r.add(std::move(rep));
    return 0;
  }
  if (cmd == "pbw") {
    dext::ExtensionBuild b = build_now();
    r.timed([&] { return dext::certify_pbw(b, D); });
    return 0;
  }
  if (cmd == "hilbert") {
    dext::ExtensionBuild b = build_now();
    r.timed([&] { return dext::certify_pbw(b, D); });
    r.timed([&] { return dext::certify_hilbert(b, D); });
    return 0;
  }
  if (cmd == "det-sigma") {
    r.timed([&] {
      dext::EndoMap det = data.det_sigma();
      dext::CertReport rep = dext::CertReport::pass("det_sigma", 4);
      const dext::Alphabet& a = data.base().alphabet();
      for (std::size_t g = 0; g < det.images.size(); ++g)
        rep.datum("det(" + a.name(g) + ")", det.images[g].to_string(a));
      rep.note("endomorphism and multiplicativity certified to the bound");
      return rep;
    });
    r.timed([&] { return data.naive_det_variants(); });
    return 0;
  }
  if (cmd == "invert-sigma") {
    r.timed([&] {
      dext::CertReport rep = dext::CertReport::pass("invert_sigma");
      const dext::Alphabet& a = data.base().alphabet();
      dext::EndoMap det = data.det_sigma();
      auto dinv = dext::invert_endo(det, data.base());
      if (!dinv) {
        rep.verdict = dext::Verdict::Fail;
        rep.witness("det_sigma", "not invertible");
        return rep;
      }
      for (std::size_t g = 0; g < dinv->images.size(); ++g)
        rep.datum("det_inverse(" + a.name(g) + ")",
                  dinv->images[g].to_string(a));
      auto phi = data.right_inverse_phi();
      if (!phi) {
        rep.verdict = dext::Verdict::Unsupported;
        rep.note("no constructive inverse formula for p11 != 0; supply "
                 "phi and use verify-phi");
        return rep;
      }
      for (std::size_t g = 0; g < phi->size(); ++g)
        for (int i = 1; i <= 2; ++i)
          for (int j = 1; j <= 2; ++j)
            rep.datum("phi" + std::to_string(i) + std::to_string(j) + "(" +
                          a.name(g) + ")",
                      (*phi)[g].at(i, j).to_string(a));
      rep.absorb(data.verify_phi(*phi));
      return rep;
    });
    return 0;
  }
  if (cmd == "check-double") {
    dext::ExtensionBuild b = build_now();
    r.timed([&] { return dext::certify_free_rank3(b, D); });
    r.timed([&] { return dext::certify_double(b, D); });
    r.timed([&] { return dext::factor_ring_check(b); });
    return 0;
  }
  if (cmd == "exact-seq") {
    dext::ExtensionBuild b = build_now();
    r.timed([&] { return dext::certify_pbw(b, D); });
    r.timed([&] { return dext::exact_sequence_check(b, D); });
    return 0;
  }
  if (cmd == "twist") {
    dext::ExtensionBuild b = build_now();
    r.timed([&] { return dext::g_twist_check(b, D); });
    return 0;
  }
  if (cmd == "normal") {
    dext::ExtensionBuild b = build_now();
    if (enumerate) {
      r.timed([&] {
        dext::CertReport rep =
            dext::CertReport::pass("enumerate_normal");
        auto res = dext::enumerate_normal(b, enum_degree);
        if (!res.supported) {
          rep.verdict = dext::Verdict::Unsupported;
          rep.note(res.reason);
          return rep;
        }
        rep.datum("degree", std::to_string(enum_degree));
        rep.datum("points_checked", std::to_string(res.points_checked));
        rep.datum("normal_count", std::to_string(res.found.size()));
        for (std::size_t i = 0; i < res.found.size(); ++i)
          rep.datum("normal_" + std::to_string(i),
                    res.found[i].element.to_string(b.alphabet()));
        return rep;
      });
      return 0;
    }
    if (element_arg.empty())
      throw CLI::ValidationError("normal needs --element or --enumerate");
    dext::NcPoly z = dext::parse_expression(element_arg, b.alphabet(),
                                            data.field());
    r.timed([&] {
      dext::CertReport rep = dext::CertReport::pass("check_normal");
      rep.datum("element", z.to_string(b.alphabet()));
      auto cert = dext::check_normal(b, z);
      if (!cert) {
        rep.verdict = dext::Verdict::Fail;
        rep.witness("element", z.to_string(b.alphabet()));
        rep.note("not normal: some multiplier system is inconsistent");
        return rep;
      }
      for (std::size_t w = 0; w < cert->multipliers.size(); ++w)
        rep.datum("multiplier(" + b.alphabet().name(w) + ")",
                  cert->multipliers[w].to_string(b.alphabet()));
      return rep;
    });
    return 0;
  }
  if (cmd == "order") {
    r.timed([&] {
      dext::CertReport rep = dext::CertReport::pass("endo_order", order_max);
      dext::EndoMap det = data.det_sigma();
      auto n = dext::endo_order(det, data.base(), order_max);
      if (n) {
        rep.datum("order", std::to_string(*n));
      } else {
        rep.verdict = dext::Verdict::Inconclusive;
        rep.note("exceeds bound " + std::to_string(order_max));
      }
      return rep;
    });
    return 0;
  }
  if (cmd == "subdims") {
    dext::ExtensionBuild b = build_now();
    std::vector<dext::NcPoly> elems;
    for (const std::string& e : elements_arg)
      elems.push_back(
          dext::parse_expression(e, b.alphabet(), data.field()));
    r.timed([&] {
      dext::CertReport rep = dext::CertReport::pass("subalgebra_dims", D);
      auto dims = dext::subalgebra_dims(b, elems, D);
      std::string s = "[";
      for (std::size_t i = 0; i < dims.size(); ++i)
        s += (i ? "," : "") + std::to_string(dims[i]);
      rep.datum("dims", s + "]");
      return rep;
    });
    return 0;
  }
  if (cmd == "koszul") {
    dext::ExtensionBuild b = build_now();
    r.timed([&] { return dext::koszul_numeric_check(b, D); });
    return 0;
  }
  throw CLI::ValidationError("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double Ore extension certifier"};
  app.require_subcommand(0, 1);

  const std::vector<std::string> commands = {
      "validate", "build",     "pbw",    "hilbert", "det-sigma",
      "invert-sigma", "check-double", "exact-seq", "twist", "normal",
      "order", "subdims", "koszul", "example", "run"};

  std::map<std::string, CommonArgs> cmd_args;
  std::string element_arg;
  std::vector<std::string> elements_arg;
  bool enumerate = false;
  int enum_degree = 1;
  int order_max = 100;
  std::string example_name;

  for (const std::string& c : commands) {
    CLI::App* sub = app.add_subcommand(c);
    add_common(sub, cmd_args[c]);
    if (c == "normal") {
      sub->add_option("--element", element_arg, "element to test");
      sub->add_flag("--enumerate", enumerate, "scan projectively");
      sub->add_option("--degree", enum_degree, "degree to scan");
    } else if (c == "order") {
      sub->add_option("--max", order_max, "order search bound");
    } else if (c == "subdims") {
      sub->add_option("--element", elements_arg,
                      "degree-1 subalgebra generator (repeatable)");
    } else if (c == "example") {
      sub->add_option("--name", example_name, "builtin example name");
    }
  }

  CLI11_PARSE(app, argc, argv);

  auto subs = app.get_subcommands();
  if (subs.empty()) {
    std::cout << app.help();
    return 2;
  }
  const std::string cmd = subs[0]->get_name();

  Runner runner;
  runner.args = cmd_args[cmd];
  try {
    if (cmd == "example") {
      if (!example_name.empty()) runner.args.example = example_name;
      if (runner.args.example.empty())
        throw CLI::ValidationError("example needs --name or --example");
      dext::DEData data = runner.load_dedata();
      std::cout << dext::render_session(dext::session_from_dedata(
          data, runner.args.max_degree));
      return runner.finish();
    }
    if (cmd == "run") {
      dext::DEData data = runner.load_dedata();
      std::vector<std::string> checks;
      if (runner.session() && !runner.session()->options.checks.empty())
        checks = runner.session()->options.checks;
      else
        checks = {"validate"};
      int rc = 0;
      for (const std::string& c : checks)
        rc = std::max(rc, run_command(c, runner, element_arg, elements_arg,
                                      enumerate, enum_degree, order_max));
      (void)rc;
      return runner.finish();
    }
    run_command(cmd, runner, element_arg, elements_arg, enumerate,
                enum_degree, order_max);
    return runner.finish();
  } catch (const dext::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dext::ValidationFailed& e) {
    runner.add(e.report);
    runner.finish();
    return 1;
  } catch (const dext::EndomorphismViolation& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    runner.finish();
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
