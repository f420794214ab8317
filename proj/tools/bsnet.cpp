// Command line front end: sequence generators, net runners and the named
// verification suites. All machine-readable output is JSON lines.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bsnet/bs_arith.hpp"
#include "bsnet/counter_seq.hpp"
#include "bsnet/dynamics.hpp"
#include "bsnet/memory_net.hpp"
#include "bsnet/threshold_net.hpp"
#include "bsnet/trace_io.hpp"
#include "bsnet/verify.hpp"

namespace {

struct range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// "a..b" (inclusive) or a single "a".
range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t v = std::stoull(text);
      return {v, v};
    }
    const std::size_t lo = std::stoull(text.substr(0, dots));
    const std::size_t hi = std::stoull(text.substr(dots + 2));
    if (hi < lo) throw bsnet::parse_error("range bounds out of order: " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw bsnet::parse_error("cannot parse range '" + text + "'");
  } catch (const std::out_of_range&) {
    throw bsnet::parse_error("range value out of range: " + text);
  }
}

unsigned env_workers() {
  if (const char* raw = std::getenv("BSNET_WORKERS")) {
    try {
      const unsigned long v = std::stoul(raw);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return 1;
}

bsnet::trace_style style_from_name(const std::string& name) {
  if (name == "table2") return bsnet::trace_style::table2;
  if (name == "csv") return bsnet::trace_style::csv;
  if (name == "json") return bsnet::trace_style::json;
  throw bsnet::parse_error("unknown trace style '" + name + "'");
}

struct family_config {
  bsnet::family_params params = bsnet::counter_params();
  std::optional<std::vector<std::uint8_t>> x0_bits;
};

family_config load_family_config(const std::string& path) {
  const nlohmann::json j = bsnet::load_json_file(path);
  family_config cfg;
  const auto want = [&](const char* key) -> std::int64_t {
    if (!j.contains(key) || !j[key].is_number_integer())
      throw bsnet::parse_error(path + ": missing integer field \"" +
                               std::string(key) + "\"");
    return j[key].get<std::int64_t>();
  };
  cfg.params = bsnet::family_params{want("a1"), want("a2"), want("a3"),
                                    want("theta1"), want("b1"), want("b2"),
                                    want("b3"), want("theta2")};
  if (j.contains("x0")) {
    if (!j["x0"].is_array())
      throw bsnet::parse_error(path + ": \"x0\" must be an array of bits");
    std::vector<std::uint8_t> bits;
    for (const auto& b : j["x0"]) {
      const std::int64_t v = b.get<std::int64_t>();
      if (v != 0 && v != 1)
        throw bsnet::parse_error(path + ": \"x0\" entries must be 0 or 1");
      bits.push_back(static_cast<std::uint8_t>(v));
    }
    cfg.x0_bits = std::move(bits);
  }
  return cfg;
}

void print_reports(const std::vector<bsnet::verification_report>& reports,
                   bool as_json, bool timing) {
  for (const auto& r : reports) {
    if (as_json) {
      nlohmann::json line = {{"check", r.check},
                             {"params", r.params},
                             {"expected", r.expected},
                             {"observed", r.observed},
                             {"pass", r.pass}};
      std::cout << line.dump() << '\n';
    } else {
      std::cout << r.check << ' ' << r.params << ": expected " << r.expected
                << ", observed " << r.observed << ' '
                << (r.pass ? "PASS" : "FAIL");
      if (timing) std::cout << " (" << r.millis << " ms)";
      std::cout << '\n';
    }
  }
}

void maybe_write_trace(const std::optional<std::string>& path,
                       const std::vector<bsnet::configuration>& rows) {
  if (!path) return;
  std::string text;
  for (const auto& row : rows) {
    text += bsnet::trace_line(row);
    text += '\n';
  }
  bsnet::save_text_file(*path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"borrow-save counters, threshold nets and their orbits"};
  app.require_subcommand(1);
  int exit_code = 0;

  // --- bs ------------------------------------------------------------------
  auto* bs = app.add_subcommand("bs", "borrow-save code operations");
  bs->require_subcommand(1);
  std::string code_text;
  bool digits_out = false;

  auto* bs_value = bs->add_subcommand("value", "decode a code to its integer value");
  bs_value->add_option("code", code_text, "code text, pair or digit form")->required();
  bs_value->callback([&] {
    std::cout << bsnet::code_value(bsnet::parse_bs(code_text)) << '\n';
  });

  auto* bs_incr = bs->add_subcommand("incr", "increment a code (width grows by one)");
  bs_incr->add_option("code", code_text, "code text, pair or digit form")->required();
  bs_incr->add_flag("--digits", digits_out, "print digit values instead of bit pairs");
  bs_incr->callback([&] {
    const bsnet::bs_code out = bsnet::bs_increment(bsnet::parse_bs(code_text));
    std::cout << (digits_out ? bsnet::to_digit_string(out)
                             : bsnet::to_pair_string(out))
              << '\n';
  });

  auto* bs_parse = bs->add_subcommand("parse", "parse a code and echo both forms");
  bs_parse->add_option("code", code_text, "code text, pair or digit form")->required();
  bs_parse->callback([&] {
    const bsnet::bs_code c = bsnet::parse_bs(code_text);
    std::cout << "pairs=" << bsnet::to_pair_string(c)
              << " digits=" << bsnet::to_digit_string(c)
              << " value=" << bsnet::code_value(c) << " width=" << c.width()
              << '\n';
  });

  // --- useq / vseq -----------------------------------------------------------
  std::size_t seq_n = 3;
  std::size_t seq_count = 8;

  auto* useq = app.add_subcommand("useq", "print counter terms u(0..count-1)");
  useq->add_option("--n", seq_n, "counter width, >= 3")->required();
  useq->add_option("--count", seq_count, "number of terms")->required();
  useq->callback([&] {
    bsnet::bs_code code = bsnet::u_initial(seq_n);
    for (std::size_t j = 0; j < seq_count; ++j) {
      std::cout << j << ' ' << bsnet::to_pair_string(code) << ' '
                << bsnet::code_value(code) << '\n';
      code = bsnet::u_next(code);
    }
  });

  auto* vseq = app.add_subcommand("vseq", "print v words as trace rows");
  vseq->add_option("--n", seq_n, "counter width, >= 3")->required();
  vseq->add_option("--count", seq_count, "number of rows")->required();
  vseq->callback([&] {
    bsnet::bs_code code = bsnet::u_initial(seq_n);
    for (std::size_t t = 0; t < seq_count; ++t) {
      std::cout << t << ' ' << bsnet::v_trace_line(bsnet::v_from_u(code))
                << '\n';
      code = bsnet::u_next(code);
    }
  });

  // --- mcp run ---------------------------------------------------------------
  auto* mcp = app.add_subcommand("mcp", "memoryless threshold nets");
  mcp->require_subcommand(1);
  auto* mcp_run = mcp->add_subcommand("run", "run a net and print its trace");
  std::optional<std::string> net_file;
  std::optional<std::size_t> theorem1_n;
  std::size_t run_steps = 8;
  std::string style_name = "table2";
  bool summary = false;
  std::size_t max_orbit_steps = std::size_t{1} << 22;
  std::optional<std::string> trace_file;
  mcp_run->add_option("--net", net_file, "net description (JSON)");
  mcp_run->add_option("--theorem1", theorem1_n, "build the counter net of this width");
  mcp_run->add_option("--steps", run_steps, "steps to run (rows 0..steps)");
  mcp_run->add_option("--style", style_name, "trace style: table2, csv or json");
  mcp_run->add_flag("--summary", summary, "print the orbit summary as JSON instead of the trace");
  mcp_run->add_option("--max-steps", max_orbit_steps, "orbit search budget for --summary");
  mcp_run->add_option("--trace-file", trace_file, "also write the rows, one rendered state per line");
  mcp_run->callback([&] {
    bsnet::net_with_state built = [&] {
      if (net_file && theorem1_n)
        throw bsnet::parse_error("--net and --theorem1 are mutually exclusive");
      if (net_file) return bsnet::mcp_net_from_json(bsnet::load_json_file(*net_file));
      if (theorem1_n) return bsnet::build_theorem1_net(*theorem1_n);
      throw bsnet::parse_error("one of --net or --theorem1 is required");
    }();
    const auto step = [&](const bsnet::configuration& c) {
      return bsnet::mcp_step(built.net, c);
    };
    if (summary) {
      const auto orbit = bsnet::detect_orbit(
          step, built.init, max_orbit_steps,
          [](const bsnet::configuration& c) { return c.packed(); },
          bsnet::orbit_options{trace_file.has_value(), false});
      std::cout << bsnet::orbit_json(orbit.transient, orbit.cycle, orbit.steps,
                                     built.net.size())
                       .dump()
                << '\n';
      maybe_write_trace(trace_file, orbit.trace);
    } else {
      const auto rows = bsnet::iterate_map(step, built.init, run_steps + 1);
      std::cout << bsnet::format_trace(rows, style_from_name(style_name),
                                       built.net.size());
      maybe_write_trace(trace_file, rows);
    }
  });

  // --- caianiello run ----------------------------------------------------------
  auto* cai = app.add_subcommand("caianiello", "threshold nets with memory");
  cai->require_subcommand(1);
  auto* cai_run = cai->add_subcommand("run", "run a memory net and print its state sequence");
  std::optional<std::size_t> cai_n, cai_k;
  std::optional<std::string> cai_params_file;
  std::optional<std::string> cai_net_file;
  cai_run->add_option("--n", cai_n, "counter width of the built net, >= 3");
  cai_run->add_option("--k", cai_k, "memory depth of the built net, >= 1");
  cai_run->add_option("--params", cai_params_file, "family parameters and optional x0 (JSON)");
  cai_run->add_option("--net", cai_net_file, "memory net description (JSON)");
  cai_run->add_option("--steps", run_steps, "last state index to print (rows 0..steps)");
  cai_run->add_option("--style", style_name, "trace style: table2, csv or json");
  cai_run->add_flag("--summary", summary, "print the window-orbit summary as JSON instead of the trace");
  cai_run->add_option("--max-steps", max_orbit_steps, "orbit search budget for --summary");
  cai_run->add_option("--trace-file", trace_file, "also write the rows, one rendered state per line");
  cai_run->callback([&] {
    bsnet::memory_net_with_window sim = [&]() -> bsnet::memory_net_with_window {
      if (cai_net_file) {
        if (cai_n || cai_k)
          throw bsnet::parse_error("--net excludes --n and --k");
        return bsnet::memory_net_from_json(bsnet::load_json_file(*cai_net_file));
      }
      if (!cai_n || !cai_k)
        throw bsnet::parse_error("either --net or both --n and --k are required");
      family_config cfg;
      if (cai_params_file) cfg = load_family_config(*cai_params_file);
      const bsnet::configuration x0 =
          cfg.x0_bits ? bsnet::configuration::from_bits(*cfg.x0_bits)
                      : bsnet::counter_initial_state(*cai_n * *cai_k);
      return {bsnet::build_simulating_net(*cai_n, *cai_k, cfg.params),
              bsnet::build_initial_memory(*cai_n, *cai_k, x0)};
    }();
    if (summary) {
      const auto orbit = bsnet::detect_orbit(
          [&](const bsnet::memory_window& w) {
            bsnet::memory_window next = w;
            next.push(bsnet::caianiello_step(sim.net, w));
            return next;
          },
          sim.window, max_orbit_steps,
          [](const bsnet::memory_window& w) { return w.packed(); });
      std::cout << bsnet::orbit_json(orbit.transient, orbit.cycle, orbit.steps,
                                     sim.net.size() * sim.net.memory())
                       .dump()
                << '\n';
      if (trace_file) {
        const auto rows = bsnet::y_sequence(
            sim.net, sim.window, orbit.transient + orbit.cycle + 1);
        maybe_write_trace(trace_file, rows);
      }
    } else {
      const auto rows = bsnet::y_sequence(sim.net, sim.window, run_steps + 1);
      std::cout << bsnet::format_trace(rows, style_from_name(style_name),
                                       sim.net.size());
      maybe_write_trace(trace_file, rows);
    }
  });

  // --- align ------------------------------------------------------------------
  auto* align = app.add_subcommand("align", "check the k-step simulation alignment");
  std::size_t align_n = 3, align_k = 1;
  std::uint64_t align_horizon = 64;
  std::optional<std::string> align_params_file;
  bool align_json = false;
  align->add_option("--n", align_n, "counter width, >= 3")->required();
  align->add_option("--k", align_k, "memory depth, >= 1")->required();
  align->add_option("--horizon", align_horizon, "epochs of the fast net to check")->required();
  align->add_option("--params", align_params_file, "family parameters and optional x0 (JSON)");
  align->add_flag("--json", align_json, "machine-readable output");
  align->callback([&] {
    family_config cfg;
    if (align_params_file) cfg = load_family_config(*align_params_file);
    const bsnet::configuration x0 =
        cfg.x0_bits ? bsnet::configuration::from_bits(*cfg.x0_bits)
                    : bsnet::counter_initial_state(align_n * align_k);
    const bsnet::alignment_report report =
        bsnet::alignment_check(align_n, align_k, cfg.params, x0, align_horizon);
    if (align_json) {
      nlohmann::json line = {{"ok", report.ok}, {"horizon", report.horizon}};
      if (report.mismatch) {
        line["t"] = report.mismatch->t;
        line["i"] = report.mismatch->i;
        line["j"] = report.mismatch->j;
        line["fast"] = report.mismatch->mcp_value;
        line["memory"] = report.mismatch->memory_value;
      }
      std::cout << line.dump() << '\n';
    } else if (report.ok) {
      std::cout << "alignment ok over horizon " << report.horizon << '\n';
    } else {
      const auto& m = *report.mismatch;
      std::cout << "alignment mismatch at t=" << m.t << " i=" << m.i
                << " j=" << m.j << ": fast=" << m.mcp_value
                << " memory=" << m.memory_value << '\n';
    }
    if (!report.ok) exit_code = 1;
  });

  // --- verify -----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->require_subcommand(1);
  bool as_json = false;
  bool timing = false;
  std::string n_range_text, k_range_text;
  std::uint64_t seed = 12345;
  std::size_t cases = 100;
  std::size_t prop2_nmax = 4, prop2_kmax = 4;

  const auto run_suite = [&](std::vector<bsnet::verification_report> reports) {
    print_reports(reports, as_json, timing);
    if (!bsnet::all_pass(reports)) exit_code = 1;
  };

  auto* v_table2 = verify->add_subcommand("table2", "golden 9-row trace of the n=3 net");
  v_table2->callback([&] {
    if (!as_json) {
      const bsnet::net_with_state built = bsnet::build_theorem1_net(3);
      const auto rows = bsnet::iterate_map(
          [&](const bsnet::configuration& c) {
            return bsnet::mcp_step(built.net, c);
          },
          built.init, 9);
      std::cout << bsnet::format_trace(rows, bsnet::trace_style::table2);
    }
    run_suite(bsnet::verify_table2());
  });

  auto* v_theorem1 = verify->add_subcommand("theorem1", "cycle length 2^n for each n");
  v_theorem1->add_option("--n", n_range_text, "width range a..b (default 3..12)");
  v_theorem1->callback([&] {
    const range r = n_range_text.empty() ? range{3, 12} : parse_range(n_range_text);
    run_suite(bsnet::verify_theorem1(r.lo, r.hi, env_workers()));
  });

  auto* v_corollary1 = verify->add_subcommand("corollary1", "memory-net cycle length k*2^(nk)");
  v_corollary1->add_option("--n", n_range_text, "width or range a..b");
  v_corollary1->add_option("--k", k_range_text, "memory depth or range a..b");
  v_corollary1->callback([&] {
    std::vector<bsnet::corollary_point> points;
    if (n_range_text.empty() && k_range_text.empty()) {
      points = bsnet::default_corollary_grid();
    } else {
      if (n_range_text.empty() || k_range_text.empty())
        throw bsnet::parse_error("corollary1 needs both --n and --k (or neither)");
      const range rn = parse_range(n_range_text);
      const range rk = parse_range(k_range_text);
      for (std::size_t n = rn.lo; n <= rn.hi; ++n)
        for (std::size_t k = rk.lo; k <= rk.hi; ++k) points.push_back({n, k});
    }
    run_suite(bsnet::verify_corollary1(points, env_workers()));
  });

  auto* v_lemmas = verify->add_subcommand("lemmas", "counter and word sequence checks");
  v_lemmas->add_option("--n", n_range_text, "width range a..b (default 3..10)");
  v_lemmas->callback([&] {
    const range r = n_range_text.empty() ? range{3, 10} : parse_range(n_range_text);
    run_suite(bsnet::verify_lemmas(r.lo, r.hi));
  });

  auto* v_prop1 = verify->add_subcommand("prop1", "successor relation equals the decoded route");
  v_prop1->add_option("--n", n_range_text, "width range a..b (default 3..8)");
  v_prop1->callback([&] {
    const range r = n_range_text.empty() ? range{3, 8} : parse_range(n_range_text);
    run_suite(bsnet::verify_prop1(r.lo, r.hi));
  });

  auto* v_prop2 = verify->add_subcommand("prop2", "random simulation campaign");
  v_prop2->add_option("--seed", seed, "RNG seed (fixed default for reproducibility)");
  v_prop2->add_option("--cases", cases, "number of random instances");
  v_prop2->add_option("--nmax", prop2_nmax, "largest counter width");
  v_prop2->add_option("--kmax", prop2_kmax, "largest memory depth");
  v_prop2->callback([&] {
    bsnet::prop2_options opt;
    opt.seed = seed;
    opt.cases = cases;
    opt.n_max = prop2_nmax;
    opt.k_max = prop2_kmax;
    opt.workers = env_workers();
    run_suite(bsnet::verify_prop2(opt));
  });

  for (CLI::App* sub :
       {v_table2, v_theorem1, v_corollary1, v_lemmas, v_prop1, v_prop2}) {
    sub->add_flag("--json", as_json, "one JSON object per report");
    sub->add_flag("--timing", timing, "append runtimes to human-readable lines");
  }

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const bsnet::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
