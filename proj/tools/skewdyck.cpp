#include "skewdyck/automaton.hpp"
#include "skewdyck/closed_form.hpp"
#include "skewdyck/kernel.hpp"
#include "skewdyck/kernel_rl.hpp"
#include "skewdyck/oeis.hpp"
#include "skewdyck/paths.hpp"
#include "skewdyck/render.hpp"
#include "skewdyck/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace skewdyck;

namespace {

enum class Format { Table, Csv, Json, Markdown };

const std::map<std::string, Format> kFormats{
    {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}, {"markdown", Format::Markdown}};

struct Grid {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& out, Format format) const {
    switch (format) {
      case Format::Csv:
        emit_joined(out, header, ",");
        for (const auto& r : rows) emit_joined(out, r, ",");
        break;
      case Format::Markdown: {
        out << "| ";
        emit_joined(out, header, " | ", " |");
        out << "|";
        for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
        out << "\n";
        for (const auto& r : rows) {
          out << "| ";
          emit_joined(out, r, " | ", " |");
        }
        break;
      }
      case Format::Json: {
        auto arr = nlohmann::json::array();
        for (const auto& r : rows) {
          nlohmann::json obj;
          for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
          arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << "\n";
        break;
      }
      case Format::Table: {
        std::vector<std::size_t> width(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
        for (const auto& r : rows)
          for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
          std::string s;
          for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) s += "  ";
            s += std::string(width[i] - cells[i].size(), ' ') + cells[i];
          }
          out << s << "\n";
        };
        line(header);
        for (const auto& r : rows) line(r);
        break;
      }
    }
  }

 private:
  static void emit_joined(std::ostream& out, const std::vector<std::string>& cells,
                          const std::string& sep, const std::string& tail = "") {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? sep : "") << cells[i];
    out << tail << "\n";
  }
};

struct Config {
  int order = kDefaultOrder;
  int t = 2;
  std::string format = "table";
  std::string cache_dir;
  bool offline = false;

  Format fmt() const { return kFormats.at(format); }
};

void add_order(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--order", cfg.order, "Series truncation: coefficients known below z^ORDER")
      ->check(CLI::Range(8, 100000));
}

void add_t(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--t", cfg.t, "Down-step size t")->check(CLI::Range(2, 64));
}

void add_format(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json", "markdown"}));
}

// ---- count -----------------------------------------------------------------

int cmd_count(const Config& cfg, const std::vector<int>& ns) {
  Grid grid{{"t", "n", "count"}, {}};
  const int n_max = *std::max_element(ns.begin(), ns.end());
  const auto all = totals(cfg.t, n_max);
  for (int n : ns)
    grid.rows.push_back({std::to_string(cfg.t), std::to_string(n), all[n].get_str()});
  if (cfg.fmt() == Format::Table && ns.size() == 1) {
    std::cout << grid.rows.front().back() << "\n";
  } else {
    grid.print(std::cout, cfg.fmt());
  }
  return 0;
}

// ---- series ----------------------------------------------------------------

Series select_series(const std::string& which, const Config& cfg) {
  const int p = cfg.order;
  if (which == "g0") return solve_t2(p).g0;
  if (which == "h0") return solve_t2(p).h0;
  if (which == "total") return solve_t2(p).total;
  if (which == "f1") return solve_t2(p).f1;
  if (which == "s4") return good_root(2, p);
  if (which == "s6") return good_root(3, p);
  if (which == "good-root") return good_root(cfg.t, p);
  if (which == "s1") return rl_root_s1(p);
  if (which == "t1") return rl_t1(p);
  if (which == "rl-g0") return rl_g0(p);
  if (which == "R") return r_series(p);
  if (which.rfind("prefix:", 0) == 0) {
    const auto rest = which.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected prefix:<F|G|H>:<k>");
    const Layer layer = parse_layer(rest.substr(0, colon));
    std::size_t used = 0;
    const std::string kstr = rest.substr(colon + 1);
    const int k = std::stoi(kstr, &used);
    if (used != kstr.size() || k < 0) throw std::invalid_argument("bad level in '" + which + "'");
    return prefix_series_t2(layer, k, p);
  }
  throw std::invalid_argument("unknown series '" + which +
                              "' (g0, h0, total, f1, s4, s6, s1, t1, rl-g0, R, good-root, "
                              "prefix:<F|G|H>:<k>)");
}

int cmd_series(const Config& cfg, const std::string& which) {
  const Series s = select_series(which, cfg);
  switch (cfg.fmt()) {
    case Format::Json: {
      nlohmann::json j = s.to_json();
      j["name"] = which;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
    case Format::Markdown: {
      Grid grid{{"exponent", "coefficient"}, {}};
      for (int e = s.valuation(); e < s.precision(); ++e)
        grid.rows.push_back({std::to_string(e), rational_to_string(s.coeff(e))});
      grid.print(std::cout, cfg.fmt());
      break;
    }
    case Format::Table: {
      std::cout << which << " = " << s.to_string() << "\n";
      std::cout << "coefficients z^" << s.valuation() << "..z^" << s.precision() - 1 << ": ";
      for (int e = s.valuation(); e < s.precision(); ++e)
        std::cout << (e == s.valuation() ? "" : ", ") << s.coeff(e).get_str();
      std::cout << "\n";
      break;
    }
  }
  return 0;
}

// ---- render ----------------------------------------------------------------

int cmd_render(int t, int n, const std::string& mode, const std::string& format, bool mirror,
               const std::string& out_path) {
  auto words = enumerate(t, n, true);
  RenderOptions options;
  options.mirror = mirror;
  if (mode == "plain") {
    options.geometry = GeometryMode::Unstretched;
    std::erase_if(words, [](const SkewWord& w) {
      return std::find(w.steps().begin(), w.steps().end(), Step::L) != w.steps().end();
    });
  } else if (mode == "skew") {
    options.geometry = GeometryMode::RedOverlay;
  } else {
    options.geometry = GeometryMode::LeftStep;
  }
  options.caption = "Closed paths of length " + std::to_string(n) + " (t = " + std::to_string(t) +
                    "): " + std::to_string(words.size());
  const std::string doc =
      format == "svg" ? render_svg(words, options) : render_tikz(words, options);
  if (out_path.empty() || out_path == "-") {
    std::cout << doc;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << doc)) throw std::runtime_error("cannot write " + out_path);
  }
  std::cerr << "diagrams: " << words.size() << "\n";
  return 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const Config& cfg, const std::vector<int>& ts) {
  VerifyOptions options;
  options.order = cfg.order;
  options.t_values = ts;
  const auto report = run_verification(options);
  if (cfg.fmt() == Format::Json) {
    nlohmann::json j;
    j["order"] = cfg.order;
    j["t"] = ts;
    j["passed"] = report.passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks)
      j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["notes"] = report.notes;
    j["adjudication"] = report.adjudication;
    std::cout << j.dump(2) << "\n";
  } else {
    report.print(std::cout);
  }
  return report.passed() ? 0 : 1;
}

// ---- oeis ------------------------------------------------------------------

int cmd_oeis(const Config& cfg, const std::string& id, int n_max) {
  oeis::LoadOptions options;
  if (!cfg.cache_dir.empty()) options.cache_dir = cfg.cache_dir;
  options.offline = cfg.offline;
  const auto loaded = oeis::load_sequence(id, options);
  const auto rows = oeis::compare(loaded.entries, n_max);
  auto flag = [](bool present, bool ok) { return !present ? std::string("-") : ok ? "yes" : "NO"; };
  Grid grid{{"n", loaded.id, "DP(3n)", "R", "oeis=DP", "oeis=R"}, {}};
  for (const auto& r : rows) {
    grid.rows.push_back({std::to_string(r.n), r.oeis ? r.oeis->get_str() : "-", r.dp_total.get_str(),
                         r.r_coeff.get_str(), flag(r.oeis.has_value(), r.matches_dp()),
                         flag(r.oeis.has_value(), r.matches_r())});
  }
  if (cfg.fmt() == Format::Table) std::cout << "# source: " << loaded.source << "\n";
  grid.print(std::cout, cfg.fmt());
  return 0;
}

// ---- table / report --------------------------------------------------------

int cmd_table(const Config& cfg, int n_max, int k_max, const std::string& direction) {
  const auto dir = direction == "RL" ? Direction::RightToLeft : Direction::LeftToRight;
  const auto table = dp_counts(cfg.t, n_max, k_max, dir);
  if (cfg.fmt() == Format::Json) {
    std::cout << table.to_json().dump(2) << "\n";
  } else if (cfg.fmt() == Format::Csv) {
    std::cout << table.to_csv();
  } else {
    Grid grid{{"n", "k", "layer", "count"}, {}};
    for (int n = 0; n <= table.n_max(); ++n)
      for (int k = 0; k <= table.k_max(); ++k)
        for (Layer l : kLayers)
          if (const auto& c = table.at(n, k, l); c != 0)
            grid.rows.push_back({std::to_string(n), std::to_string(k), std::string(1, layer_char(l)),
                                 c.get_str()});
    grid.print(std::cout, cfg.fmt());
  }
  return 0;
}

int cmd_report(const Config& cfg, int n_max) {
  const auto rows = discrepancy_report(n_max);
  switch (cfg.fmt()) {
    case Format::Json:
      std::cout << report_json(rows).dump(2) << "\n";
      break;
    case Format::Markdown:
      std::cout << report_markdown(rows);
      break;
    default: {
      Grid grid{{"n", "length", "R", "Narayana", "kernel", "DP", "R=DP"}, {}};
      for (const auto& r : rows)
        grid.rows.push_back({std::to_string(r.n), std::to_string(3 * r.n), r.r_coeff.get_str(),
                             r.narayana_value.get_str(), r.kernel_total.get_str(),
                             r.dp_total.get_str(), r.r_matches_dp() ? "yes" : "NO"});
      grid.print(std::cout, cfg.fmt());
      if (cfg.fmt() == Format::Table) std::cout << adjudication_line(rows) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and generating functions for skew t-Dyck paths"};
  app.require_subcommand(1);
  Config cfg;

  auto* count = app.add_subcommand("count", "Number of closed paths of a given length");
  int count_n = -1;
  int from = -1;
  int to = -1;
  add_t(count, cfg);
  add_format(count, cfg);
  auto* n_opt = count->add_option("--n", count_n, "Path length")->check(CLI::NonNegativeNumber);
  auto* from_opt = count->add_option("--from", from, "First length")->check(CLI::NonNegativeNumber);
  auto* to_opt = count->add_option("--to", to, "Last length")->check(CLI::NonNegativeNumber);
  from_opt->needs(to_opt);
  to_opt->needs(from_opt);
  n_opt->excludes(from_opt)->excludes(to_opt);

  auto* series = app.add_subcommand("series", "Print a generating function as a truncated series");
  std::string which;
  series->add_option("which", which, "g0|h0|total|f1|s4|s6|s1|t1|rl-g0|R|good-root|prefix:<F|G|H>:<k>")
      ->required();
  add_order(series, cfg);
  add_t(series, cfg);
  add_format(series, cfg);

  auto* render = app.add_subcommand("render", "Draw all closed paths of a given length");
  int render_n = 0;
  std::string mode = "skew";
  std::string render_format = "tikz";
  bool mirror = false;
  std::string out_path;
  add_t(render, cfg);
  render->add_option("--n", render_n, "Path length")->required()->check(CLI::NonNegativeNumber);
  render->add_option("--mode", mode, "plain (no L steps), skew (red overlay) or left (L drawn leftward)")
      ->check(CLI::IsMember({"plain", "skew", "left"}));
  render->add_option("--format", render_format, "Document format")->check(CLI::IsMember({"svg", "tikz"}));
  render->add_flag("--mirror", mirror, "Reflect diagrams for the right-to-left reading");
  render->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Cross-check every closed form against the DP oracle");
  std::vector<int> verify_ts{2};
  add_order(verify, cfg);
  add_format(verify, cfg);
  verify->add_option("--t", verify_ts, "Comma-separated values of t")
      ->delimiter(',')
      ->check(CLI::Range(2, 64));

  auto* oeis_cmd = app.add_subcommand("oeis", "Compare an OEIS sequence with the path counts");
  std::string seq_id;
  int oeis_n_max = 7;
  oeis_cmd->add_option("id", seq_id, "Sequence id, e.g. A007564")->required();
  oeis_cmd->add_option("--n-max", oeis_n_max, "Largest index compared")->check(CLI::Range(0, 10000));
  oeis_cmd->add_option("--cache-dir", cfg.cache_dir, "b-file cache (default $SKEWDYCK_CACHE_DIR)");
  oeis_cmd->add_flag("--offline", cfg.offline, "Use only cached or bundled data");
  add_format(oeis_cmd, cfg);

  auto* table = app.add_subcommand("table", "Export the DP prefix-count table");
  int table_n = 12;
  int table_k = -1;
  std::string direction = "LR";
  add_t(table, cfg);
  add_format(table, cfg);
  table->add_option("--n-max", table_n, "Largest path length")->check(CLI::Range(0, 2000));
  table->add_option("--k-max", table_k, "Largest level (default: all reachable)");
  table->add_option("--direction", direction, "Reading direction")->check(CLI::IsMember({"LR", "RL"}));

  auto* report = app.add_subcommand("report", "R, Narayana, kernel and DP side by side");
  int report_n = 10;
  add_format(report, cfg);
  report->add_option("--n-max", report_n, "Largest index n (length 3n)")->check(CLI::Range(1, 1000));

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) {
      std::vector<int> ns;
      if (count_n >= 0) {
        ns.push_back(count_n);
      } else if (from >= 0) {
        if (to < from) throw CLI::ValidationError("--to must be >= --from");
        for (int n = from; n <= to; ++n) ns.push_back(n);
      } else {
        throw CLI::RequiredError("--n or --from/--to");
      }
      return cmd_count(cfg, ns);
    }
    if (series->parsed()) return cmd_series(cfg, which);
    if (render->parsed()) return cmd_render(cfg.t, render_n, mode, render_format, mirror, out_path);
    if (verify->parsed()) return cmd_verify(cfg, verify_ts);
    if (oeis_cmd->parsed()) return cmd_oeis(cfg, seq_id, oeis_n_max);
    if (table->parsed()) return cmd_table(cfg, table_n, table_k, direction);
    if (report->parsed()) return cmd_report(cfg, report_n);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
