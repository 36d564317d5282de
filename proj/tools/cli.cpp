#include "cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "quasi/quasi.h"

namespace quasicalc {

namespace {

struct Command_ {
  const char* name;
  Command command;
  const char* help;
  bool needs_sigma;
};

constexpr Command_ kCommands[] = {
    {"classes", Command::classes, "Conjugacy classes", false},
    {"chartab", Command::chartab, "Character table", false},
    {"gnz", Command::gnz, "Orbits of commuting n-tuples", false},
    {"lambda-basis", Command::lambda_basis, "Basis of R Lambda_G(sigma), or (V)_sigma with --rep", true},
    {"faithful", Command::faithful, "Kernels of (V)_sigma and its faithful extensions", true},
    {"sfixed", Command::sfixed, "Fixed-point verdict for <sigma> against H (all subgroups if omitted)", true},
    {"quasi", Command::quasi, "Coefficient table of the quasi-theory at a point", false},
};

struct Guard {
  qt_context* ctx = nullptr;
  qt_group* group = nullptr;
  char* text = nullptr;
  ~Guard() {
    qt_string_free(text);
    qt_group_destroy(group);
    qt_context_destroy(ctx);
  }
};

}  // namespace

ParseResult parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Exact coefficient rings of quasi-theories for finite groups", "quasicalc"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string format = "text";
  std::map<CLI::App*, const Command_*> subs;
  std::string sigma, h, rep;

  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--group", cfg.group, "Builtin name (cyclic:k, dihedral:k, symmetric:k, alternating:k, "
                                          "quaternion8) or group file")
        ->required();
    sub->add_option("-n", cfg.n, "Tuple length")->check(CLI::PositiveNumber);
    sub->add_option("--sigma", sigma, "Tuple of element labels");
    sub->add_option("--H", h, "Generators of the subgroup H");
    sub->add_option("--rep", rep, "Representation: chiK, regular, trivial, perm, sums with '+'");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 64u));
    sub->add_option("--max-order", cfg.max_order, "Cap on group order")->check(CLI::PositiveNumber);
    subs[sub] = &c;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    ParseResult r;
    r.exit_code = code == 0 ? 0 : 2;
    r.message = code == 0 ? out.str() : err.str();
    return r;
  }

  const Command_* chosen = nullptr;
  for (auto [sub, c] : subs)
    if (sub->parsed()) chosen = c;
  cfg.command = chosen->command;
  cfg.json = format == "json";
  for (auto [sub, c] : subs) {
    if (!sub->parsed()) continue;
    if (sub->count("--sigma")) cfg.sigma = sigma;
    if (sub->count("--H")) cfg.h = h;
    if (sub->count("--rep")) cfg.rep = rep;
  }
  if (chosen->needs_sigma && !cfg.sigma) {
    ParseResult r;
    r.exit_code = 2;
    r.message = std::string("error: ") + chosen->name + " requires --sigma\n";
    return r;
  }
  ParseResult r;
  r.config = cfg;
  return r;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  Guard g;
  g.ctx = qt_context_create();
  if (!g.ctx) {
    err << "error: out of memory\n";
    return 1;
  }
  auto fail = [&](qt_status st) {
    err << "error: " << qt_status_string(st) << ": " << qt_last_error(g.ctx) << '\n';
    return 1;
  };

  qt_status st = qt_context_set_max_order(g.ctx, config.max_order);
  if (st == QT_OK) st = qt_context_set_threads(g.ctx, config.threads);
  if (st == QT_OK) st = qt_group_load(g.ctx, config.group.c_str(), &g.group);
  if (st != QT_OK) return fail(st);

  const qt_format fmt = config.json ? QT_FORMAT_JSON : QT_FORMAT_TEXT;
  auto opt = [](const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; };
  switch (config.command) {
    case Command::classes: st = qt_report_classes(g.ctx, g.group, fmt, &g.text); break;
    case Command::chartab: st = qt_report_chartab(g.ctx, g.group, fmt, &g.text); break;
    case Command::gnz: st = qt_report_gnz(g.ctx, g.group, config.n, fmt, &g.text); break;
    case Command::lambda_basis:
      st = qt_report_lambda_basis(g.ctx, g.group, opt(config.sigma), opt(config.rep), fmt, &g.text);
      break;
    case Command::faithful:
      st = qt_report_faithful(g.ctx, g.group, opt(config.sigma), opt(config.rep), fmt, &g.text);
      break;
    case Command::sfixed: st = qt_report_sfixed(g.ctx, g.group, opt(config.sigma), opt(config.h), fmt, &g.text); break;
    case Command::quasi: st = qt_report_quasi(g.ctx, g.group, config.n, fmt, &g.text); break;
  }
  if (st != QT_OK) return fail(st);
  out << g.text;
  return 0;
}

}  // namespace quasicalc
