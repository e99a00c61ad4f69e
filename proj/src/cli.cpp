#include "ocrank/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>

#include "ocrank/genfun.hpp"
#include "ocrank/identities.hpp"

namespace ocrank {

namespace {

constexpr const char* kEmpty = "∅";

std::string or_empty(const Partition& p) { return p.empty() ? kEmpty : p.to_string(); }

std::vector<std::string> statistic_choices() {
  std::vector<std::string> names;
  for (Statistic s : all_statistics()) names.emplace_back(statistic_name(s));
  names.emplace_back("blo");
  return names;
}

std::vector<std::string> builder_choices() {
  std::vector<std::string> names;
  for (std::string_view s : builder_names()) names.emplace_back(s);
  return names;
}

std::vector<std::string> identity_choices() {
  std::vector<std::string> ids;
  for (const auto& spec : registry()) ids.push_back(spec.id);
  return ids;
}

}  // namespace

std::string counts_to_json(const CountTable& table) {
  std::string s = "{";
  bool first = true;
  for (const auto& [m, c] : table.counts) {
    if (!first) s += ",";
    first = false;
    s += "\"" + std::to_string(m) + "\":" + c.get_str();
  }
  return s + "}";
}

std::string counts_to_tsv(const CountTable& table) {
  std::string s = "value\tcount\n";
  for (const auto& [m, c] : table.counts) s += std::to_string(m) + "\t" + c.get_str() + "\n";
  return s;
}

std::string series_to_text(const QSeries& s) {
  std::string text;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    text += "q^" + std::to_string(n) + ": " + s.coeff(n).to_pair_list() + "\n";
  }
  return text;
}

std::string series_to_json(const std::string& name, const QSeries& s) {
  std::string text = "{\"name\":\"" + name + "\",\"order\":" + std::to_string(s.order()) + ",\"coefficients\":[";
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (n > 0) text += ",";
    text += s.coeff(n).to_json_pairs();
  }
  return text + "]}";
}

std::string render_table(int which) {
  std::ostringstream os;
  switch (which) {
    case 1:
      os << "overpartition\tpi1\tlambda(pi1)\tpi2\tcrank(pi2)\tcrank1\n";
      for (const auto& op : gen_overpartitions(3)) {
        const bool plain_empty = op.plain.empty();
        os << op.to_string() << '\t' << or_empty(op.overlined) << '\t'
           << (plain_empty ? std::to_string(lambda_stat(op.overlined)) : "") << '\t' << or_empty(op.plain) << '\t'
           << (plain_empty ? "" : std::to_string(crank(op.plain))) << '\t' << crank1(op) << '\n';
      }
      break;
    case 2: {
      os << "overpartition\tcrank(non-overlined parts)\n";
      const Partition single_one({1});
      std::vector<std::string> adjusted;
      for (const auto& op : gen_overpartitions(3)) {
        if (op.plain == single_one) {
          adjusted.push_back(op.to_string());
          continue;
        }
        os << op.to_string() << '\t' << (op.plain.empty() ? 0 : crank(op.plain)) << '\n';
      }
      for (const auto& row : adjusted) {
        os << "# " << row << ": contributes -1 at m=0 and +1 at m=-1 and m=1\n";
      }
      break;
    }
    case 3:
      os << "overpartition\tpi1\tkappa(pi1)\tpi2\tcrank(pi2/2)\tcrank2\n";
      for (const auto& op : gen_overpartitions(4)) {
        const OverTriple t = to_triple(op);
        os << op.to_string() << '\t' << or_empty(t.overlined) << '\t'
           << (t.overlined.empty() ? "" : std::to_string(kappa_stat(t.overlined))) << '\t' << or_empty(t.plain_even)
           << '\t' << (t.plain_even.empty() ? "" : std::to_string(crank(halved(t.plain_even)))) << '\t' << crank2(op)
           << '\n';
      }
      break;
    default:
      throw std::invalid_argument("table must be 1, 2 or 3");
  }
  return os.str();
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Overpartition crank statistics and identity verification", "ocrank"};
  app.require_subcommand(1);

  int counts_n = 0;
  std::string counts_stat;
  std::string counts_format = "json";
  std::optional<int> counts_mod;
  auto* counts = app.add_subcommand("counts", "Tally a statistic over the objects of size n");
  counts->add_option("--n", counts_n, "Size")->required()->check(CLI::NonNegativeNumber);
  counts->add_option("--stat", counts_stat, "Statistic")->required()->check(CLI::IsMember(statistic_choices()));
  counts->add_option("--format", counts_format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  counts->add_option("--mod", counts_mod, "Reduce values modulo m")->check(CLI::PositiveNumber);

  int table_which = 0;
  auto* table = app.add_subcommand("table", "Reproduce a worked table of statistics");
  table->add_option("--paper", table_which, "Table number")->required()->check(CLI::IsMember({1, 2, 3}));

  std::string series_name;
  std::size_t series_order = 0;
  std::string series_format = "text";
  auto* series = app.add_subcommand("series", "Print a truncated generating function");
  series->add_option("--name", series_name, "Builder")->required()->check(CLI::IsMember(builder_choices()));
  series->add_option("--order", series_order, "Truncation order")->required();
  series->add_option("--format", series_format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string verify_id;
  bool verify_all = false;
  std::optional<std::size_t> verify_order;
  unsigned verify_jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities; one JSON report per line");
  auto* id_opt =
      verify_cmd->add_option("--id", verify_id, "Identity id")->check(CLI::IsMember(identity_choices()));
  auto* all_opt = verify_cmd->add_flag("--all", verify_all, "Check every identity");
  id_opt->excludes(all_opt);
  verify_cmd->add_option("--order", verify_order, "Truncation order (default: per identity)");
  verify_cmd->add_option("--jobs", verify_jobs, "Parallel workers")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (counts->parsed()) {
      CountTable result =
          counts_stat == "blo" ? blo_modified_count(counts_n) : count_statistic(counts_n, parse_statistic(counts_stat));
      if (counts_mod) result = reduce_mod(result, *counts_mod);
      out << (counts_format == "json" ? counts_to_json(result) + "\n" : counts_to_tsv(result));
      return kExitOk;
    }
    if (table->parsed()) {
      out << render_table(table_which);
      return kExitOk;
    }
    if (series->parsed()) {
      const QSeries s = series_by_name(series_name, series_order);
      out << (series_format == "json" ? series_to_json(series_name, s) + "\n" : series_to_text(s));
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      if (!verify_all && verify_id.empty()) {
        err << "verify: pass --id <identity> or --all\n";
        return kExitUsage;
      }
      const std::vector<std::string> ids = verify_all ? identity_choices() : std::vector<std::string>{verify_id};
      bool all_hold = true;
      for (const auto& report : verify_many(ids, verify_order, verify_jobs)) {
        out << report.to_json() << '\n';
        all_hold = all_hold && report.holds;
      }
      return all_hold ? kExitOk : kExitMismatch;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("ocrank");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ocrank
