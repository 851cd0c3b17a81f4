#include "ogpush/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ogpush/exprparse.hpp"
#include "ogpush/ktheory.hpp"

namespace ogpush::cli {

namespace {

using nlohmann::ordered_json;

bool check_n(int n, int max_n, std::ostream& err) {
  if (n < 1) {
    err << "error: n must be positive\n";
    return false;
  }
  if (n > max_n) {
    err << "error: n = " << n << " exceeds the safety bound " << max_n << " (raise it with --max-n)\n";
    return false;
  }
  return true;
}

ordered_json coeff_map(const std::map<Partition, Rat>& coeffs) {
  ordered_json j = ordered_json::object();
  for (const auto& [p, c] : coeffs) j[p.to_string()] = c.get_str();
  return j;
}

std::string partition_text(const std::vector<int>& parts) {
  std::string s = "s[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

std::vector<int> parse_partition_list(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::SyntaxError, "partition entry '" + item + "' is not an integer");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw Error(ErrorCode::SyntaxError, "partition entry '" + item + "' is not an integer");
    parts.push_back(v);
  }
  if (parts.empty()) throw Error(ErrorCode::SyntaxError, "empty partition");
  return parts;
}

}  // namespace

int cmd_push(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!check_n(config.n, config.max_n, err)) return kExitInputError;
  const int n = config.n;

  std::optional<CharClass> phi;
  std::optional<Partition> schur_label;
  std::string class_text;
  try {
    if (config.partition) {
      schur_label = Partition(*config.partition, n);
      class_text = partition_text(schur_label->parts());
      phi.emplace(schur_z(*schur_label));
    } else {
      class_text = config.class_text;
      const auto ast = parse_class_expr(config.class_text, n);
      schur_label = single_schur_atom(*ast, n);
      phi.emplace(elaborate(*ast, n));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  std::vector<Route> routes{Route::Oracle};
  for (Route r : config.routes) {
    if (r == Route::Dp && config.component != Component::Full) {
      err << "error: route dp requires --component full\n";
      return kExitInputError;
    }
    if (r == Route::Closed && (config.component == Component::Full || !schur_label)) {
      err << "error: route closed requires a single Schur class and --component plus or minus\n";
      return kExitInputError;
    }
    if (std::find(routes.begin(), routes.end(), r) == routes.end()) routes.push_back(r);
  }

  std::vector<std::pair<Route, MultiPoly>> results;
  T2Expansion expansion;
  try {
    for (Route r : routes) results.emplace_back(r, compute_route(*phi, config.component, r, schur_label));
    expansion = schur_t2_expand(results.front().second);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDisagreement;
  }
  bool agreement = true;
  for (const auto& [r, value] : results) agreement = agreement && value == results.front().second;

  if (config.format == OutputFormat::Json) {
    ordered_json j;
    j["n"] = n;
    j["component"] = to_string(config.component);
    j["class"] = class_text;
    ordered_json routes_json = ordered_json::object();
    for (const auto& [r, value] : results) routes_json[to_string(r)] = format_poly(value);
    j["routes"] = routes_json;
    j["agreement"] = agreement;
    ordered_json t2 = coeff_map(expansion.even);
    t2["with_t_factor"] = coeff_map(expansion.with_t_factor);
    j["schur_t2"] = t2;
    out << j.dump(2) << "\n";
  } else {
    out << "n = " << n << ", component = " << to_string(config.component) << ", class = " << class_text << "\n";
    for (const auto& [r, value] : results) out << to_string(r) << ": " << format_poly(value) << "\n";
    out << "agreement: " << (agreement ? "yes" : "NO") << "\n";
    for (const auto& [mu, c] : expansion.even) out << "schur_t2: " << c.get_str() << " * s[" << mu.to_string() << "](t^2)\n";
    for (const auto& [nu, c] : expansion.with_t_factor) {
      out << "schur_t2: " << c.get_str() << " * t1...t" << n << " * s[" << nu.to_string() << "](t^2)\n";
    }
  }
  if (!agreement) {
    err << "error: routes disagree\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int cmd_table(const TableConfig& config, std::ostream& out, std::ostream& err) {
  if (!check_n(config.n, config.max_n, err)) return kExitInputError;
  if (config.component == Component::Full) {
    err << "error: the closed form exists for --component plus or minus only\n";
    return kExitInputError;
  }
  if (config.bound < 0) {
    err << "error: bound must be nonnegative\n";
    return kExitInputError;
  }
  const int n = config.n;
  bool all_match = true;
  ordered_json rows = ordered_json::array();
  if (config.format != OutputFormat::Json) out << "lambda,oracle,closed,case,mu,match\n";
  for (const auto& lambda : partitions_in_box(n, config.bound)) {
    const MultiPoly oracle = localize_pushforward(CharClass(schur_z(lambda)), config.component);
    const MultiPoly closed = schur_pushforward_closed(lambda, config.component);
    const ParityCase pc = decompose_parity(lambda);
    const bool match = oracle == closed;
    all_match = all_match && match;
    const std::string mu = pc.mu ? pc.mu->to_string() : "";
    if (config.format == OutputFormat::Json) {
      ordered_json row;
      row["lambda"] = lambda.to_string();
      row["oracle"] = format_poly(oracle);
      row["closed"] = format_poly(closed);
      row["case"] = to_string(pc.tag);
      row["mu"] = pc.mu ? ordered_json(mu) : ordered_json(nullptr);
      row["match"] = match;
      rows.push_back(row);
    } else {
      out << "\"" << lambda.to_string() << "\"," << format_poly(oracle) << "," << format_poly(closed) << ","
          << to_string(pc.tag) << ",\"" << mu << "\"," << (match ? "true" : "false") << "\n";
    }
  }
  if (config.format == OutputFormat::Json) out << rows.dump(2) << "\n";
  return all_match ? kExitOk : kExitDisagreement;
}

int cmd_ktheory(const KTheoryConfig& config, std::ostream& out, std::ostream& err) {
  if (!check_n(config.n, config.max_n, err)) return kExitInputError;
  if (config.component != "plus" && config.component != "minus" && config.component != "both") {
    err << "error: --component must be plus, minus or both\n";
    return kExitInputError;
  }
  std::optional<Partition> lambda;
  try {
    lambda = Partition(config.partition, config.n);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const bool last_zero = lambda->parts().back() == 0;
  const bool want_plus = config.component != "minus" || last_zero;
  const bool want_minus = config.component != "plus" || last_zero;

  std::optional<LaurentPoly> plus;
  std::optional<LaurentPoly> minus;
  try {
    if (want_plus) plus = k_localize_pushforward(*lambda, Component::Plus);
    if (want_minus) minus = k_localize_pushforward(*lambda, Component::Minus);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDisagreement;
  }
  std::optional<bool> equal;
  if (plus && minus) equal = *plus == *minus;

  if (config.format == OutputFormat::Json) {
    ordered_json j;
    j["n"] = config.n;
    j["partition"] = lambda->to_string();
    if (config.component != "minus") j["plus"] = format_laurent(*plus);
    if (config.component != "plus") j["minus"] = format_laurent(*minus);
    j["components_equal"] = equal ? ordered_json(*equal) : ordered_json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    if (config.component != "minus") out << "plus: " << format_laurent(*plus) << "\n";
    if (config.component != "plus") out << "minus: " << format_laurent(*minus) << "\n";
    if (equal) out << "components_equal: " << (*equal ? "true" : "false") << "\n";
  }
  if (last_zero && !*equal) {
    err << "error: components differ although the last part of the partition is zero\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant push-forwards from even orthogonal Grassmannians"};
  app.require_subcommand(1);

  RunConfig push;
  std::string push_component = "plus";
  std::string push_routes;
  std::string push_partition;
  std::string push_format = "text";
  std::string push_out;
  auto* push_cmd = app.add_subcommand("push", "push-forward of one class along the selected routes");
  push_cmd->add_option("--n", push.n, "rank n of the tautological bundle")->required();
  push_cmd->add_option("--component", push_component, "plus, minus or full");
  auto* class_opt = push_cmd->add_option("--class", push.class_text, "class expression, e.g. \"s[2,1]\"");
  auto* part_opt = push_cmd->add_option("--partition", push_partition, "Schur class by partition, e.g. 2,1");
  class_opt->excludes(part_opt);
  push_cmd->add_option("--routes", push_routes, "comma list of oracle,long,short,dp,closed");
  push_cmd->add_option("--format", push_format, "text or json");
  push_cmd->add_option("--out", push_out, "write output to a file");
  push_cmd->add_option("--max-n", push.max_n, "safety bound on n");

  TableConfig table;
  std::string table_component = "plus";
  std::string table_format = "csv";
  std::string table_out;
  auto* table_cmd = app.add_subcommand("table", "closed form against localization for every lambda in a box");
  table_cmd->add_option("--n", table.n, "rank n")->required();
  table_cmd->add_option("--bound", table.bound, "largest part")->required();
  table_cmd->add_option("--component", table_component, "plus or minus");
  table_cmd->add_option("--format", table_format, "csv or json");
  table_cmd->add_option("--out", table_out, "write output to a file");
  table_cmd->add_option("--max-n", table.max_n, "safety bound on n");

  KTheoryConfig kt;
  std::string kt_partition;
  std::string kt_format = "text";
  std::string kt_out;
  auto* kt_cmd = app.add_subcommand("ktheory", "K-theoretic push-forward of S_lambda of the dual bundle");
  kt_cmd->add_option("--n", kt.n, "rank n")->required();
  kt_cmd->add_option("--partition", kt_partition, "partition, e.g. 1,1")->required();
  kt_cmd->add_option("--component", kt.component, "plus, minus or both");
  kt_cmd->add_option("--format", kt_format, "text or json");
  kt_cmd->add_option("--out", kt_out, "write output to a file");
  kt_cmd->add_option("--max-n", kt.max_n, "safety bound on n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  auto parse_format = [&](const std::string& s, std::initializer_list<std::pair<const char*, OutputFormat>> allowed,
                          OutputFormat& target) {
    for (const auto& [name, f] : allowed) {
      if (s == name) {
        target = f;
        return true;
      }
    }
    err << "error: unknown format '" << s << "'\n";
    return false;
  };

  // Runs `body` against stdout or the --out file.
  auto with_output = [&](const std::string& path, auto&& body) {
    if (path.empty()) return body(out);
    std::ofstream file(path);
    if (!file) {
      err << "error: cannot open " << path << "\n";
      return kExitInputError;
    }
    return body(file);
  };

  if (push_cmd->parsed()) {
    const auto comp = parse_component(push_component);
    if (!comp) {
      err << "error: unknown component '" << push_component << "'\n";
      return kExitInputError;
    }
    push.component = *comp;
    if (!parse_format(push_format, {{"text", OutputFormat::Text}, {"json", OutputFormat::Json}}, push.format)) {
      return kExitInputError;
    }
    if (!push_routes.empty()) {
      push.routes.clear();
      std::stringstream ss(push_routes);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto r = parse_route(item);
        if (!r) {
          err << "error: unknown route '" << item << "'\n";
          return kExitInputError;
        }
        push.routes.push_back(*r);
      }
    }
    if (!push_partition.empty()) {
      try {
        push.partition = parse_partition_list(push_partition);
      } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
      }
    } else if (push.class_text.empty()) {
      err << "error: one of --class or --partition is required\n";
      return kExitInputError;
    }
    return with_output(push_out, [&](std::ostream& os) { return cmd_push(push, os, err); });
  }

  if (table_cmd->parsed()) {
    const auto comp = parse_component(table_component);
    if (!comp) {
      err << "error: unknown component '" << table_component << "'\n";
      return kExitInputError;
    }
    table.component = *comp;
    if (!parse_format(table_format, {{"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}}, table.format)) {
      return kExitInputError;
    }
    return with_output(table_out, [&](std::ostream& os) { return cmd_table(table, os, err); });
  }

  try {
    kt.partition = parse_partition_list(kt_partition);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (!parse_format(kt_format, {{"text", OutputFormat::Text}, {"json", OutputFormat::Json}}, kt.format)) {
    return kExitInputError;
  }
  return with_output(kt_out, [&](std::ostream& os) { return cmd_ktheory(kt, os, err); });
}

}  // namespace ogpush::cli
