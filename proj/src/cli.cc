// Copyright 2026 The spin-census Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spincensus/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spincensus/errors.hpp"
#include "spincensus/graph_io.hpp"
#include "spincensus/parallel.hpp"
#include "spincensus/reduction.hpp"
#include "spincensus/root_census.hpp"
#include "spincensus/theta_counts.hpp"
#include "spincensus/verify.hpp"

namespace spincensus::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void print_table(std::ostream& out, const Table& table) {
  std::vector<std::size_t> widths(table.header.size());
  for (std::size_t c = 0; c < widths.size(); ++c) widths[c] = table.header[c].size();
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) text += "  ";
      text += std::string(widths[c] - cells[c].size(), ' ') + cells[c];
    }
    out << text << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

void print_csv(std::ostream& out, const Table& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c > 0 ? "," : "") << cells[c];
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

// Exact counts go into JSON as decimal strings.
Json big(const BigInt& value) { return to_decimal(value); }

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string join_ids(const std::vector<std::uint32_t>& ids, const std::string& prefix) {
  std::string text = "{";
  for (std::size_t n = 0; n < ids.size(); ++n) text += (n > 0 ? "," : "") + prefix + std::to_string(ids[n]);
  return text + "}";
}

std::string parity_text(const ParityVector& parity) {
  std::string text = "(";
  for (std::size_t v = 0; v < parity.size(); ++v) text += (v > 0 ? "," : "") + std::string(parity.bit(v) ? "1" : "0");
  return text + ")";
}

ParityVector parse_parity(const DualGraph& graph, const std::string& text) {
  if (text == "omega") return omega_parity(graph);
  std::vector<std::uint8_t> bits;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item != "0" && item != "1") throw InvalidInput("parity must be 'omega' or comma-separated bits, got '" + text + "'");
    bits.push_back(item == "1" ? 1 : 0);
  }
  return ParityVector(graph, bits);
}

struct ProfileOptions {
  std::uint32_t genus = 0;
  std::uint32_t tacnodes = 0;
  std::uint32_t cusps = 0;
  std::uint32_t nodes = 0;
  std::string format = "table";
};

int cmd_census(const ProfileOptions& opt, std::ostream& out) {
  if (opt.format == "dot") throw InvalidInput("dot output is only available for graph-producing commands");
  const CurveProfile profile = CurveProfile::create(opt.genus, opt.tacnodes, opt.cusps, opt.nodes);
  const auto rows = census(profile);
  std::optional<IdentityCheck> identity;
  if (profile.nodes() == 0) identity = identity_check(profile);

  Table table{{"i", "j", "k", "h", "count", "multiplicity", "weighted"}, {}};
  for (const CensusRow& row : rows) {
    const auto weighted = row.weighted();
    table.rows.push_back({std::to_string(row.type.i), std::to_string(row.type.j), std::to_string(row.type.k),
                          std::to_string(row.type.h), to_decimal(row.count),
                          row.multiplicity ? to_decimal(*row.multiplicity) : "",
                          weighted ? to_decimal(*weighted) : ""});
  }

  if (opt.format == "csv") {
    print_csv(out, table);
  } else if (opt.format == "json") {
    Json doc;
    doc["profile"] = {{"g", profile.genus()},
                      {"tacnodes", profile.tacnodes()},
                      {"cusps", profile.cusps()},
                      {"nodes", profile.nodes()},
                      {"normalization_genus", profile.normalization_genus()}};
    doc["rows"] = Json::array();
    for (const CensusRow& row : rows) {
      Json item{{"i", row.type.i}, {"j", row.type.j}, {"k", row.type.k}, {"h", row.type.h}, {"count", big(row.count)}};
      item["multiplicity"] = row.multiplicity ? big(*row.multiplicity) : Json(nullptr);
      item["weighted"] = row.multiplicity ? big(*row.weighted()) : Json(nullptr);
      doc["rows"].push_back(std::move(item));
    }
    if (identity) doc["identity"] = {{"lhs", big(identity->lhs)}, {"rhs", big(identity->rhs)}, {"ok", identity->ok}};
    out << doc.dump(2) << '\n';
  } else {
    out << "profile: g=" << profile.genus() << " tacnodes=" << profile.tacnodes() << " cusps=" << profile.cusps()
        << " nodes=" << profile.nodes() << " normalization_genus=" << profile.normalization_genus() << '\n';
    print_table(out, table);
    if (identity) {
      out << "identity: sum m*t = " << to_decimal(identity->lhs) << ", N_" << profile.genus() << " = "
          << to_decimal(identity->rhs) << ": " << pass_fail(identity->ok) << '\n';
    }
  }
  return identity && !identity->ok ? kExitCheckFailed : kExitOk;
}

struct RootsOptions {
  std::string graph_path;
  std::string parity = "omega";
  std::string format = "table";
};

int cmd_roots(const RootsOptions& opt, std::ostream& out) {
  if (opt.format == "dot") throw InvalidInput("dot output is only available for graph-producing commands");
  const DualGraph graph = read_graph_file(opt.graph_path);
  const ParityVector parity = parse_parity(graph, opt.parity);
  const bool canonical = parity == omega_parity(graph);
  const auto entries = full_census(graph, parity);
  const WeightedTotals totals = weighted_totals(entries);
  const std::uint64_t genus = arithmetic_genus(graph);
  const BigInt expected = ipow(4, genus);
  const bool identity_ok = !canonical || totals.classes == expected;

  Table table{{"support_bitmask", "class_count", "multiplicity", "odd", "even", "parity_model"}, {}};
  for (const RootCensusEntry& e : entries) {
    table.rows.push_back({e.support.bitmask(), to_decimal(e.class_count), to_decimal(e.multiplicity),
                          to_decimal(e.odd_count), to_decimal(e.even_count), std::string(to_string(e.parity_model))});
  }

  if (opt.format == "csv") {
    print_csv(out, table);
  } else if (opt.format == "json") {
    Json doc;
    doc["graph"] = {{"vertices", graph.vertex_count()},
                    {"edges", graph.edge_count()},
                    {"genus", genus},
                    {"betti1", betti1(graph)}};
    doc["parity"] = canonical ? Json("omega") : Json(parity_text(parity));
    doc["entries"] = Json::array();
    for (const RootCensusEntry& e : entries) {
      doc["entries"].push_back({{"support_bitmask", e.support.bitmask()},
                                {"class_count", big(e.class_count)},
                                {"multiplicity", big(e.multiplicity)},
                                {"odd", big(e.odd_count)},
                                {"even", big(e.even_count)},
                                {"parity_model", std::string(to_string(e.parity_model))}});
    }
    if (canonical) {
      doc["weighted_total"] = {{"lhs", big(totals.classes)}, {"rhs", big(expected)}, {"ok", identity_ok}};
      doc["weighted_odd"] = big(totals.odd);
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "graph: " << graph.vertex_count() << " vertices, " << graph.edge_count() << " edges, genus " << genus
        << ", b1 " << betti1(graph) << '\n';
    out << "parity: " << (canonical ? "omega " : "") << parity_text(parity) << '\n';
    if (entries.empty()) {
      out << "no admissible subgraphs\n";
    } else {
      print_table(out, table);
    }
    if (canonical) {
      out << "weighted total: sum mult*class = " << to_decimal(totals.classes) << ", 4^" << genus << " = "
          << to_decimal(expected) << ": " << pass_fail(identity_ok) << '\n';
      out << "weighted odd: sum mult*odd = " << to_decimal(totals.odd) << '\n';
    }
  }
  return identity_ok ? kExitOk : kExitCheckFailed;
}

int cmd_reduce(const ProfileOptions& opt, std::ostream& out) {
  const CurveProfile profile = CurveProfile::create(opt.genus, opt.tacnodes, opt.cusps, 0);
  const ReductionGraph reduction = reduction_graph(profile);
  if (opt.format == "dot") {
    out << reduction_to_dot(reduction);
    return kExitOk;
  }
  const BaseChangeOrders orders = base_change_orders(profile);
  const auto fibers = twisted_fibers(profile);
  const SpinCurveCensus spin = spin_curve_census(reduction);
  BigInt partition = 0;
  for (const TwistedSpinFiber& f : fibers) partition += f.twisted_spin_curves;
  const BigInt expected = n_odd(profile.genus());
  const bool partition_ok = partition == expected;
  const std::uint64_t genus = arithmetic_genus(reduction.graph);

  Table table{{"i", "j", "k", "blown_up", "gluings", "even_choices", "orbit", "fiber_size", "cusp_factor", "t",
               "weighted"},
              {}};
  for (const TwistedSpinFiber& f : fibers) {
    table.rows.push_back({std::to_string(f.i), std::to_string(f.j), std::to_string(f.k),
                          join_ids(f.blown_up_tacnodes, "T"), to_decimal(f.gluing_count), to_decimal(f.even_choices),
                          to_decimal(f.automorphism_orbit), to_decimal(f.fiber_size), to_decimal(f.cusp_factor),
                          to_decimal(f.hyperplanes), to_decimal(f.twisted_spin_curves)});
  }

  if (opt.format == "csv") {
    print_csv(out, table);
  } else if (opt.format == "json") {
    Json doc;
    doc["graph"] = Json::parse(graph_to_json(reduction.graph));
    doc["arithmetic_genus"] = genus;
    doc["base_change_order"] = orders.combined;
    doc["fibers"] = Json::array();
    for (const TwistedSpinFiber& f : fibers) {
      doc["fibers"].push_back({{"type", {{"i", f.i}, {"j", f.j}, {"k", f.k}}},
                               {"t", big(f.hyperplanes)},
                               {"fiber_size", big(f.fiber_size * f.cusp_factor)},
                               {"weighted", big(f.twisted_spin_curves)}});
    }
    doc["partition"] = {{"lhs", big(partition)}, {"rhs", big(expected)}, {"ok", partition_ok}};
    doc["twisters"] = Json::array();
    for (const TwisterCensus& t : spin.twisters) {
      doc["twisters"].push_back({{"tacnode_tails", t.tacnode_tails},
                                 {"admissible_supports", big(t.admissible_supports)},
                                 {"classes", big(t.classes)},
                                 {"weighted", big(t.weighted)}});
    }
    doc["spin_curve_classes"] = big(spin.total_classes);
    out << doc.dump(2) << '\n';
  } else {
    out << "reduction graph: center W (g=" << profile.normalization_genus() << "), " << reduction.tacnode_tails.size()
        << " tacnode tails, " << reduction.cusp_tails.size() << " cusp tails, arithmetic genus " << genus << ", b1 "
        << betti1(reduction.graph) << '\n';
    out << "base change order: " << orders.combined << '\n';
    print_table(out, table);
    out << "partition: sum t*fiber = " << to_decimal(partition) << ", N_" << profile.genus() << " = "
        << to_decimal(expected) << ": " << pass_fail(partition_ok) << '\n';
    Table twisters{{"twisted_tacnodes", "admissible_supports", "classes", "weighted"}, {}};
    for (const TwisterCensus& t : spin.twisters) {
      twisters.rows.push_back({join_ids(t.tacnode_tails, "T"), to_decimal(t.admissible_supports),
                               to_decimal(t.classes), to_decimal(t.weighted)});
    }
    out << "spin curves (twister = all cusp tails + listed tacnode tails):\n";
    print_table(out, twisters);
    out << "spin curve classes: " << to_decimal(spin.total_classes) << '\n';
  }
  return partition_ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const std::string& suite_name, std::ostream& out) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw InvalidInput("unknown suite '" + suite_name + "'");
  bool all_ok = true;
  for (const CheckResult& check : run_suite(*suite)) {
    out << pass_fail(check.passed) << "  " << check.name << ": " << check.detail << '\n';
    all_ok = all_ok && check.passed;
  }
  out << (all_ok ? "all checks passed" : "some checks FAILED") << '\n';
  return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Censuses of theta characteristics and limit square roots on singular curves", "spin-census"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"table", "csv", "json", "dot"});

  ProfileOptions census_opt;
  auto* census_cmd = app.add_subcommand("census", "Theta-hyperplane census of a general curve");
  census_cmd->add_option("-g,--genus", census_opt.genus, "Arithmetic genus (>= 3)")->required();
  census_cmd->add_option("--tacnodes", census_opt.tacnodes, "Number of tacnodes");
  census_cmd->add_option("--cusps", census_opt.cusps, "Number of cusps");
  census_cmd->add_option("--nodes", census_opt.nodes, "Number of nodes");
  census_cmd->add_option("--format", census_opt.format, "Output format")->check(formats);

  RootsOptions roots_opt;
  auto* roots_cmd = app.add_subcommand("roots", "Limit square roots of a nodal curve, per admissible support");
  roots_cmd->add_option("--graph", roots_opt.graph_path, "Dual graph JSON file")->required();
  roots_cmd->add_option("--parity", roots_opt.parity, "'omega' or comma-separated bits in vertex order");
  roots_cmd->add_option("--format", roots_opt.format, "Output format")->check(formats);

  ProfileOptions reduce_opt;
  auto* reduce_cmd = app.add_subcommand("reduce", "Stable-reduction graph and twisted spin fibers");
  reduce_cmd->add_option("-g,--genus", reduce_opt.genus, "Arithmetic genus (>= 3)")->required();
  reduce_cmd->add_option("--tacnodes", reduce_opt.tacnodes, "Number of tacnodes");
  reduce_cmd->add_option("--cusps", reduce_opt.cusps, "Number of cusps");
  reduce_cmd->add_option("--format", reduce_opt.format, "Output format")->check(formats);

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle verification suites");
  verify_cmd->add_option("suite", suite, "arf | admissible | identity | reduction | all")
      ->check(CLI::IsMember({"arf", "admissible", "identity", "reduction", "all"}));

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  if (const char* threads = std::getenv("SPIN_CENSUS_THREADS"); threads != nullptr && !parse_thread_cap(threads)) {
    err << "error: SPIN_CENSUS_THREADS must be a positive integer\n";
    return kExitError;
  }

  try {
    if (census_cmd->parsed()) return cmd_census(census_opt, out);
    if (roots_cmd->parsed()) return cmd_roots(roots_opt, out);
    if (reduce_cmd->parsed()) return cmd_reduce(reduce_opt, out);
    if (verify_cmd->parsed()) return cmd_verify(suite, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const Unsupported& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace spincensus::cli
