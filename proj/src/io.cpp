#include "rightsize/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "format.hpp"
#include "json.hpp"

namespace rightsize::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double number(const json& node, const std::string& what) {
  if (!node.is_number()) throw FormatError(what + " must be a number");
  return node.get<double>();
}

int integer(const json& node, const std::string& what) {
  if (!node.is_number_integer()) throw FormatError(what + " must be an integer");
  return node.get<int>();
}

std::vector<double> numbers(const json& node, const std::string& what) {
  if (!node.is_array()) throw FormatError(what + " must be an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(number(node[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> integers(const json& node, const std::string& what) {
  if (!node.is_array()) throw FormatError(what + " must be an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(integer(node[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

void require_fields(const json& obj, const std::set<std::string>& allowed, const std::string& what) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw FormatError(what + ": unknown field '" + key + "'");
  }
  for (const auto& key : allowed) {
    if (!obj.contains(key)) throw FormatError(what + ": missing field '" + key + "'");
  }
}

CostFunction parse_cost(const json& obj, const std::string& what) {
  if (!obj.is_object()) throw FormatError(what + " must be an object");
  if (!obj.contains("form") || !obj["form"].is_string()) throw FormatError(what + ": missing string field 'form'");
  const auto form = obj["form"].get<std::string>();
  if (form == "affine") {
    require_fields(obj, {"form", "a", "b", "z_max"}, what);
    return CostFunction::affine(number(obj["a"], what + ".a"), number(obj["b"], what + ".b"),
                                number(obj["z_max"], what + ".z_max"));
  }
  if (form == "power") {
    require_fields(obj, {"form", "a", "b", "p", "z_max"}, what);
    return CostFunction::power(number(obj["a"], what + ".a"), number(obj["b"], what + ".b"), number(obj["p"], what + ".p"),
                               number(obj["z_max"], what + ".z_max"));
  }
  if (form == "piecewise") {
    require_fields(obj, {"form", "breakpoints", "z_max"}, what);
    const auto& pts = obj["breakpoints"];
    if (!pts.is_array()) throw FormatError(what + ".breakpoints must be an array");
    std::vector<Breakpoint> points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto where = what + ".breakpoints[" + std::to_string(i) + "]";
      if (!pts[i].is_array() || pts[i].size() != 2) throw FormatError(where + " must be a [z, f] pair");
      points.push_back({number(pts[i][0], where), number(pts[i][1], where)});
    }
    return CostFunction::piecewise(std::move(points), number(obj["z_max"], what + ".z_max"));
  }
  throw FormatError(what + ": unknown form '" + form + "'");
}

std::vector<CostFunction> parse_cost_row(const json& row, const std::string& what) {
  if (!row.is_array()) throw FormatError(what + " must be an array");
  std::vector<CostFunction> out;
  for (std::size_t j = 0; j < row.size(); ++j) out.push_back(parse_cost(row[j], what + "[" + std::to_string(j) + "]"));
  return out;
}

ordered_json cost_to_json(const CostFunction& f) {
  ordered_json obj;
  obj["form"] = f.form_name();
  std::visit(
      [&](const auto& form) {
        using F = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<F, Affine>) {
          obj["a"] = form.a;
          obj["b"] = form.b;
        } else if constexpr (std::is_same_v<F, Power>) {
          obj["a"] = form.a;
          obj["b"] = form.b;
          obj["p"] = form.p;
        } else {
          ordered_json pts = ordered_json::array();
          for (const auto& p : form.breakpoints) pts.push_back({p.z, p.value});
          obj["breakpoints"] = pts;
        }
      },
      f.form());
  obj["z_max"] = f.z_max();
  return obj;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

ProblemInstance parse_instance(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw FormatError("instance must be a JSON object");
  require_fields(root, {"T", "d", "beta", "fleet", "lambda", "cost_functions"}, "instance");

  const int horizon = integer(root["T"], "T");
  const int types = integer(root["d"], "d");
  auto beta = numbers(root["beta"], "beta");
  auto volumes = numbers(root["lambda"], "lambda");

  const auto& fleet_node = root["fleet"];
  if (!fleet_node.is_array()) throw FormatError("fleet must be an array");
  ProblemInstance::FleetRows fleet;
  if (!fleet_node.empty() && fleet_node[0].is_array()) {
    for (std::size_t t = 0; t < fleet_node.size(); ++t) fleet.push_back(integers(fleet_node[t], "fleet[" + std::to_string(t) + "]"));
  } else {
    fleet.push_back(integers(fleet_node, "fleet"));
  }

  const auto& cost_node = root["cost_functions"];
  if (!cost_node.is_array()) throw FormatError("cost_functions must be an array");
  ProblemInstance::CostRows costs;
  if (!cost_node.empty() && cost_node[0].is_array()) {
    for (std::size_t t = 0; t < cost_node.size(); ++t) {
      costs.push_back(parse_cost_row(cost_node[t], "cost_functions[" + std::to_string(t) + "]"));
    }
  } else {
    costs.push_back(parse_cost_row(cost_node, "cost_functions"));
  }
  return {horizon, types, std::move(beta), std::move(fleet), std::move(costs), std::move(volumes)};
}

ProblemInstance read_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

std::string instance_to_json(const ProblemInstance& instance) {
  ordered_json root;
  root["T"] = instance.horizon();
  root["d"] = instance.types();
  root["beta"] = instance.betas();
  if (instance.fleet_per_slot()) {
    root["fleet"] = instance.fleet_rows();
  } else {
    root["fleet"] = instance.fleet_rows().front();
  }
  root["lambda"] = instance.volumes();
  auto row_json = [](const std::vector<CostFunction>& row) {
    ordered_json out = ordered_json::array();
    for (const auto& f : row) out.push_back(cost_to_json(f));
    return out;
  };
  if (instance.costs_per_slot()) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : instance.cost_rows()) rows.push_back(row_json(row));
    root["cost_functions"] = rows;
  } else {
    root["cost_functions"] = row_json(instance.cost_rows().front());
  }
  return root.dump(2) + "\n";
}

std::string schedule_to_csv(const Schedule& schedule, const CostBreakdown& cost) {
  using detail::fixed9;
  std::ostringstream out;
  const std::size_t d = schedule.configs.empty() ? 0 : schedule.configs.front().size();
  out << "t";
  for (std::size_t j = 0; j < d; ++j) out << ",x_" << (j + 1);
  out << ",operating,switching\n";
  for (std::size_t t = 0; t < schedule.configs.size(); ++t) {
    out << (t + 1);
    for (std::size_t j = 0; j < d; ++j) out << ',' << schedule.configs[t][j];
    out << ',' << fixed9(cost.per_slot[t].operating) << ',' << fixed9(cost.per_slot[t].switching) << '\n';
  }
  out << "# operating_total=" << fixed9(cost.operating_total) << '\n';
  out << "# switching_total=" << fixed9(cost.switching_total) << '\n';
  out << "# grand_total=" << fixed9(cost.grand_total) << '\n';
  return out.str();
}

Schedule parse_schedule_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Schedule schedule;
  std::size_t d = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split(line, ',');
    if (!header) {
      if (cells.size() < 3 || cells.front() != "t") throw FormatError("schedule CSV must start with a 't,x_1,...' header");
      d = cells.size() - 3;
      header = true;
      continue;
    }
    if (cells.size() != d + 3) throw FormatError("schedule row has " + std::to_string(cells.size()) + " cells: " + line);
    try {
      if (std::stoi(cells[0]) != static_cast<int>(schedule.configs.size()) + 1) {
        throw FormatError("schedule rows must be numbered 1..T: " + line);
      }
      std::vector<int> counts;
      for (std::size_t j = 0; j < d; ++j) counts.push_back(std::stoi(cells[j + 1]));
      schedule.configs.emplace_back(std::move(counts));
    } catch (const std::logic_error&) {
      throw FormatError("bad number in schedule row: " + line);
    }
  }
  if (!header) throw FormatError("schedule CSV has no header");
  return schedule;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
}

}  // namespace rightsize::io
