#include "jaco/format.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "jaco/table1.hpp"

namespace jaco {

namespace {

std::string join(const std::vector<Vertex>& vs, std::string_view sep, std::string_view prefix = "") {
  std::string out;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k > 0) out += sep;
    out += prefix;
    out += std::to_string(vs[k]);
  }
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t from = 0;
  while (true) {
    const auto at = text.find(sep, from);
    out.emplace_back(text.substr(from, at - from));
    if (at == std::string_view::npos) break;
    from = at + 1;
  }
  return out;
}

std::int64_t parse_int(const std::string& field) {
  std::size_t used = 0;
  const long long v = std::stoll(field, &used);
  if (used != field.size()) throw std::runtime_error("bad integer field: " + field);
  return v;
}

}  // namespace

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      return "text";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::json:
      return "json";
    case OutputFormat::dot:
      return "dot";
    case OutputFormat::edges:
      return "edges";
  }
  return "unknown";
}

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  for (auto f : {OutputFormat::text, OutputFormat::csv, OutputFormat::json, OutputFormat::dot,
                 OutputFormat::edges}) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

std::vector<ParamRow> parse_param_csv(std::string_view csv) {
  std::vector<ParamRow> rows;
  bool header = true;
  for (const auto& line : split(csv, '\n')) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 8) throw std::runtime_error("parse_param_csv: expected 8 fields: " + line);
    try {
      ParamRow row;
      row.n = parse_int(f[0]);
      row.t1_n = parse_int(f[1]);
      row.t2_star_n = parse_int(f[2]);
      row.size = parse_int(f[3]);
      for (const auto& v : split(f[4], ';')) row.delta_set.push_back(parse_int(v));
      row.gamma = parse_int(f[5]);
      row.diam = parse_int(f[6]);
      row.delta = parse_int(f[7]);
      rows.push_back(std::move(row));
    } catch (const std::logic_error&) {
      throw std::runtime_error("parse_param_csv: malformed row: " + line);
    }
  }
  return rows;
}

std::string render_table(const std::vector<ParamRow>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::csv:
      out << "n,t1,t2_star,size,delta_set,gamma,diam,delta\n";
      for (const auto& r : rows) {
        out << r.n << ',' << r.t1_n << ',' << r.t2_star_n << ',' << r.size << ','
            << join(r.delta_set, ";") << ',' << r.gamma << ',' << r.diam << ',' << r.delta << '\n';
      }
      break;
    case OutputFormat::text:
      out << std::setw(6) << "n" << std::setw(6) << "t1" << std::setw(6) << "t2*" << std::setw(9)
          << "size" << "  " << std::left << std::setw(20) << "delta_set" << std::right
          << std::setw(6) << "gamma" << std::setw(6) << "diam" << std::setw(6) << "delta" << '\n';
      for (const auto& r : rows) {
        out << std::setw(6) << r.n << std::setw(6) << r.t1_n << std::setw(6) << r.t2_star_n
            << std::setw(9) << r.size << "  " << std::left << std::setw(20)
            << ("{" + join(r.delta_set, ",", "v") + "}") << std::right << std::setw(6) << r.gamma
            << std::setw(6) << r.diam << std::setw(6) << r.delta << '\n';
      }
      break;
    case OutputFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"t1", r.t1_n},
                       {"t2_star", r.t2_star_n},
                       {"size", r.size},
                       {"delta_set", r.delta_set},
                       {"gamma", r.gamma},
                       {"diam", r.diam},
                       {"delta", r.delta}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
    default:
      throw std::invalid_argument("table output supports text, csv and json");
  }
  return out.str();
}

std::string render_graph(const JacoGraph& g, OutputFormat format) {
  std::ostringstream out;
  const std::int64_t n = g.order();
  switch (format) {
    case OutputFormat::edges:
      for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= g.hi(i); ++j) out << i << ' ' << j << '\n';
      }
      break;
    case OutputFormat::dot:
      out << "graph J" << n << " {\n";
      for (Vertex i = 1; i <= n; ++i) out << "  " << i << ";\n";
      for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= g.hi(i); ++j) out << "  " << i << " -- " << j << ";\n";
      }
      out << "}\n";
      break;
    case OutputFormat::json: {
      nlohmann::json adjacency = nlohmann::json::array();
      for (Vertex i = 1; i <= n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Vertex j = g.lo(i); j <= g.hi(i); ++j) {
          if (j != i) row.push_back(j);
        }
        adjacency.push_back(std::move(row));
      }
      out << nlohmann::json{{"n", n}, {"adjacency", adjacency}}.dump() << '\n';
      break;
    }
    default:
      throw std::invalid_argument("graph output supports edges, dot and json");
  }
  return out.str();
}

std::string render_dompath(const DomPath& path, OutputFormat format) {
  if (format == OutputFormat::json) {
    return nlohmann::json{{"kind", to_string(path.kind)},
                          {"vertices", path.vertices},
                          {"gamma_set", path.gamma_set},
                          {"length", path.edge_length()}}
               .dump() +
           "\n";
  }
  if (format != OutputFormat::text) throw std::invalid_argument("dompath output supports text and json");
  return join(path.vertices, " ", "v") + " | gamma: " + join(path.gamma_set, " ", "v") + "\n";
}

std::string render_reports(const std::vector<ConjectureReport>& reports, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::text:
      for (const auto& r : reports) out << to_text(r) << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
      out << "id,range_lo,range_hi,status,witness_index,expected,actual,margin,offset\n";
      for (const auto& r : reports) {
        out << to_string(r.id) << ',' << r.range_lo << ',' << r.range_hi << ',' << to_string(r.status) << ','
            << (r.witness ? std::to_string(r.witness->index) : std::string()) << ','
            << (r.witness ? opt(r.witness->expected) : std::string()) << ','
            << (r.witness ? opt(r.witness->actual) : std::string()) << ',' << r.truncation_margin << ','
            << opt(r.offset) << '\n';
      }
      break;
    }
    default:
      throw std::invalid_argument("report output supports text, csv and json");
  }
  return out.str();
}

}  // namespace jaco
