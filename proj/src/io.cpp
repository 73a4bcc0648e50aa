#include "densest/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "densest/errors.hpp"

namespace densest {

namespace {

using json = nlohmann::json;

struct EdgeSpec {
  std::vector<VertexId> vertices;
  WeightFn weight;
};

std::size_t parse_count(std::string_view token, const std::string& where) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(where + ": expected a non-negative integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

Rational parse_weight(std::string_view token, const std::string& where) {
  try {
    return Rational::parse(token);
  } catch (const ParseError& err) {
    throw ParseError(where + ": " + err.what());
  }
}

// Builds the weight function for one edge; rewrites validation messages
// so they name the edge.
WeightFn make_weight(std::size_t edge_index, std::size_t edge_size,
                     std::string_view kind, const std::vector<Rational>& args,
                     std::size_t exponent, const WarningSink& warn) {
  const std::string where = "edge " + std::to_string(edge_index);
  try {
    if (kind == "table") {
      if (args.size() != edge_size + 1) {
        throw ValidationError("table needs " + std::to_string(edge_size + 1) +
                              " values, got " + std::to_string(args.size()));
      }
      bool shifted = false;
      WeightFn f = WeightFn::table(args, &shifted);
      if (shifted && warn) {
        warn(where + ": f(0) = " + args.front().str() +
             " is not zero; table shifted down");
      }
      return f;
    }
    if (kind == "linear") return WeightFn::linear(edge_size, args.at(0));
    if (kind == "allornothing") {
      return WeightFn::all_or_nothing(edge_size, args.at(0));
    }
    if (kind == "power") {
      if (exponent < 1 || exponent > 64) {
        throw ValidationError("power exponent must be in [1, 64]");
      }
      return WeightFn::power(edge_size, args.at(0),
                             static_cast<unsigned>(exponent));
    }
  } catch (const ValidationError& err) {
    throw ValidationError(where + ": " + err.what());
  }
  throw ParseError(where + ": unknown weight spec '" + std::string(kind) + "'");
}

WeightedHypergraph assemble(std::size_t n, std::vector<EdgeSpec> specs) {
  std::vector<std::vector<VertexId>> edges;
  std::vector<WeightFn> weights;
  edges.reserve(specs.size());
  weights.reserve(specs.size());
  for (auto& spec : specs) {
    edges.push_back(std::move(spec.vertices));
    weights.push_back(std::move(spec.weight));
  }
  return WeightedHypergraph(Hypergraph(n, edges), std::move(weights));
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

WeightedHypergraph load_text(std::istream& in, const WarningSink& warn) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<EdgeSpec> specs;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    const auto tokens = tokenize(view);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);

    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(where + ": expected 'n m'");
      n = parse_count(tokens[0], where);
      m = parse_count(tokens[1], where);
      if (n > std::numeric_limits<VertexId>::max()) {
        throw ParseError(where + ": vertex count too large");
      }
      have_header = true;
      specs.reserve(m);
      continue;
    }
    if (specs.size() == m) {
      throw ParseError(where + ": more edge lines than the declared " +
                       std::to_string(m));
    }

    const std::size_t k = parse_count(tokens[0], where);
    if (k == 0) throw ParseError(where + ": edge size must be positive");
    if (tokens.size() < k + 2) {
      throw ParseError(where + ": expected " + std::to_string(k) +
                       " vertex ids and a weight spec");
    }
    EdgeSpec spec;
    spec.vertices.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) {
      const std::size_t v = parse_count(tokens[i], where);
      if (v >= n) {
        throw ParseError(where + ": vertex " + std::to_string(v) +
                         " out of range [0, " + std::to_string(n) + ")");
      }
      spec.vertices.push_back(static_cast<VertexId>(v));
    }
    const std::string_view kind = tokens[k + 1];
    const std::size_t argc = tokens.size() - (k + 2);
    std::vector<Rational> args;
    std::size_t exponent = 0;
    if (kind == "table") {
      for (std::size_t i = k + 2; i < tokens.size(); ++i) {
        args.push_back(parse_weight(tokens[i], where));
      }
    } else if (kind == "linear" || kind == "allornothing") {
      if (argc != 1) throw ParseError(where + ": '" + std::string(kind) +
                                      "' takes one weight");
      args.push_back(parse_weight(tokens[k + 2], where));
    } else if (kind == "power") {
      if (argc != 2) throw ParseError(where + ": 'power' takes w and a");
      args.push_back(parse_weight(tokens[k + 2], where));
      exponent = parse_count(tokens[k + 3], where);
    } else {
      throw ParseError(where + ": unknown weight spec '" + std::string(kind) +
                       "'");
    }
    try {
      spec.weight = make_weight(specs.size(), k, kind, args, exponent, warn);
    } catch (const ParseError& err) {
      throw ParseError(where + ": " + err.what());
    }
    specs.push_back(std::move(spec));
  }

  if (!have_header) throw ParseError("missing 'n m' header");
  if (specs.size() != m) {
    throw ParseError("declared " + std::to_string(m) + " edges, found " +
                     std::to_string(specs.size()));
  }
  return assemble(n, std::move(specs));
}

Rational json_weight(const json& value, const std::string& where) {
  if (value.is_string()) return parse_weight(value.get<std::string>(), where);
  if (value.is_number_integer()) {
    return Rational(static_cast<long long>(value.get<std::int64_t>()));
  }
  if (value.is_number()) {
    // dump() keeps the shortest round-trip decimal of the literal.
    return parse_weight(value.dump(), where);
  }
  throw ParseError(where + ": weight must be a number or a string");
}

WeightedHypergraph load_json(std::istream& in, const WarningSink& warn) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  try {
    const auto n = doc.at("n").get<std::size_t>();
    const auto& edges = doc.at("edges");
    if (!edges.is_array()) throw ParseError("'edges' must be an array");
    std::vector<EdgeSpec> specs;
    specs.reserve(edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) {
      const std::string where = "edge " + std::to_string(j);
      const auto& item = edges[j];
      EdgeSpec spec;
      for (const auto& v : item.at("vertices")) {
        const auto id = v.get<std::int64_t>();
        if (id < 0 || static_cast<std::size_t>(id) >= n) {
          throw ParseError(where + ": vertex " + std::to_string(id) +
                           " out of range");
        }
        spec.vertices.push_back(static_cast<VertexId>(id));
      }
      if (spec.vertices.empty()) throw ParseError(where + ": empty edge");
      const auto& weight = item.at("weight");
      const auto kind = weight.at("type").get<std::string>();
      std::vector<Rational> args;
      std::size_t exponent = 0;
      if (kind == "table") {
        for (const auto& v : weight.at("values")) {
          args.push_back(json_weight(v, where));
        }
      } else if (kind == "linear" || kind == "allornothing" ||
                 kind == "power") {
        args.push_back(json_weight(weight.at("w"), where));
        if (kind == "power") exponent = weight.at("a").get<std::size_t>();
      }
      spec.weight = make_weight(j, spec.vertices.size(), kind, args, exponent,
                                warn);
      specs.push_back(std::move(spec));
    }
    if (doc.contains("m") && doc.at("m").get<std::size_t>() != specs.size()) {
      throw ParseError("'m' does not match the number of edges");
    }
    return assemble(n, std::move(specs));
  } catch (const json::exception& err) {
    throw ParseError(std::string("malformed instance JSON: ") + err.what());
  }
}

// Decimal when exact and short, otherwise a/b.
std::string weight_token(const Rational& value) {
  if (value.is_integer()) return value.numerator().get_str();
  return value.str();
}

}  // namespace

WeightedHypergraph load_instance(std::istream& in, InstanceFormat format,
                                 const WarningSink& warn) {
  return format == InstanceFormat::kJson ? load_json(in, warn)
                                         : load_text(in, warn);
}

InstanceFormat format_for_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".json") {
    return InstanceFormat::kJson;
  }
  return InstanceFormat::kText;
}

WeightedHypergraph load_instance_file(const std::string& path,
                                      const WarningSink& warn) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_instance(in, format_for_path(path), warn);
}

void write_text(std::ostream& out, const WeightedHypergraph& instance) {
  const Hypergraph& g = instance.graph();
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.edge_size(e);
    for (VertexId v : g.edge(e)) out << ' ' << v;
    const WeightFn& f = instance.weight(e);
    const WeightSource& src = f.source();
    switch (src.kind) {
      case WeightSource::Kind::kLinear:
        out << " linear " << weight_token(src.scale);
        break;
      case WeightSource::Kind::kAllOrNothing:
        out << " allornothing " << weight_token(src.scale);
        break;
      case WeightSource::Kind::kPower:
        out << " power " << weight_token(src.scale) << ' ' << src.exponent;
        break;
      case WeightSource::Kind::kTable:
        out << " table";
        for (const Rational& v : f.values()) out << ' ' << weight_token(v);
        break;
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const WeightedHypergraph& instance) {
  const Hypergraph& g = instance.graph();
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    json values = json::array();
    for (const Rational& v : instance.weight(e).values()) {
      values.push_back(weight_token(v));
    }
    edges.push_back({{"vertices", std::vector<VertexId>(g.edge(e).begin(),
                                                        g.edge(e).end())},
                     {"weight", {{"type", "table"}, {"values", values}}}});
  }
  json doc = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
  out << doc.dump(2) << '\n';
}

}  // namespace densest
