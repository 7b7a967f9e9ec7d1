#include "lcycle/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <unordered_map>
#include <vector>

namespace lcycle {

namespace {

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Assigns dense ids to external integer ids in first-appearance order.
class IdMap {
 public:
  Vertex intern(long long external) {
    auto [it, inserted] = ids_.try_emplace(external, 0);
    if (inserted) {
      it->second = static_cast<Vertex>(labels_.size());
      labels_.push_back(std::to_string(external));
    }
    return it->second;
  }
  const Vertex* find(long long external) const {
    auto it = ids_.find(external);
    return it == ids_.end() ? nullptr : &it->second;
  }
  std::size_t size() const { return labels_.size(); }
  std::vector<std::string> take_labels() { return std::move(labels_); }

 private:
  std::unordered_map<long long, Vertex> ids_;
  std::vector<std::string> labels_;
};

// --- GML ------------------------------------------------------------------

struct GmlToken {
  enum Kind { key, number, string, open, close } kind;
  std::string text;
  std::size_t line;
};

std::vector<GmlToken> lex_gml(std::istream& in) {
  std::vector<GmlToken> tokens;
  std::string line;
  std::size_t line_no = 0;
  bool in_string = false;
  std::string pending;
  std::size_t string_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t i = 0;
    if (!in_string) {
      auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] == '#') continue;
    }
    while (i < line.size()) {
      char ch = line[i];
      if (in_string) {
        if (ch == '"') {
          tokens.push_back({GmlToken::string, pending, string_line});
          pending.clear();
          in_string = false;
        } else {
          pending.push_back(ch);
        }
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
      } else if (ch == '[') {
        tokens.push_back({GmlToken::open, "[", line_no});
        ++i;
      } else if (ch == ']') {
        tokens.push_back({GmlToken::close, "]", line_no});
        ++i;
      } else if (ch == '"') {
        in_string = true;
        string_line = line_no;
        ++i;
      } else {
        std::size_t j = i;
        while (j < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '[' && line[j] != ']' && line[j] != '"')
          ++j;
        std::string word = line.substr(i, j - i);
        bool numeric = std::isdigit(static_cast<unsigned char>(word[0])) ||
                       word[0] == '-' || word[0] == '+' || word[0] == '.';
        tokens.push_back(
            {numeric ? GmlToken::number : GmlToken::key, word, line_no});
        i = j;
      }
    }
    if (in_string) pending.push_back('\n');
  }
  if (in_string) throw ParseError(string_line, "unterminated string");
  return tokens;
}

struct GmlNode {
  std::string key;
  std::size_t line = 0;
  std::string scalar;
  bool is_list = false;
  bool is_number = false;
  std::vector<GmlNode> children;
};

class GmlParser {
 public:
  explicit GmlParser(std::vector<GmlToken> tokens)
      : tokens_(std::move(tokens)) {}

  std::vector<GmlNode> parse_document() {
    auto items = parse_list();
    if (pos_ < tokens_.size()) {
      throw ParseError(tokens_[pos_].line, "unexpected ']'");
    }
    return items;
  }

 private:
  std::vector<GmlNode> parse_list() {
    std::vector<GmlNode> items;
    while (pos_ < tokens_.size() && tokens_[pos_].kind != GmlToken::close) {
      const GmlToken& k = tokens_[pos_];
      if (k.kind != GmlToken::key) {
        throw ParseError(k.line, "expected key, found '" + k.text + "'");
      }
      ++pos_;
      if (pos_ >= tokens_.size()) {
        throw ParseError(k.line, "missing value for key '" + k.text + "'");
      }
      GmlNode node;
      node.key = k.text;
      node.line = k.line;
      const GmlToken& v = tokens_[pos_];
      switch (v.kind) {
        case GmlToken::open: {
          ++pos_;
          node.is_list = true;
          node.children = parse_list();
          if (pos_ >= tokens_.size()) {
            throw ParseError(k.line, "unterminated list '" + k.text + "'");
          }
          ++pos_;  // ']'
          break;
        }
        case GmlToken::number:
          node.is_number = true;
          node.scalar = v.text;
          ++pos_;
          break;
        case GmlToken::string:
        case GmlToken::key:
          node.scalar = v.text;
          ++pos_;
          break;
        case GmlToken::close:
          throw ParseError(v.line, "missing value for key '" + k.text + "'");
      }
      items.push_back(std::move(node));
    }
    return items;
  }

  std::vector<GmlToken> tokens_;
  std::size_t pos_ = 0;
};

const GmlNode* find_key(const GmlNode& record, std::string_view key) {
  for (const auto& child : record.children) {
    if (child.key == key) return &child;
  }
  return nullptr;
}

long long integer_field(const GmlNode& record, std::string_view key) {
  const GmlNode* field = find_key(record, key);
  if (field == nullptr) {
    throw ParseError(record.line, std::string(record.key) + " record lacks '" +
                                      std::string(key) + "'");
  }
  auto value = to_integer(field->scalar);
  if (field->is_list || !value) {
    throw ParseError(field->line, std::string(record.key) + " record has "
                                      "non-integer '" +
                                      std::string(key) + "'");
  }
  return *value;
}

}  // namespace

std::optional<GraphFormat> parse_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "gml") return GraphFormat::gml;
  if (name == "dimacs") return GraphFormat::dimacs;
  return std::nullopt;
}

const char* to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::edgelist:
      return "edgelist";
    case GraphFormat::gml:
      return "gml";
    case GraphFormat::dimacs:
      return "dimacs";
  }
  return "unknown";
}

GraphFormat format_from_extension(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  for (auto& ch : ext)
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (ext == ".gml") return GraphFormat::gml;
  if (ext == ".col" || ext == ".dimacs") return GraphFormat::dimacs;
  return GraphFormat::edgelist;
}

Graph parse_edge_list(std::istream& in) {
  IdMap ids;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == '#' || tokens[0].front() == '%') continue;
    if (tokens.size() < 2) {
      throw ParseError(line_no, "expected two vertex ids");
    }
    auto a = to_integer(tokens[0]);
    auto b = to_integer(tokens[1]);
    if (!a || !b) {
      throw ParseError(line_no, "malformed vertex id '" +
                                    std::string(!a ? tokens[0] : tokens[1]) +
                                    "'");
    }
    Vertex u = ids.intern(*a);
    Vertex v = ids.intern(*b);
    edges.emplace_back(u, v);
  }
  std::size_t n = ids.size();
  return Graph::from_edges(n, edges, ids.take_labels());
}

Graph parse_gml(std::istream& in) {
  GmlParser parser(lex_gml(in));
  auto document = parser.parse_document();
  const GmlNode* graph = nullptr;
  for (const auto& item : document) {
    if (item.key == "graph" && item.is_list) {
      graph = &item;
      break;
    }
  }
  if (graph == nullptr) throw ParseError(0, "missing 'graph [ ... ]' block");

  IdMap ids;
  for (const auto& record : graph->children) {
    if (record.key != "node" || !record.is_list) continue;
    long long id = integer_field(record, "id");
    if (ids.find(id) != nullptr) {
      throw ParseError(record.line,
                       "node record declares duplicate id " + std::to_string(id));
    }
    ids.intern(id);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& record : graph->children) {
    if (record.key != "edge" || !record.is_list) continue;
    long long source = integer_field(record, "source");
    long long target = integer_field(record, "target");
    const Vertex* u = ids.find(source);
    const Vertex* v = ids.find(target);
    if (u == nullptr || v == nullptr) {
      throw ParseError(record.line,
                       "edge record references undeclared node id " +
                           std::to_string(u == nullptr ? source : target));
    }
    edges.emplace_back(*u, *v);
  }
  std::size_t n = ids.size();
  return Graph::from_edges(n, edges, ids.take_labels());
}

Graph parse_dimacs(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate 'p' line");
      if (tokens.size() < 4) {
        throw ParseError(line_no, "expected 'p edge N M'");
      }
      auto count = to_integer(tokens[2]);
      if (!count || *count < 0) {
        throw ParseError(line_no, "malformed vertex count");
      }
      n = static_cast<std::size_t>(*count);
    } else if (tokens[0] == "e") {
      if (!n) throw ParseError(line_no, "'e' line before 'p' header");
      if (tokens.size() < 3) throw ParseError(line_no, "expected 'e u v'");
      auto a = to_integer(tokens[1]);
      auto b = to_integer(tokens[2]);
      if (!a || !b) throw ParseError(line_no, "malformed vertex id");
      for (long long id : {*a, *b}) {
        if (id < 1 || id > static_cast<long long>(*n)) {
          throw ParseError(line_no, "vertex id " + std::to_string(id) +
                                        " outside [1," + std::to_string(*n) +
                                        "]");
        }
      }
      edges.emplace_back(static_cast<Vertex>(*a - 1),
                         static_cast<Vertex>(*b - 1));
    } else {
      throw ParseError(line_no,
                       "unknown line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing 'p edge N M' header");
  std::vector<std::string> labels;
  labels.reserve(*n);
  for (std::size_t v = 1; v <= *n; ++v) labels.push_back(std::to_string(v));
  return Graph::from_edges(*n, edges, std::move(labels));
}

Graph parse_graph(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::edgelist:
      return parse_edge_list(in);
    case GraphFormat::gml:
      return parse_gml(in);
    case GraphFormat::dimacs:
      return parse_dimacs(in);
  }
  throw std::invalid_argument("unknown graph format");
}

Graph read_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_graph(in, format);
}

}  // namespace lcycle
