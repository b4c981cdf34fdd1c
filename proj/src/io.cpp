#include "bidensity/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "bidensity/errors.hpp"

namespace bidensity {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::int64_t parse_id(const Token& tok, int line_no) {
  std::int64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw parse_error("expected a non-negative integer, got '" + tok.text + "'",
                      line_no, tok.column);
  if (value < 0)
    throw parse_error("vertex id must be non-negative", line_no, tok.column);
  return value;
}

LoadedGraph finish_edge_list(std::vector<std::pair<std::int64_t, std::int64_t>>& raw,
                             std::int64_t declared_n) {
  LoadedGraph out;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  if (declared_n >= 0) {
    for (const auto& [u, v] : raw) {
      if (u >= declared_n || v >= declared_n)
        throw parse_error("vertex id " + std::to_string(std::max(u, v)) +
                              " exceeds declared vertex count " +
                              std::to_string(declared_n),
                          0);
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    out.graph = Graph::from_edges(static_cast<int>(declared_n), edges);
    return out;
  }
  // Dense remap over the ids that actually appear.
  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& [u, v] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::unordered_map<std::int64_t, int> dense;
  dense.reserve(ids.size());
  bool gaps = false;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    dense[ids[i]] = static_cast<int>(i);
    if (ids[i] != static_cast<std::int64_t>(i)) gaps = true;
  }
  for (const auto& [u, v] : raw) edges.emplace_back(dense[u], dense[v]);
  out.graph = Graph::from_edges(static_cast<int>(ids.size()), edges);
  if (gaps) {
    out.remapped = true;
    out.original_ids = std::move(ids);
  }
  return out;
}

LoadedGraph load_edge_list(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::int64_t declared_n = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string comment;
    if (auto pos = line.find('#'); pos != std::string::npos) {
      comment = line.substr(pos + 1);
      line.resize(pos);
    }
    // "# vertices N" pins the vertex count.
    auto ctoks = tokenize(comment);
    if (ctoks.size() >= 2 && ctoks[0].text == "vertices") {
      declared_n = parse_id(ctoks[1], line_no);
    }
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw parse_error("expected 'u v', got " + std::to_string(toks.size()) +
                            " token(s)",
                        line_no, toks.size() > 2 ? toks[2].column : toks[0].column);
    std::int64_t u = parse_id(toks[0], line_no);
    std::int64_t v = parse_id(toks[1], line_no);
    if (u == v)
      throw parse_error("self-loop at vertex " + std::to_string(u), line_no,
                        toks[0].column);
    raw.emplace_back(u, v);
  }
  return finish_edge_list(raw, declared_n);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

LoadedGraph load_matrix_market(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw parse_error("empty matrix market input", 1);
  ++line_no;
  auto header = tokenize(lower(line));
  if (header.size() < 5 || header[0].text != "%%matrixmarket" ||
      header[1].text != "matrix")
    throw parse_error("missing '%%MatrixMarket matrix' banner", line_no);
  if (header[2].text != "coordinate")
    throw parse_error("only coordinate format is supported", line_no,
                      header[2].column);
  if (header[3].text != "pattern")
    throw parse_error("matrix market input must be a pattern matrix", line_no,
                      header[3].column);
  if (header[4].text != "symmetric")
    throw parse_error("asymmetric matrix: symmetry must be 'symmetric'", line_no,
                      header[4].column);

  // Skip '%' comments, then read "rows cols nnz".
  std::int64_t rows = 0, cols = 0, nnz = 0;
  for (;;) {
    if (!std::getline(in, line))
      throw parse_error("missing size line", line_no + 1);
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 3)
      throw parse_error("expected 'rows cols nnz'", line_no, toks[0].column);
    rows = parse_id(toks[0], line_no);
    cols = parse_id(toks[1], line_no);
    nnz = parse_id(toks[2], line_no);
    break;
  }
  if (rows != cols)
    throw parse_error("asymmetric matrix: " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " is not square",
                      line_no);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(nnz));
  std::int64_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw parse_error("expected 'i j' pattern entry", line_no, toks[0].column);
    std::int64_t i = parse_id(toks[0], line_no);
    std::int64_t j = parse_id(toks[1], line_no);
    if (i < 1 || i > rows || j < 1 || j > rows)
      throw parse_error("entry index out of range", line_no, toks[0].column);
    if (i == j)
      throw parse_error("self-loop at vertex " + std::to_string(i - 1), line_no,
                        toks[0].column);
    edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
    ++seen;
  }
  if (seen != nnz)
    throw parse_error("entry count " + std::to_string(seen) +
                          " does not match declared nnz " + std::to_string(nnz),
                      line_no);
  LoadedGraph out;
  out.graph = Graph::from_edges(static_cast<int>(rows), edges);
  return out;
}

}  // namespace

LoadedGraph load_graph(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::edge_list:
      return load_edge_list(in);
    case GraphFormat::matrix_market:
      return load_matrix_market(in);
  }
  throw precondition_error("unknown graph format");
}

LoadedGraph load_graph_auto(std::istream& in) {
  // Sniff the banner without consuming the stream.
  std::ostringstream buffered;
  buffered << in.rdbuf();
  std::string content = buffered.str();
  GraphFormat format = content.rfind("%%MatrixMarket", 0) == 0
                           ? GraphFormat::matrix_market
                           : GraphFormat::edge_list;
  std::istringstream replay(content);
  return load_graph(replay, format);
}

LoadedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path, 0);
  return load_graph_auto(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
  out << "# vertices " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  save_edge_list(g, out);
  return out.str();
}

}  // namespace bidensity
