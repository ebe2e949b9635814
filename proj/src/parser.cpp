#include "strdet/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace strdet {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t line;
  std::size_t pos = 0;

  std::size_t column() const { return pos + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line, column(), what); }

  void skip_spaces() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_spaces();
    return pos >= text.size();
  }
  bool peek(char c) {
    skip_spaces();
    return pos < text.size() && text[pos] == c;
  }
  void expect(std::string_view token) {
    skip_spaces();
    if (text.substr(pos, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos += token.size();
  }
  std::string identifier() {
    skip_spaces();
    const std::size_t start = pos;
    if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("expected an arrow id");
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '\''))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
  VertexId integer() {
    skip_spaces();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a positive integer");
    VertexId value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc() || value <= 0) {
      pos = start;
      fail("expected a positive integer");
    }
    (void)ptr;
    return value;
  }
};

struct RawArrow {
  Arrow arrow;
  std::size_t line, column;
};

struct RawRelation {
  std::vector<std::pair<std::string, std::size_t>> arrows;  // id, column
  std::size_t line;
};

}  // namespace

BoundQuiverAlgebra parse_algebra(std::string_view text) {
  std::optional<std::vector<VertexId>> vertices;
  std::size_t vertices_line = 0;
  std::vector<RawArrow> arrows;
  std::vector<RawRelation> relations;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    Cursor cur{line, line_no};
    if (cur.at_end()) {
      if (end == text.size()) break;
      continue;
    }

    const std::size_t keyword_start = cur.pos;
    std::string keyword = cur.identifier();
    if (keyword == "vertices") {
      if (vertices) {
        cur.pos = keyword_start;
        cur.fail("duplicate vertices declaration (first on line " + std::to_string(vertices_line) + ")");
      }
      cur.expect(":");
      std::vector<VertexId> ids{cur.integer()};
      bool listed = false;
      while (cur.peek(',')) {
        cur.expect(",");
        ids.push_back(cur.integer());
        listed = true;
      }
      if (!cur.at_end()) cur.fail("unexpected text after vertex list");
      if (!listed) {
        const VertexId count = ids.front();
        ids.clear();
        for (VertexId v = 1; v <= count; ++v) ids.push_back(v);
      }
      vertices = std::move(ids);
      vertices_line = line_no;
    } else if (keyword == "arrow") {
      RawArrow raw;
      raw.line = line_no;
      cur.skip_spaces();
      raw.column = cur.column();
      raw.arrow.id = cur.identifier();
      cur.expect(":");
      raw.arrow.source = cur.integer();
      cur.expect("->");
      raw.arrow.target = cur.integer();
      if (!cur.at_end()) cur.fail("unexpected text after arrow");
      arrows.push_back(std::move(raw));
    } else if (keyword == "relation") {
      RawRelation raw;
      raw.line = line_no;
      cur.expect(":");
      while (!cur.at_end()) {
        cur.skip_spaces();
        const std::size_t col = cur.column();
        raw.arrows.emplace_back(cur.identifier(), col);
      }
      if (raw.arrows.size() < 2) cur.fail("a relation needs at least two arrows");
      relations.push_back(std::move(raw));
    } else {
      cur.pos = keyword_start;
      cur.fail("unknown declaration '" + keyword + "'");
    }
    if (end == text.size()) break;
  }

  if (!vertices) throw ParseError(line_no, 1, "missing 'vertices:' declaration");

  std::vector<Arrow> quiver_arrows;
  for (const auto& raw : arrows) {
    for (const auto& prev : quiver_arrows)
      if (prev.id == raw.arrow.id)
        throw ParseError(raw.line, raw.column, "duplicate arrow id '" + raw.arrow.id + "'");
    for (VertexId v : {raw.arrow.source, raw.arrow.target})
      if (std::find(vertices->begin(), vertices->end(), v) == vertices->end())
        throw ParseError(raw.line, raw.column,
                         "arrow '" + raw.arrow.id + "' uses undeclared vertex " + std::to_string(v));
    quiver_arrows.push_back(raw.arrow);
  }
  Quiver quiver;
  try {
    quiver = Quiver(*vertices, quiver_arrows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(vertices_line, 1, e.what());
  }

  std::vector<Path> generators;
  for (const auto& raw : relations) {
    Path path;
    for (const auto& [id, col] : raw.arrows) {
      auto a = quiver.find_arrow(id);
      if (!a) throw ParseError(raw.line, col, "unknown arrow '" + id + "' in relation");
      if (!path.empty() && quiver.target_index(path.back()) != quiver.source_index(*a))
        throw ParseError(raw.line, col,
                         "relation is not a path: '" + id + "' does not start where the previous arrow ends");
      path.push_back(*a);
    }
    generators.push_back(std::move(path));
  }
  return make_algebra(std::move(quiver), std::move(generators));
}

std::string serialize(const BoundQuiverAlgebra& algebra) {
  const Quiver& q = algebra.quiver;
  std::ostringstream out;
  const auto& vs = q.vertices();
  bool contiguous = true;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] != static_cast<VertexId>(i + 1)) contiguous = false;
  out << "vertices: ";
  if (contiguous) {
    out << vs.size();
  } else {
    if (vs.size() == 1)
      throw std::invalid_argument("a single vertex other than 1 has no textual form");
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? ", " : "") << vs[i];
  }
  out << '\n';
  for (const auto& a : q.arrows()) out << "arrow " << a.id << ": " << a.source << " -> " << a.target << '\n';
  for (const auto& g : algebra.relations.generators) out << "relation: " << render_path(q, g) << '\n';
  return out.str();
}

BoundQuiverAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str());
}

}  // namespace strdet
