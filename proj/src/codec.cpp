#include "graphstab/codec.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "graphstab/errors.hpp"

namespace graphstab {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool printable_graph6_byte(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view record) {
  if (record.empty()) throw CodecError("empty graph6 record", 0);
  const auto first = static_cast<unsigned char>(record[0]);
  if (first == 126) throw CodecError("graph6 orders above 62 are not supported", 0);
  if (!printable_graph6_byte(first)) throw CodecError("malformed graph6 size byte", 0);

  const int n = first - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
  const std::size_t body = (bits + 5) / 6;

  for (std::size_t i = 1; i < record.size() && i <= body; ++i) {
    if (!printable_graph6_byte(static_cast<unsigned char>(record[i])))
      throw CodecError("malformed graph6 byte", i);
  }
  if (record.size() < body + 1) throw CodecError("truncated graph6 record", record.size());
  if (record.size() > body + 1) throw CodecError("trailing bytes after graph6 record", body + 1);

  EdgeSet edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = static_cast<unsigned char>(record[1 + k / 6]) - 63;
      if ((group >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(record[body]) - 63;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw CodecError("nonzero graph6 padding bits", body);
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw InputError("graph6 encoding supports order <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    const std::uint64_t row = g.neighbor_mask(j);
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | static_cast<int>((row >> i) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_text(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_start = 0;
  std::size_t line_no = 1;
  while (line_start < text.size()) {
    std::size_t end = text.find('\n', line_start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(line_start, end - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t skip = 0;
    if (line.starts_with(kGraph6Header)) skip = kGraph6Header.size();
    line.remove_prefix(skip);
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const CodecError& e) {
        throw CodecError("line " + std::to_string(line_no) + ": " + e.message(),
                         line_start + skip + e.offset());
      }
    }
    line_start = end + 1;
    ++line_no;
  }
  return out;
}

namespace {

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  // Returns false at end of input.
  bool next(long long& value, std::size_t& at) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) return false;
    at = pos_;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || (ptr != end && !std::isspace(static_cast<unsigned char>(*ptr))))
      throw CodecError("expected an integer", at);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return true;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Tokenizer tok(text);
  long long n = 0;
  long long m = 0;
  std::size_t at = 0;
  if (!tok.next(n, at)) throw CodecError("missing \"n m\" header", 0);
  if (n < 0 || n > Graph::kMaxOrder) throw CodecError("order out of range", at);
  if (!tok.next(m, at)) throw CodecError("missing edge count", text.size());
  if (m < 0) throw CodecError("negative edge count", at);
  EdgeSet edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    std::size_t at_u = 0;
    std::size_t at_v = 0;
    if (!tok.next(u, at_u) || !tok.next(v, at_v)) throw CodecError("fewer edges than declared", text.size());
    if (u < 0 || u >= n) throw CodecError("vertex label out of range", at_u);
    if (v < 0 || v >= n) throw CodecError("vertex label out of range", at_v);
    if (u == v) throw CodecError("self-loop", at_u);
    edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
  }
  long long extra = 0;
  if (tok.next(extra, at)) throw CodecError("trailing data after edge list", at);
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const InputError& e) {
    throw CodecError(e.what(), 0);
  }
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6") return GraphFormat::graph6;
  if (name == "edgelist") return GraphFormat::edgelist;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

std::vector<Graph> read_graphs(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (format == GraphFormat::graph6) return parse_graph6_text(text);
  return {parse_edge_list(text)};
}

}  // namespace graphstab
