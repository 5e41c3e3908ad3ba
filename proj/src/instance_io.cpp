#include "meccount/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace meccount {

namespace {

constexpr std::string_view kHeader = "meccount-instance";

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

VertexPair unordered(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

std::string join_labels(const InstanceDocument& doc, const VertexSet& vs) {
  constexpr std::size_t kShown = 8;
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size() && i < kShown; ++i) {
    if (i > 0) out += ", ";
    out += doc.labels[vs[i]];
  }
  if (vs.size() > kShown) out += ", ...";
  return out + "}";
}

}  // namespace

bool InstanceDocument::same_content(const InstanceDocument& other) const {
  return labels == other.labels && instance.graph == other.instance.graph &&
         instance.knowledge == other.instance.knowledge && metadata == other.metadata;
}

InstanceDocument make_document(MecInstance instance,
                               std::map<std::string, std::string> metadata) {
  InstanceDocument doc;
  const std::size_t n = instance.graph.vertex_count();
  doc.labels.reserve(n);
  for (std::size_t v = 0; v < n; ++v) doc.labels.push_back(std::to_string(v));
  doc.vertex_lines.assign(n, 0);
  doc.instance = std::move(instance);
  doc.metadata = std::move(metadata);
  return doc;
}

InstanceDocument parse_instance(std::string_view text) {
  InstanceDocument doc;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<VertexPair> undirected;
  std::vector<VertexPair> directed;
  std::vector<VertexPair> knowledge;
  std::map<VertexPair, char> edge_kind;  // 'u' or 'd'
  bool saw_header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto words = split_words(line);
    const std::string_view kind = words[0];

    auto fail = [&](const std::string& what) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ": " + what, line_no);
    };
    auto lookup = [&](std::string_view label) {
      auto it = ids.find(std::string(label));
      if (it == ids.end()) throw fail("undeclared vertex '" + std::string(label) + "'");
      return it->second;
    };
    auto pair_arity = [&]() {
      if (words.size() != 3) {
        throw fail("'" + std::string(kind) + "' takes exactly two vertex labels");
      }
      const VertexId a = lookup(words[1]);
      const VertexId b = lookup(words[2]);
      if (a == b) throw fail("self-loop on '" + std::string(words[1]) + "'");
      return VertexPair{a, b};
    };

    if (!saw_header) {
      if (kind != kHeader || words.size() != 2) {
        throw fail("expected header '" + std::string(kHeader) + " " +
                   std::to_string(kInstanceFormatVersion) + "'");
      }
      if (words[1] != std::to_string(kInstanceFormatVersion)) {
        throw fail("unsupported format version '" + std::string(words[1]) + "'");
      }
      saw_header = true;
    } else if (kind == "vertex") {
      if (words.size() != 2) throw fail("'vertex' takes exactly one label");
      std::string label(words[1]);
      if (ids.count(label)) throw fail("duplicate vertex '" + label + "'");
      ids.emplace(label, static_cast<VertexId>(doc.labels.size()));
      doc.labels.push_back(std::move(label));
      doc.vertex_lines.push_back(line_no);
    } else if (kind == "undirected" || kind == "directed") {
      const auto [a, b] = pair_arity();
      const auto key = unordered(a, b);
      if (edge_kind.count(key)) {
        throw fail("edge between '" + doc.labels[a] + "' and '" + doc.labels[b] +
                   "' already declared on line " + std::to_string(doc.edge_lines[key]));
      }
      edge_kind[key] = kind[0];
      doc.edge_lines[key] = line_no;
      (kind == "undirected" ? undirected : directed).emplace_back(a, b);
    } else if (kind == "knowledge") {
      const auto e = pair_arity();
      if (doc.knowledge_lines.count(e)) {
        throw fail("knowledge claim repeated from line " +
                   std::to_string(doc.knowledge_lines[e]));
      }
      doc.knowledge_lines[e] = line_no;
      knowledge.push_back(e);
    } else if (kind == "meta") {
      if (words.size() < 3) throw fail("'meta' takes a key and a value");
      std::string key(words[1]);
      if (doc.metadata.count(key)) throw fail("duplicate meta key '" + key + "'");
      const auto after_key =
          line.substr(static_cast<std::size_t>(words[1].data() - line.data()) + words[1].size());
      doc.metadata[key] = std::string(trim(after_key));
    } else {
      throw fail("unknown record '" + std::string(kind) + "'");
    }
    if (end == text.size()) break;
  }
  if (!saw_header) throw ParseError("missing header line", 0);

  for (auto& [a, b] : undirected) {
    if (a > b) std::swap(a, b);
  }
  doc.instance.graph =
      PartiallyDirectedGraph(doc.labels.size(), std::move(undirected), std::move(directed));
  doc.instance.knowledge = BackgroundKnowledge(std::move(knowledge));
  return doc;
}

std::string serialize_instance(const InstanceDocument& doc) {
  const auto& g = doc.instance.graph;
  if (doc.labels.size() != g.vertex_count()) {
    throw InputError("document labels do not match the vertex count");
  }
  std::ostringstream os;
  os << kHeader << ' ' << kInstanceFormatVersion << '\n';
  for (const auto& [key, value] : doc.metadata) os << "meta " << key << ' ' << value << '\n';
  for (const auto& label : doc.labels) os << "vertex " << label << '\n';
  const auto& L = doc.labels;
  for (const auto& [a, b] : g.undirected_edges()) os << "undirected " << L[a] << ' ' << L[b] << '\n';
  for (const auto& [a, b] : g.directed_edges()) os << "directed " << L[a] << ' ' << L[b] << '\n';
  for (const auto& [a, b] : doc.instance.knowledge.edges()) {
    if (a >= L.size() || b >= L.size()) throw InputError("knowledge references a missing vertex");
    os << "knowledge " << L[a] << ' ' << L[b] << '\n';
  }
  return os.str();
}

InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const InstanceDocument& doc, const std::string& path) {
  const std::string text = serialize_instance(doc);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw InputError("write to '" + path + "' failed");
}

std::vector<Diagnostic> diagnose(const InstanceDocument& doc) {
  std::vector<Diagnostic> out;
  auto edge_line = [&](VertexPair e) {
    auto it = doc.edge_lines.find(unordered(e.first, e.second));
    return it == doc.edge_lines.end() ? std::size_t{0} : it->second;
  };
  auto label = [&](VertexId v) {
    return v < doc.labels.size() ? doc.labels[v] : "#" + std::to_string(v);
  };
  for (const auto& vio : validate(doc.instance)) {
    switch (vio.kind) {
      case ViolationKind::NonChordalComponent: {
        const VertexId first = vio.vertices.front();
        out.push_back({first < doc.vertex_lines.size() ? doc.vertex_lines[first] : 0,
                       "undirected component " + join_labels(doc, vio.vertices) +
                           " is not chordal"});
        break;
      }
      case ViolationKind::PartiallyDirectedCycle: {
        const VertexPair e = vio.edges.empty() ? VertexPair{0, 0} : vio.edges.front();
        const std::string detail =
            vio.edges.size() == 1
                ? "directed edge " + label(e.first) + " -> " + label(e.second) +
                      " lies inside an undirected component"
                : "directed edges between components " + join_labels(doc, vio.vertices) +
                      " form a cycle";
        out.push_back({vio.edges.empty() ? 0 : edge_line(e), detail});
        break;
      }
      case ViolationKind::KnowledgeNotInGraph: {
        const VertexPair e = vio.edges.front();
        auto it = doc.knowledge_lines.find(e);
        out.push_back({it == doc.knowledge_lines.end() ? 0 : it->second,
                       "knowledge " + label(e.first) + " -> " + label(e.second) +
                           " is not an edge of the graph"});
        break;
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
  return out;
}

std::string format_diagnostic(const Diagnostic& d) {
  return d.line == 0 ? d.message : "line " + std::to_string(d.line) + ": " + d.message;
}

}  // namespace meccount
