#include "monoidkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "monoidkit/green.hpp"
#include "monoidkit/schutzen.hpp"

namespace monoidkit {

namespace {

[[noreturn]] void parse_fail(const std::string& context, std::size_t line, const std::string& why) {
  raise(errc::parse_error, context + ":" + std::to_string(line) + ": " + why);
}

// strips comments and blank lines, keeping original line numbers
std::vector<std::pair<std::size_t, std::string>> logical_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' || raw.back() == '\r')) raw.pop_back();
    std::size_t start = raw.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    out.emplace_back(no, raw.substr(start));
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

FiniteMonoid parse_monoid_text(const std::string& text, const std::string& context) {
  auto lines = logical_lines(text);
  std::size_t at = 0;
  auto next = [&]() -> std::pair<std::size_t, std::vector<std::string>> {
    if (at >= lines.size()) parse_fail(context, lines.empty() ? 0 : lines.back().first, "unexpected end of file");
    auto [no, line] = lines[at++];
    return {no, tokens(line)};
  };

  {
    auto [no, tok] = next();
    if (tok.size() != 2 || tok[0] != "monoid" || tok[1] != "v1") parse_fail(context, no, "expected header 'monoid v1'");
  }
  FiniteMonoid m;
  bool have_size = false, have_identity = false, have_generators = false, in_table = false;
  std::vector<element> flat;
  while (at < lines.size()) {
    auto [no, tok] = next();
    if (in_table) {
      for (auto& t : tok) {
        try {
          unsigned long v = std::stoul(t);
          flat.push_back(static_cast<element>(v));
        } catch (const std::exception&) {
          parse_fail(context, no, "bad table entry '" + t + "'");
        }
      }
      continue;
    }
    if (tok[0] == "size" && tok.size() == 2) {
      m.size = static_cast<std::uint32_t>(std::stoul(tok[1]));
      have_size = true;
    } else if (tok[0] == "identity" && tok.size() == 2) {
      m.identity = static_cast<element>(std::stoul(tok[1]));
      have_identity = true;
    } else if (tok[0] == "generators") {
      for (std::size_t i = 1; i < tok.size(); ++i) m.generators.push_back(static_cast<element>(std::stoul(tok[i])));
      have_generators = true;
    } else if (tok[0] == "names") {
      m.names.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "table" && tok.size() == 1) {
      in_table = true;
    } else {
      parse_fail(context, no, "unrecognized line '" + tok[0] + "'");
    }
  }
  if (!have_size) parse_fail(context, 0, "missing 'size' line");
  if (!have_identity) parse_fail(context, 0, "missing 'identity' line");
  if (!have_generators) parse_fail(context, 0, "missing 'generators' line");
  if (!in_table) parse_fail(context, 0, "missing 'table' section");
  if (flat.size() != std::size_t(m.size) * m.size)
    parse_fail(context, 0, "table has " + std::to_string(flat.size()) + " entries, expected " +
                               std::to_string(std::size_t(m.size) * m.size));
  m.table = std::move(flat);
  try {
    return build_monoid(std::move(m));
  } catch (const MonoidError& e) {
    throw MonoidError(e.code(), context + ": " + e.what());
  }
}

FiniteMonoid load_monoid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::parse_error, path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_monoid_text(buf.str(), path);
}

std::string emit_monoid_text(const FiniteMonoid& m) {
  std::ostringstream out;
  out << "monoid v1\n";
  out << "size " << m.size << "\n";
  out << "identity " << m.identity << "\n";
  out << "generators";
  for (auto g : m.generators) out << " " << g;
  out << "\n";
  if (!m.names.empty()) {
    out << "names";
    for (auto& n : m.names) out << " " << n;
    out << "\n";
  }
  out << "table\n";
  for (element x = 0; x < m.size; ++x) {
    for (element y = 0; y < m.size; ++y) out << (y ? " " : "") << m.at(x, y);
    out << "\n";
  }
  return out.str();
}

void save_monoid_file(const FiniteMonoid& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(errc::parse_error, path + ": cannot open for writing");
  out << emit_monoid_text(m);
}

MatrixFile parse_matrix_text(const std::string& text, const std::string& context) {
  auto lines = logical_lines(text);
  if (lines.empty()) parse_fail(context, 0, "empty matrix file");
  auto head = tokens(lines[0].second);
  if (head.size() != 3 || head[0] != "rees") parse_fail(context, lines[0].first, "expected 'rees <I> <J>'");
  MatrixFile f;
  f.icount = static_cast<std::uint32_t>(std::stoul(head[1]));
  f.jcount = static_cast<std::uint32_t>(std::stoul(head[2]));
  for (std::size_t r = 1; r < lines.size(); ++r) {
    auto row = tokens(lines[r].second);
    if (row.size() != f.icount) parse_fail(context, lines[r].first, "row needs " + std::to_string(f.icount) + " entries");
    f.entries.insert(f.entries.end(), row.begin(), row.end());
  }
  if (f.entries.size() != std::size_t(f.icount) * f.jcount)
    parse_fail(context, lines.back().first, "expected " + std::to_string(f.jcount) + " rows");
  return f;
}

MatrixFile load_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::parse_error, path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str(), path);
}

std::string emit_matrix_text(const MatrixFile& m) {
  std::ostringstream out;
  out << "rees " << m.icount << " " << m.jcount << "\n";
  for (std::uint32_t j = 0; j < m.jcount; ++j) {
    for (std::uint32_t i = 0; i < m.icount; ++i)
      out << (i ? " " : "") << m.entries[std::size_t(j) * m.icount + i];
    out << "\n";
  }
  return out.str();
}

ReesSpec rees_spec_from_matrix(const MatrixFile& file, const FiniteMonoid& group) {
  ReesSpec spec;
  spec.group = group;
  spec.icount = file.icount;
  spec.jcount = file.jcount;
  for (auto& name : file.entries) {
    element found = group.size;
    for (element x = 0; x < group.size; ++x)
      if (group.name_of(x) == name) {
        found = x;
        break;
      }
    if (found == group.size) raise(errc::parse_error, "unknown group element '" + name + "'");
    spec.entries.push_back(found);
  }
  return spec;
}

std::string export_eggbox_dot(const FiniteMonoid& m) {
  auto green = green_structure(m);
  auto h_classes = green.h.classes();
  std::vector<char> is_group_h(h_classes.size(), 0);
  std::vector<std::uint32_t> gamma_order(h_classes.size(), 0);
  for (std::uint32_t hc = 0; hc < h_classes.size(); ++hc) {
    for (auto x : h_classes[hc]) is_group_h[hc] |= m.is_idempotent(x);
    gamma_order[hc] = schutzenberger_group(m, green, h_classes[hc]).group.order();
  }

  std::ostringstream out;
  out << "digraph eggbox {\n";
  out << "  graph [compound=true];\n  node [shape=box];\n";
  for (std::uint32_t dc = 0; dc < green.d.count; ++dc) {
    out << "  subgraph cluster_d" << dc << " {\n";
    out << "    label=\"D" << dc << "\";\n";
    // rows: R-classes in this D-class; columns: L-classes
    std::vector<std::uint32_t> rcls, lcls;
    for (element x = 0; x < m.size; ++x) {
      if (green.d.cls[x] != dc) continue;
      rcls.push_back(green.r.cls[x]);
      lcls.push_back(green.l.cls[x]);
    }
    std::sort(rcls.begin(), rcls.end());
    rcls.erase(std::unique(rcls.begin(), rcls.end()), rcls.end());
    std::sort(lcls.begin(), lcls.end());
    lcls.erase(std::unique(lcls.begin(), lcls.end()), lcls.end());
    for (auto rc : rcls) {
      out << "    { rank=same;";
      for (auto lc : lcls) {
        // the H-class at this cell, if the cell is nonempty
        std::int64_t cell = -1;
        for (element x = 0; x < m.size; ++x)
          if (green.r.cls[x] == rc && green.l.cls[x] == lc) {
            cell = green.h.cls[x];
            break;
          }
        if (cell < 0) continue;
        auto hc = static_cast<std::uint32_t>(cell);
        out << " h" << hc << " [label=\"" << h_classes[hc].size();
        if (is_group_h[hc]) out << "★";
        else out << " Γ" << gamma_order[hc];
        out << "\"];";
      }
      out << " }\n";
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace monoidkit
