#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "meshcore/editor.hpp"
#include "meshcore/error.hpp"
#include "meshcore/mesh.hpp"
#include "meshcore/mesh_function.hpp"

namespace meshcore {

// Mesh file format, version 1: line-oriented text.
//
//   # comment lines start with '#'
//   mesh <kind> <tdim> <gdim>
//   vertices <N0>
//   <N0 lines of gdim floats>
//   cells <ND>
//   <ND lines of tdim+1 vertex indices>
//
// Floats are written with 17 significant digits, so write -> read -> write
// is byte-stable.

namespace detail {

class LineReader {
public:
  explicit LineReader(const std::string& path) : path_(path), in_(path) {
    if (!in_)
      throw ParseError(path + ": cannot open for reading");
  }

  /// Next content line (comments and blank lines skipped); false at EOF.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(path_ + ":" + std::to_string(number_) + ": " + message);
  }

  std::size_t number() const { return number_; }

private:
  std::string path_;
  std::ifstream in_;
  std::size_t number_ = 0;
};

inline std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

} // namespace detail

/// Parse a MeshFileV1 file. The mesh editor revalidates everything, so
/// malformed cells surface as errors with the offending line number.
inline Mesh read_mesh(const std::string& path) {
  detail::LineReader reader(path);
  std::string line;

  auto expect = [&](const char* what) {
    if (!reader.next(line))
      reader.fail(std::string("unexpected end of file, expected ") + what);
  };

  expect("'mesh <kind> <tdim> <gdim>'");
  std::istringstream header(line);
  std::string tag, kind_name;
  std::uint32_t tdim = 0, gdim = 0;
  if (!(header >> tag >> kind_name >> tdim >> gdim) || tag != "mesh")
    reader.fail("expected 'mesh <kind> <tdim> <gdim>', got '" + line + "'");

  MeshEditor editor;
  try {
    editor.open(cell_kind_from_string(kind_name), tdim, gdim);
  } catch (const Error& e) {
    reader.fail(e.what());
  }

  expect("'vertices <N0>'");
  std::istringstream vertex_header(line);
  std::uint32_t n_vertices = 0;
  if (!(vertex_header >> tag >> n_vertices) || tag != "vertices")
    reader.fail("expected 'vertices <count>', got '" + line + "'");
  try {
    editor.init_vertices(n_vertices);
  } catch (const Error& e) {
    reader.fail(e.what());
  }
  std::vector<double> x(gdim);
  for (std::uint32_t v = 0; v < n_vertices; ++v) {
    expect("a vertex coordinate line");
    std::istringstream fields(line);
    for (std::uint32_t i = 0; i < gdim; ++i)
      if (!(fields >> x[i]))
        reader.fail("expected " + std::to_string(gdim) +
                    " coordinates (vertex " + std::to_string(v) +
                    " of " + std::to_string(n_vertices) + "), got '" + line +
                    "'");
    std::string extra;
    if (fields >> extra)
      reader.fail("trailing data '" + extra + "' after " +
                  std::to_string(gdim) + " coordinates");
    try {
      editor.add_vertex(v, x);
    } catch (const Error& e) {
      reader.fail(e.what());
    }
  }

  expect("'cells <ND>'");
  std::istringstream cell_header(line);
  std::uint32_t n_cells = 0;
  if (!(cell_header >> tag >> n_cells) || tag != "cells")
    reader.fail("expected 'cells <count>' (count mismatch above?), got '" +
                line + "'");
  try {
    editor.init_cells(n_cells);
  } catch (const Error& e) {
    reader.fail(e.what());
  }
  std::vector<EntityIndex> tuple(tdim + 1);
  for (std::uint32_t c = 0; c < n_cells; ++c) {
    expect("a cell vertex line");
    std::istringstream fields(line);
    for (std::uint32_t i = 0; i <= tdim; ++i)
      if (!(fields >> tuple[i]))
        reader.fail("expected " + std::to_string(tdim + 1) +
                    " vertex indices (cell " + std::to_string(c) + " of " +
                    std::to_string(n_cells) + "), got '" + line + "'");
    std::string extra;
    if (fields >> extra)
      reader.fail("trailing data '" + extra + "' after " +
                  std::to_string(tdim + 1) + " vertex indices");
    try {
      editor.add_cell(c, tuple);
    } catch (const Error& e) {
      reader.fail(e.what());
    }
  }

  if (reader.next(line))
    reader.fail("trailing content '" + line + "' after all cells");

  try {
    return editor.close();
  } catch (const Error& e) {
    reader.fail(e.what());
  }
}

/// Write the canonical MeshFileV1 form.
inline void write_mesh(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw ParseError(path + ": cannot open for writing");
  const Dim D = mesh.tdim();
  out << "mesh " << to_string(mesh.kind()) << ' ' << D << ' ' << mesh.gdim()
      << '\n';
  out << "vertices " << mesh.num_vertices() << '\n';
  for (std::uint32_t v = 0; v < mesh.num_vertices(); ++v) {
    const auto p = mesh.point(v);
    for (std::uint32_t i = 0; i < mesh.gdim(); ++i) {
      if (i) out << ' ';
      out << detail::format_double(p[i]);
    }
    out << '\n';
  }
  const Connectivity* cells = mesh.topology().connectivity(D, 0);
  out << "cells " << mesh.num_cells() << '\n';
  for (std::uint32_t c = 0; c < mesh.num_cells(); ++c) {
    const auto row = cells->row(c);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << row[i];
    }
    out << '\n';
  }
  if (!out)
    throw ParseError(path + ": write failed");
}

/// Integer mesh function file: `# meshfunction <dim> <N>` then N values.
struct MeshFunctionData {
  Dim dim = 0;
  std::vector<std::uint32_t> values;
};

inline void write_mesh_function(const MeshFunction<std::uint32_t>& f,
                                const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw ParseError(path + ": cannot open for writing");
  out << "# meshfunction " << f.dim() << ' ' << f.size() << '\n';
  for (std::uint32_t v : f.values()) out << v << '\n';
  if (!out)
    throw ParseError(path + ": write failed");
}

inline MeshFunctionData read_mesh_function(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(path + ": cannot open for reading");
  std::string line;
  if (!std::getline(in, line))
    throw ParseError(path + ":1: empty file");
  std::istringstream header(line);
  std::string hash, tag;
  MeshFunctionData data;
  std::uint32_t count = 0;
  if (!(header >> hash >> tag >> data.dim >> count) || hash != "#" ||
      tag != "meshfunction")
    throw ParseError(path + ":1: expected '# meshfunction <dim> <N>'");
  data.values.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t value = 0;
    if (!(in >> value))
      throw ParseError(path + ": expected " + std::to_string(count) +
                       " values, found " + std::to_string(i));
    data.values.push_back(value);
  }
  return data;
}

} // namespace meshcore
