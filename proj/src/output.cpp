#include "vit/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "vit/errors.hpp"

namespace vit {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

struct CellWriter {
  std::ostream& out;
  void operator()(std::monostate) const {}
  void operator()(double v) const { out << format_number(v); }
  void operator()(bool v) const { out << (v ? "true" : "false"); }
  void operator()(const std::string& v) const { out << v; }
};

std::optional<double> numeric(const Cell& c) {
  if (const double* v = std::get_if<double>(&c)) return *v;
  return std::nullopt;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", std::abs(v) < 1e-300 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

struct Series {
  std::string name;
  std::vector<std::optional<std::pair<double, double>>> points;  // nullopt breaks the line
};

}  // namespace

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(CellWriter{out}, row[i]);
    }
    out << '\n';
  }
}

void emit_csv(const Table& t, const std::filesystem::path& path) {
  if (t.rows.empty()) throw InvalidArgument("refusing to write an empty dataset");
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(t, f);
  f.flush();
  if (!f) throw IoError("write to '" + path.string() + "' failed");
}

SvgSpec default_svg_spec(const Table& t) {
  if (t.header.empty()) throw InvalidArgument("table has no columns");
  SvgSpec s;
  const auto& h = t.header;
  if (h.back() == "pole" && (h.size() == 3 || h.size() == 4)) {
    // sweep table
    if (h.size() == 4) s.group_column = h[0];
    s.x_column = h[h.size() - 3];
    s.y_columns = {h[h.size() - 2]};
    return s;
  }
  std::size_t first = h[0] == "case" && h.size() > 1 ? 1 : 0;
  s.x_column = h[first];
  for (std::size_t i = first + 1; i < h.size(); ++i) {
    const std::string& name = h[i];
    if (name == "pole" || name == "stable" || name == "case") continue;
    if (name.rfind("re_", 0) == 0 || name.rfind("im_", 0) == 0) continue;
    s.y_columns.push_back(name);
  }
  return s;
}

std::string render_svg(const Table& t, const SvgSpec& spec) {
  const int xcol = t.column(spec.x_column);
  if (xcol < 0) throw InvalidArgument("unknown x column '" + spec.x_column + "'");
  int gcol = -1;
  if (spec.group_column) {
    gcol = t.column(*spec.group_column);
    if (gcol < 0) throw InvalidArgument("unknown group column '" + *spec.group_column + "'");
  }

  std::vector<Series> series;
  for (const auto& yname : spec.y_columns) {
    const int ycol = t.column(yname);
    if (ycol < 0) throw InvalidArgument("unknown y column '" + yname + "'");
    std::map<double, std::size_t> groups;  // group value -> series index
    for (const auto& row : t.rows) {
      double key = 0.0;
      if (gcol >= 0) key = numeric(row[gcol]).value_or(0.0);
      auto [it, inserted] = groups.try_emplace(key, series.size());
      if (inserted) {
        std::string name = yname;
        if (gcol >= 0) name += " (" + t.header[gcol] + "=" + format_number(key) + ")";
        series.push_back({name, {}});
      }
      const auto x = numeric(row[xcol]);
      const auto y = numeric(row[ycol]);
      if (x && y && std::isfinite(*x) && std::isfinite(*y)) {
        series[it->second].points.emplace_back(std::make_pair(*x, *y));
      } else {
        series[it->second].points.emplace_back(std::nullopt);
      }
    }
  }

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      if (!p) continue;
      xmin = std::min(xmin, p->first);
      xmax = std::max(xmax, p->first);
      ymin = std::min(ymin, p->second);
      ymax = std::max(ymax, p->second);
    }
  }
  if (!(xmin <= xmax)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;

  const double left = 80, right = 180, top = 40, bottom = 60;
  const double pw = spec.width - left - right, ph = spec.height - top - bottom;
  auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double y) { return top + ph - (y - ymin) / (ymax - ymin) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!spec.title.empty())
    o << "<text x=\"" << fixed(left + pw / 2) << "\" y=\"20\" text-anchor=\"middle\">" << escape(spec.title)
      << "</text>\n";
  o << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\"" << fixed(pw) << "\" height=\""
    << fixed(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    const double fx = xmin + (xmax - xmin) * i / (kTicks - 1);
    const double fy = ymin + (ymax - ymin) * i / (kTicks - 1);
    o << "<line x1=\"" << fixed(sx(fx)) << "\" y1=\"" << fixed(top + ph) << "\" x2=\"" << fixed(sx(fx))
      << "\" y2=\"" << fixed(top + ph + 5) << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fixed(sx(fx)) << "\" y=\"" << fixed(top + ph + 18) << "\" text-anchor=\"middle\">"
      << tick_label(fx) << "</text>\n";
    o << "<line x1=\"" << fixed(left - 5) << "\" y1=\"" << fixed(sy(fy)) << "\" x2=\"" << fixed(left)
      << "\" y2=\"" << fixed(sy(fy)) << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(sy(fy) + 4) << "\" text-anchor=\"end\">"
      << tick_label(fy) << "</text>\n";
  }
  o << "<text x=\"" << fixed(left + pw / 2) << "\" y=\"" << fixed(spec.height - 15.0)
    << "\" text-anchor=\"middle\">" << escape(spec.x_column) << "</text>\n";
  std::string ylabel;
  for (const auto& y : spec.y_columns) ylabel += (ylabel.empty() ? "" : ", ") + y;
  o << "<text x=\"18\" y=\"" << fixed(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
    << fixed(top + ph / 2) << ")\">" << escape(ylabel) << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kPalette[k % std::size(kPalette)];
    std::string path;
    bool pen_down = false;
    for (const auto& p : series[k].points) {
      if (!p) {
        pen_down = false;
        continue;
      }
      path += (pen_down ? " L" : (path.empty() ? "M" : " M")) + fixed(sx(p->first)) + " " + fixed(sy(p->second));
      pen_down = true;
    }
    if (!path.empty())
      o << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
    const double ly = top + 14.0 * static_cast<double>(k) + 8.0;
    o << "<line x1=\"" << fixed(left + pw + 10) << "\" y1=\"" << fixed(ly) << "\" x2=\"" << fixed(left + pw + 30)
      << "\" y2=\"" << fixed(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << fixed(left + pw + 35) << "\" y=\"" << fixed(ly + 4) << "\">" << escape(series[k].name)
      << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

void emit_svg(const Table& t, const std::filesystem::path& path, const SvgSpec& spec) {
  if (t.rows.empty()) throw InvalidArgument("refusing to plot an empty dataset");
  const std::string svg = render_svg(t, spec);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << svg;
  f.flush();
  if (!f) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace vit
