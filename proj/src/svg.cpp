#include "sparserips/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "sparserips/errors.hpp"
#include "sparserips/numeric.hpp"

namespace sparse_rips {

namespace {

constexpr double kMargin = 48.0;

class Axes {
 public:
  Axes(double lo, double hi, bool log_axes, int width, int height)
      : lo_(lo), hi_(hi), log_(log_axes), width_(width), height_(height) {}

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  /// Row for infinite deaths, above the plotting square.
  double inf_y() const { return kMargin / 2; }

  double clamp(double v) const { return std::clamp(v, lo_, hi_); }

  double x(double v) const { return kMargin + unit(v) * (width_ - 2 * kMargin); }
  double y(double v) const {
    if (std::isinf(v)) return inf_y();
    return height_ - kMargin - unit(v) * (height_ - 2 * kMargin);
  }

 private:
  double unit(double v) const {
    v = clamp(v);
    if (log_) return (std::log(v) - std::log(lo_)) / (std::log(hi_) - std::log(lo_));
    return (v - lo_) / (hi_ - lo_);
  }

  double lo_;
  double hi_;
  bool log_;
  int width_;
  int height_;
};

std::string num(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v;
  return os.str();
}

std::vector<double> samples(const Axes& axes, bool log_axes, std::size_t count) {
  std::vector<double> xs(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double u = static_cast<double>(k) / static_cast<double>(count - 1);
    xs[k] = log_axes ? axes.lo() * std::pow(axes.hi() / axes.lo(), u)
                     : axes.lo() + u * (axes.hi() - axes.lo());
  }
  return xs;
}

void curve(std::ostream& os, const Axes& axes, bool log_axes, const ScaleMap& psi,
           const char* colour, const char* id) {
  os << "<polyline id=\"" << id << "\" fill=\"none\" stroke=\"" << colour
     << "\" stroke-width=\"1.5\" points=\"";
  bool first = true;
  for (double x : samples(axes, log_axes, 256)) {
    const double y = psi(x);
    if (!(y <= axes.hi())) continue;
    os << (first ? "" : " ") << num(axes.x(x)) << ',' << num(axes.y(std::max(y, axes.lo())));
    first = false;
  }
  os << "\"/>\n";
}

}  // namespace

std::string render_svg(const PersistenceDiagram& diagram,
                       const std::optional<PrecisionProfile>& profile, const PlotOptions& options) {
  if (options.log_axes && !(options.clip > 0.0)) throw InputError("log plot needs a positive clip");
  std::optional<ApproxDiagram> approx;
  if (profile) approx = approximate(diagram, *profile);

  double top = 0.0;
  for (const DiagramEntry& e : diagram.entries) {
    if (std::isfinite(e.birth)) top = std::max(top, e.birth);
    if (std::isfinite(e.death)) top = std::max(top, e.death);
  }
  double lo = options.log_axes ? options.clip : 0.0;
  double hi = top > 0.0 ? top * 1.05 : 1.0;
  if (hi <= lo) hi = lo * 10.0;
  const Axes axes(lo, hi, options.log_axes, options.width, options.height);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
     << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\"" << options.height
     << "\" fill=\"white\"/>\n";
  os << "<rect id=\"frame\" x=\"" << num(axes.x(lo)) << "\" y=\"" << num(axes.y(hi))
     << "\" width=\"" << num(axes.x(hi) - axes.x(lo)) << "\" height=\""
     << num(axes.y(lo) - axes.y(hi)) << "\" fill=\"none\" stroke=\"#888\"/>\n";
  os << "<text x=\"" << num(axes.x(lo)) << "\" y=\"" << num(axes.y(lo) + 16) << "\" font-size=\"11\">"
     << format_real(lo) << "</text>\n";
  os << "<text x=\"" << num(axes.x(hi) - 40) << "\" y=\"" << num(axes.y(lo) + 16)
     << "\" font-size=\"11\">" << format_real(hi) << "</text>\n";
  os << "<text x=\"" << num(options.width / 2.0 - 20) << "\" y=\"" << num(options.height - 8.0)
     << "\" font-size=\"12\">birth" << (options.log_axes ? " (log)" : "") << "</text>\n";
  os << "<text x=\"4\" y=\"" << num(options.height / 2.0) << "\" font-size=\"12\">death</text>\n";
  os << "<line id=\"inf-line\" x1=\"" << num(axes.x(lo)) << "\" y1=\"" << num(axes.inf_y())
     << "\" x2=\"" << num(axes.x(hi)) << "\" y2=\"" << num(axes.inf_y())
     << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  os << "<line id=\"diagonal\" x1=\"" << num(axes.x(lo)) << "\" y1=\"" << num(axes.y(lo))
     << "\" x2=\"" << num(axes.x(hi)) << "\" y2=\"" << num(axes.y(hi))
     << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  if (profile && !profile->psi().is_identity()) {
    curve(os, axes, options.log_axes, profile->psi(), "red", "psi");
  }
  if (options.overlay) curve(os, axes, options.log_axes, *options.overlay, "green", "psi-overlay");

  for (std::size_t k = 0; k < diagram.entries.size(); ++k) {
    const DiagramEntry& e = diagram.entries[k];
    const double b = axes.clamp(e.birth);
    const double d = std::isinf(e.death) ? e.death : axes.clamp(e.death);
    const char* colour = "black";
    if (approx) {
      const ApproxEntry& a = approx->entries[k];
      colour = a.cls == EntryClass::Definite ? "#1f77b4" : "#ff7f0e";
      const double x0 = axes.x(a.rect.birth_lo);
      const double x1 = axes.x(a.rect.birth_hi);
      const double y0 = a.open_death ? axes.inf_y() : axes.y(a.rect.death_hi);
      const double y1 = a.open_death ? axes.inf_y() : axes.y(a.rect.death_lo);
      if (x1 - x0 > 0.0 || y1 - y0 > 0.0) {
        os << "<rect class=\"" << (a.cls == EntryClass::Definite ? "definite" : "possible")
           << "\" data-dim=\"" << e.dim << "\" data-b=\"" << format_real(axes.clamp(a.rect.birth_lo))
           << "\" data-d=\"" << format_real(a.open_death ? e.death : axes.clamp(a.rect.death_lo))
           << "\" x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(x1 - x0)
           << "\" height=\"" << num(y1 - y0) << "\" fill=\"" << colour
           << "\" fill-opacity=\"0.3\" stroke=\"" << colour << "\"/>\n";
      }
    }
    os << "<circle class=\"entry\" data-dim=\"" << e.dim << "\" data-b=\"" << format_real(b)
       << "\" data-d=\"" << format_real(d) << "\" cx=\"" << num(axes.x(b)) << "\" cy=\""
       << num(axes.y(d)) << "\" r=\"" << (e.dim == 0 ? 2.5 : 3.5) << "\" fill=\"" << colour
       << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sparse_rips
