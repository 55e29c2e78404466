#include "boxcert/svg.hpp"

#include <array>
#include <sstream>

#include "boxcert/errors.hpp"

namespace boxcert {

namespace {

constexpr int kMargin = 20;
constexpr std::array<const char*, 8> kPalette = {"#cfe2f3", "#fce5cd", "#d9ead3", "#ead1dc",
                                                 "#fff2cc", "#d0e0e3", "#f4cccc", "#d9d2e9"};

// Exact value rounded half away from zero to three decimals; integers print
// without a fraction so golden files stay readable.
std::string fmt(const Rat& v) {
  if (v.is_integer()) return v.str();
  mpq_class scaled = v.raw() * 1000;
  mpz_class num = scaled.get_num();
  const mpz_class den = scaled.get_den();
  const bool negative = num < 0;
  if (negative) num = -num;
  mpz_class q = (2 * num + den) / (2 * den);
  std::string digits = q.get_str();
  if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - 3) + "." + digits.substr(digits.size() - 3);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return (negative && out != "0" ? "-" : "") + out;
}

struct Frame {
  const Box& outer;
  int scale;
  Rat x(const Rat& v) const { return Rat(kMargin) + (v - outer.lo[1]) * Rat(scale); }
  Rat y(const Rat& v) const { return Rat(kMargin) + (outer.hi[2] - v) * Rat(scale); }
};

}  // namespace

std::string render_svg(const Partition& p, const Certificate* cert, const RenderSpec& spec) {
  if (p.dim != 2) {
    throw RenderUnsupported("RenderUnsupported: only 2D partitions can be drawn (dim=" +
                            std::to_string(p.dim) + ")");
  }
  if (spec.scale < 1) throw InvalidArgument("render", "scale must be at least 1");
  const Frame f{p.outer, spec.scale};
  const Rat width = box_extent(p.outer, 1) * Rat(spec.scale) + Rat(2 * kMargin);
  const Rat height = box_extent(p.outer, 2) * Rat(spec.scale) + Rat(2 * kMargin);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";

  for (BoxIndex k = 1; k <= p.size(); ++k) {
    const Box& b = p.box(k);
    os << "  <rect class=\"box\" data-k=\"" << k << "\" x=\"" << fmt(f.x(b.lo[1])) << "\" y=\""
       << fmt(f.y(b.hi[2])) << "\" width=\"" << fmt(box_extent(b, 1) * Rat(spec.scale))
       << "\" height=\"" << fmt(box_extent(b, 2) * Rat(spec.scale)) << "\" fill=\""
       << kPalette[(k - 1) % kPalette.size()] << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
  }
  os << "  <rect class=\"outer\" x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
     << fmt(box_extent(p.outer, 1) * Rat(spec.scale)) << "\" height=\""
     << fmt(box_extent(p.outer, 2) * Rat(spec.scale))
     << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";

  if (spec.show_labels) {
    for (BoxIndex k = 1; k <= p.size(); ++k) {
      const Box& b = p.box(k);
      const Rat cx = (b.lo[1] + b.hi[1]) / Rat(2);
      const Rat cy = (b.lo[2] + b.hi[2]) / Rat(2);
      os << "  <text x=\"" << fmt(f.x(cx)) << "\" y=\"" << fmt(f.y(cy))
         << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" "
            "dominant-baseline=\"middle\">P"
         << k << " " << box_extent(b, 1) << "x" << box_extent(b, 2) << "</text>\n";
    }
  }

  if (cert != nullptr && spec.show_trail) {
    os << "  <polyline class=\"trail\" points=\"";
    bool first = true;
    for (const Point& v : cert->trail.vertices()) {
      os << (first ? "" : " ") << fmt(f.x(v[1])) << "," << fmt(f.y(v[2]));
      first = false;
    }
    os << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";

    const Axis j = cert->y.axis;
    const Point& origin = cert->trail.start;
    const bool from_lo = origin[j] == p.outer.lo[j];
    for (const Rat& yi : cert->y.points) {
      Point q = origin;
      q[j] = from_lo ? origin[j] + yi : origin[j] - yi;
      os << "  <circle class=\"y-point\" cx=\"" << fmt(f.x(q[1])) << "\" cy=\"" << fmt(f.y(q[2]))
         << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace boxcert
