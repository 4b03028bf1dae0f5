// export.cpp

#include "permtri/export.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace permtri {

std::string export_off(const Sbdw& T, const Vec& y) {
  const CoxeterSystem& W = T.group();
  const int r = W.rank();
  const bool exact = W.field()->is_rational();
  std::ostringstream os;
  if (r == 3) os << "OFF\n";
  else os << "nOFF\n" << r << "\n";
  os << "# group " << W.label() << ", c = " << format_word(T.dual().c_word()) << "\n";
  if (!exact)
    os << "# coordinates are decimal approximations; exact values in the field " << W.field()->describe()
       << " follow each vertex as a comment\n";
  os << W.order() << " " << T.cells().size() << " 0\n";
  char buf[64];
  for (Elem w = 0; w < W.order(); ++w) {
    Vec p = W.act(w, y);
    std::string exact_line;
    for (int i = 0; i < r; ++i) {
      if (i) os << " ";
      if (exact) {
        os << p[i].to_string();
      } else {
        std::snprintf(buf, sizeof buf, "%.12f", p[i].to_double());
        os << buf;
        exact_line += (i ? " " : "") + p[i].to_string();
      }
    }
    os << "\n";
    if (!exact) os << "# exact " << exact_line << "\n";
  }
  for (const auto& cell : T.cells()) {
    os << cell.vertices.size();
    for (Elem w : cell.vertices) os << " " << w;
    os << "\n";
  }
  return os.str();
}

namespace {

using P3 = std::array<double, 3>;

double dot3(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
P3 unit(P3 a) {
  double n = std::sqrt(dot3(a, a));
  return {a[0] / n, a[1] / n, a[2] / n};
}

class Projector {
 public:
  explicit Projector(const CoxeterSystem& W) {
    // W-invariant inner product by averaging, then a Cholesky frame.
    double G[3][3] = {};
    for (Elem w = 0; w < W.order(); ++w) {
      Mat m = W.matrix(w);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) G[i][j] += m[k][i].to_double() * m[k][j].to_double();
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j <= i; ++j) {
        double s = G[i][j];
        for (int k = 0; k < j; ++k) s -= L_[i][k] * L_[j][k];
        L_[i][j] = i == j ? std::sqrt(s) : s / L_[j][j];
      }
  }
  P3 euclid(const Vec& x) const {
    P3 out{0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int k = i; k < 3; ++k) out[i] += L_[k][i] * x[k].to_double();
    return unit(out);
  }
  void set_center(const P3& n) {
    n_ = unit(n);
    P3 a = std::fabs(n_[0]) < 0.9 ? P3{1, 0, 0} : P3{0, 1, 0};
    double d = dot3(a, n_);
    e1_ = unit({a[0] - d * n_[0], a[1] - d * n_[1], a[2] - d * n_[2]});
    e2_ = {n_[1] * e1_[2] - n_[2] * e1_[1], n_[2] * e1_[0] - n_[0] * e1_[2], n_[0] * e1_[1] - n_[1] * e1_[0]};
  }
  std::array<double, 2> plane(const P3& p) const {
    double den = 1 + dot3(p, n_);
    return {dot3(p, e1_) / den, dot3(p, e2_) / den};
  }

 private:
  double L_[3][3] = {};
  P3 n_{0, 0, 1}, e1_{1, 0, 0}, e2_{0, 1, 0};
};

std::string arc_path(const Projector& pr, const std::vector<P3>& corners, double scale, double cx, double cy) {
  std::ostringstream os;
  char buf[64];
  const int samples = 24;
  for (std::size_t k = 0; k < corners.size(); ++k) {
    const P3& a = corners[k];
    const P3& b = corners[(k + 1) % corners.size()];
    for (int s = 0; s < samples; ++s) {
      double t = static_cast<double>(s) / samples;
      P3 p = unit({a[0] * (1 - t) + b[0] * t, a[1] * (1 - t) + b[1] * t, a[2] * (1 - t) + b[2] * t});
      auto q = pr.plane(p);
      std::snprintf(buf, sizeof buf, "%s%.3f %.3f", (k == 0 && s == 0) ? "M" : " L", cx + scale * q[0],
                    cy - scale * q[1]);
      os << buf;
    }
  }
  os << " Z";
  return os.str();
}

}  // namespace

std::string export_svg(const Sbdw& T) {
  const CoxeterSystem& W = T.group();
  if (W.rank() != 3) throw InvalidInput("SVG pictures of Delta_c^+ need rank 3");
  const DualStructure& D = T.dual();
  auto delta = delta_vectors(D);
  Projector pr(W);
  P3 center{0, 0, 0};
  for (int s = 0; s < 3; ++s) {
    P3 p = pr.euclid(delta[s]);
    for (int i = 0; i < 3; ++i) center[i] += p[i];
  }
  pr.set_center(center);

  std::vector<std::array<double, 2>> pts;
  for (const auto& d : delta) pts.push_back(pr.plane(pr.euclid(d)));
  double extent = 1e-9;
  for (auto& p : pts) extent = std::max({extent, std::fabs(p[0]), std::fabs(p[1])});
  const double size = 600, cx = size / 2, cy = size / 2, scale = 0.4 * size / extent;

  std::ostringstream os;
  char buf[160];
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
        "viewBox=\"0 0 600 600\">\n"
     << "<title>" << W.label() << " c = " << format_word(D.c_word()) << "</title>\n";
  os << "<g id=\"clusters\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2.5\">\n";
  for (const auto& face : D.cluster_maximal_faces()) {
    std::vector<P3> corners;
    for (int pos : face) corners.push_back(pr.euclid(delta[D.cluster_sequence()[pos - 1]]));
    os << "<path class=\"cluster\" d=\"" << arc_path(pr, corners, scale, cx, cy) << "\"/>\n";
  }
  os << "</g>\n<g id=\"chambers\" fill=\"none\" stroke=\"#34495e\" stroke-width=\"1\">\n";
  for (Elem u : T.w_plus()) {
    std::vector<P3> corners;
    for (const Vec& ray : chamber_rays(W, u)) corners.push_back(pr.euclid(ray));
    os << "<path class=\"chamber\" data-u=\"" << W.word_string(u) << "\" d=\""
       << arc_path(pr, corners, scale, cx, cy) << "\"/>\n";
  }
  os << "</g>\n<g id=\"delta-vertices\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < D.cluster_sequence().size(); ++i) {
    int t = D.cluster_sequence()[i];
    std::snprintf(buf, sizeof buf, "<circle class=\"delta\" cx=\"%.3f\" cy=\"%.3f\" r=\"4\"/>", cx + scale * pts[t][0],
                  cy - scale * pts[t][1]);
    os << buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%.3f\" y=\"%.3f\">", cx + scale * pts[t][0] + 6,
                  cy - scale * pts[t][1] - 6);
    os << buf << (i + 1) << ": " << W.word_string(W.reflection(t)) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace permtri
