#include "coamoeba/render.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace coamoeba {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Screen {
    int width, height;
    double pad = 30.0;
    double lo0, lo1, hi0, hi1;  // world window (after projection)

    std::pair<double, double> map(double u, double v) const {
        double sx = pad + (u - lo0) / (hi0 - lo0) * (width - 2 * pad);
        double sy = height - pad - (v - lo1) / (hi1 - lo1) * (height - 2 * pad);
        return {sx, sy};
    }
};

struct Proj3 {
    double m[2][3];
    std::pair<double, double> apply(const std::vector<double>& x) const {
        return {m[0][0] * x[0] + m[0][1] * x[1] + m[0][2] * x[2],
                m[1][0] * x[0] + m[1][1] * x[1] + m[1][2] * x[2]};
    }
};

Proj3 ortho(double az_deg, double el_deg) {
    double az = az_deg * kPi / 180.0, el = el_deg * kPi / 180.0;
    Proj3 p;
    // screen x: rotated horizontal; screen y: elevation mix
    p.m[0][0] = -std::sin(az);
    p.m[0][1] = std::cos(az);
    p.m[0][2] = 0;
    p.m[1][0] = -std::cos(az) * std::sin(el);
    p.m[1][1] = -std::sin(az) * std::sin(el);
    p.m[1][2] = std::cos(el);
    return p;
}

// Clip the 1-dimensional affine subspace to the box; returns segment or none.
bool clip_line_to_box(const AffineSubspace& line, const Box& box,
                      std::vector<double>& a, std::vector<double>& b) {
    const int n = line.ambient();
    std::vector<double> p = to_doubles(line.point);
    std::vector<double> d = to_doubles(line.direction.basis[0]);
    double t0 = -1e18, t1 = 1e18;
    for (int j = 0; j < n; ++j) {
        double lo = rat_double(box.lo[j]), hi = rat_double(box.hi[j]);
        if (std::abs(d[j]) < 1e-15) {
            if (p[j] < lo - 1e-12 || p[j] > hi + 1e-12) return false;
            continue;
        }
        double ta = (lo - p[j]) / d[j], tb = (hi - p[j]) / d[j];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
    }
    if (t0 > t1) return false;
    a.resize(n);
    b.resize(n);
    for (int j = 0; j < n; ++j) {
        a[j] = p[j] + t0 * d[j];
        b[j] = p[j] + t1 * d[j];
    }
    return true;
}

// Polygon of a 2-dimensional affine subspace clipped to a 3d box.
std::vector<std::vector<double>> clip_plane_to_box(const AffineSubspace& plane,
                                                   const Box& box) {
    std::vector<double> p = to_doubles(plane.point);
    std::vector<double> d1 = to_doubles(plane.direction.basis[0]);
    std::vector<double> d2 = to_doubles(plane.direction.basis[1]);
    // normal
    std::vector<double> nrm = {d1[1] * d2[2] - d1[2] * d2[1],
                               d1[2] * d2[0] - d1[0] * d2[2],
                               d1[0] * d2[1] - d1[1] * d2[0]};
    double c = nrm[0] * p[0] + nrm[1] * p[1] + nrm[2] * p[2];
    // collect intersections with the 12 box edges
    std::vector<double> lo = to_doubles(box.lo), hi = to_doubles(box.hi);
    std::vector<std::vector<double>> pts;
    for (int axis = 0; axis < 3; ++axis) {
        int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
        for (double v1 : {lo[a1], hi[a1]})
            for (double v2 : {lo[a2], hi[a2]}) {
                if (std::abs(nrm[axis]) < 1e-15) continue;
                double t = (c - nrm[a1] * v1 - nrm[a2] * v2) / nrm[axis];
                if (t < lo[axis] - 1e-9 || t > hi[axis] + 1e-9) continue;
                std::vector<double> q(3);
                q[axis] = t;
                q[a1] = v1;
                q[a2] = v2;
                pts.push_back(q);
            }
    }
    if (pts.size() < 3) return {};
    // order by angle around the centroid within the plane
    std::vector<double> centroid(3, 0);
    for (const auto& q : pts)
        for (int j = 0; j < 3; ++j) centroid[j] += q[j] / pts.size();
    auto coord = [&](const std::vector<double>& q, const std::vector<double>& axis) {
        double s = 0;
        for (int j = 0; j < 3; ++j) s += (q[j] - centroid[j]) * axis[j];
        return s;
    };
    std::sort(pts.begin(), pts.end(),
              [&](const std::vector<double>& x, const std::vector<double>& y) {
                  return std::atan2(coord(x, d2), coord(x, d1)) <
                         std::atan2(coord(y, d2), coord(y, d1));
              });
    return pts;
}

Box domain_box(int n, int domains) {
    Box b;
    b.lo.assign(n, Rat(0));
    b.hi.assign(n, Rat(domains));
    return b;
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
    int n = 0;
    for (const auto& l : spec.layers) {
        if (l.kind == RenderLayer::Kind::Cosets) n = l.arrangement.ambient;
        if (l.kind == RenderLayer::Kind::Cloud && !l.points.empty())
            n = static_cast<int>(l.points[0].size());
    }
    if (n == 0) n = 2;
    if (n > 3) throw InputError("render supports dimension <= 3 only");
    const bool three_d = (n == 3);
    if (three_d && spec.projection.kind != Projection::Kind::Coords3DOrthographic)
        throw InputError("3d inputs need the orthographic projection");

    Box box = domain_box(n, std::max(1, spec.domains));
    Proj3 proj = ortho(spec.projection.azimuth_deg, spec.projection.elevation_deg);
    auto project = [&](const std::vector<double>& x) {
        if (!three_d) return std::make_pair(x[0], x[1]);
        return proj.apply(x);
    };

    // world window from the box corners
    Screen sc{spec.width, spec.height};
    sc.lo0 = sc.lo1 = 1e18;
    sc.hi0 = sc.hi1 = -1e18;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<double> corner(n);
        for (int j = 0; j < n; ++j)
            corner[j] = rat_double((mask >> j & 1) ? box.hi[j] : box.lo[j]);
        auto [u, v] = project(corner);
        sc.lo0 = std::min(sc.lo0, u);
        sc.hi0 = std::max(sc.hi0, u);
        sc.lo1 = std::min(sc.lo1, v);
        sc.hi1 = std::max(sc.hi1, v);
    }
    if (sc.hi0 - sc.lo0 < 1e-9) sc.hi0 = sc.lo0 + 1;
    if (sc.hi1 - sc.lo1 < 1e-9) sc.hi1 = sc.lo1 + 1;

    std::ostringstream os;
    os.precision(8);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
       << "\" height=\"" << spec.height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    int coset_count = 0;

    // frame: box edges
    for (int mask = 0; mask < (1 << n); ++mask)
        for (int j = 0; j < n; ++j) {
            if (mask >> j & 1) continue;
            std::vector<double> a(n), b(n);
            for (int t = 0; t < n; ++t) {
                a[t] = rat_double((mask >> t & 1) ? box.hi[t] : box.lo[t]);
                b[t] = a[t];
            }
            b[j] = rat_double(box.hi[j]);
            auto [x1, y1] = sc.map(project(a).first, project(a).second);
            auto [x2, y2] = sc.map(project(b).first, project(b).second);
            os << "<line class=\"frame\" x1=\"" << x1 << "\" y1=\"" << y1
               << "\" x2=\"" << x2 << "\" y2=\"" << y2
               << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
        }

    for (const auto& layer : spec.layers) {
        if (layer.kind == RenderLayer::Kind::Cloud) {
            for (const auto& p : layer.points) {
                auto [u, v] = project(p);
                auto [x, y] = sc.map(u, v);
                os << "<circle class=\"cloud\" cx=\"" << x << "\" cy=\"" << y
                   << "\" r=\"1.1\" fill=\"" << layer.color << "\" fill-opacity=\""
                   << layer.opacity << "\"/>\n";
            }
            continue;
        }
        auto lifts = enumerate_in_box(layer.arrangement, box);
        for (const auto& lift : lifts) {
            if (lift.dim() == 1) {
                std::vector<double> a, b;
                if (!clip_line_to_box(lift, box, a, b)) continue;
                auto [x1, y1] = sc.map(project(a).first, project(a).second);
                auto [x2, y2] = sc.map(project(b).first, project(b).second);
                os << "<line class=\"coset\" x1=\"" << x1 << "\" y1=\"" << y1
                   << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\""
                   << layer.color << "\" stroke-opacity=\"" << layer.opacity
                   << "\" stroke-width=\"1.4\"/>\n";
                ++coset_count;
            } else if (lift.dim() == 2 && three_d) {
                auto poly = clip_plane_to_box(lift, box);
                if (poly.size() < 3) continue;
                os << "<polygon class=\"coset\" points=\"";
                for (const auto& q : poly) {
                    auto [u, v] = project(q);
                    auto [x, y] = sc.map(u, v);
                    os << x << "," << y << " ";
                }
                os << "\" fill=\"" << layer.color << "\" fill-opacity=\""
                   << layer.opacity * 0.4 << "\" stroke=\"" << layer.color
                   << "\"/>\n";
                ++coset_count;
            } else if (lift.dim() == 0) {
                std::vector<double> p = to_doubles(lift.point);
                auto [u, v] = project(p);
                auto [x, y] = sc.map(u, v);
                os << "<circle class=\"coset\" cx=\"" << x << "\" cy=\"" << y
                   << "\" r=\"2.5\" fill=\"" << layer.color << "\"/>\n";
                ++coset_count;
            }
        }
    }
    os << "<!-- coamoeba-lab cosets=" << coset_count << " -->\n";
    os << "</svg>\n";
    return os.str();
}

namespace {

struct Raster {
    int w, h;
    std::vector<unsigned char> rgb;  // 3 bytes per pixel
    Raster(int w_, int h_) : w(w_), h(h_), rgb(3 * w_ * h_, 255) {}
    void blend(int x, int y, unsigned r, unsigned g, unsigned b, double alpha) {
        if (x < 0 || x >= w || y < 0 || y >= h) return;
        size_t i = 3 * (static_cast<size_t>(y) * w + x);
        rgb[i] = static_cast<unsigned char>(rgb[i] * (1 - alpha) + r * alpha);
        rgb[i + 1] = static_cast<unsigned char>(rgb[i + 1] * (1 - alpha) + g * alpha);
        rgb[i + 2] = static_cast<unsigned char>(rgb[i + 2] * (1 - alpha) + b * alpha);
    }
    void line(double x1, double y1, double x2, double y2, unsigned r, unsigned g,
              unsigned b, double alpha) {
        double len = std::hypot(x2 - x1, y2 - y1);
        int steps = std::max(2, static_cast<int>(len * 2));
        for (int i = 0; i <= steps; ++i) {
            double t = static_cast<double>(i) / steps;
            blend(static_cast<int>(x1 + t * (x2 - x1)),
                  static_cast<int>(y1 + t * (y2 - y1)), r, g, b, alpha);
        }
    }
};

void parse_color(const std::string& hex, unsigned& r, unsigned& g, unsigned& b) {
    r = g = b = 0;
    if (hex.size() == 7 && hex[0] == '#') {
        r = std::stoul(hex.substr(1, 2), nullptr, 16);
        g = std::stoul(hex.substr(3, 2), nullptr, 16);
        b = std::stoul(hex.substr(5, 2), nullptr, 16);
    }
}

void png_chunk(std::vector<unsigned char>& out, const char* tag,
               const std::vector<unsigned char>& data) {
    auto push32 = [&](unsigned long v) {
        out.push_back((v >> 24) & 0xff);
        out.push_back((v >> 16) & 0xff);
        out.push_back((v >> 8) & 0xff);
        out.push_back(v & 0xff);
    };
    push32(static_cast<unsigned long>(data.size()));
    size_t start = out.size();
    for (int i = 0; i < 4; ++i) out.push_back(tag[i]);
    out.insert(out.end(), data.begin(), data.end());
    unsigned long crc = crc32(0L, out.data() + start, static_cast<uInt>(out.size() - start));
    push32(crc);
}

}  // namespace

std::vector<unsigned char> render_png(const RenderSpec& spec) {
    // rasterize via the same geometry as the SVG path
    std::string svg = render_svg(spec);  // ensures validation; not parsed
    (void)svg;

    int n = 0;
    for (const auto& l : spec.layers) {
        if (l.kind == RenderLayer::Kind::Cosets) n = l.arrangement.ambient;
        if (l.kind == RenderLayer::Kind::Cloud && !l.points.empty())
            n = static_cast<int>(l.points[0].size());
    }
    if (n == 0) n = 2;
    Box box = domain_box(n, std::max(1, spec.domains));
    Proj3 proj = ortho(spec.projection.azimuth_deg, spec.projection.elevation_deg);
    auto project = [&](const std::vector<double>& x) {
        if (n != 3) return std::make_pair(x[0], x[1]);
        return proj.apply(x);
    };
    Screen sc{spec.width, spec.height};
    sc.lo0 = sc.lo1 = 1e18;
    sc.hi0 = sc.hi1 = -1e18;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<double> corner(n);
        for (int j = 0; j < n; ++j)
            corner[j] = rat_double((mask >> j & 1) ? box.hi[j] : box.lo[j]);
        auto [u, v] = project(corner);
        sc.lo0 = std::min(sc.lo0, u);
        sc.hi0 = std::max(sc.hi0, u);
        sc.lo1 = std::min(sc.lo1, v);
        sc.hi1 = std::max(sc.hi1, v);
    }
    if (sc.hi0 - sc.lo0 < 1e-9) sc.hi0 = sc.lo0 + 1;
    if (sc.hi1 - sc.lo1 < 1e-9) sc.hi1 = sc.lo1 + 1;

    Raster img(spec.width, spec.height);
    for (const auto& layer : spec.layers) {
        unsigned r, g, b;
        parse_color(layer.color, r, g, b);
        if (layer.kind == RenderLayer::Kind::Cloud) {
            for (const auto& p : layer.points) {
                auto [u, v] = project(p);
                auto [x, y] = sc.map(u, v);
                img.blend(static_cast<int>(x), static_cast<int>(y), r, g, b,
                          layer.opacity);
            }
        } else {
            auto lifts = enumerate_in_box(layer.arrangement, box);
            for (const auto& lift : lifts) {
                if (lift.dim() != 1) continue;
                std::vector<double> a, bb;
                if (!clip_line_to_box(lift, box, a, bb)) continue;
                auto [u1, v1] = project(a);
                auto [u2, v2] = project(bb);
                auto [x1, y1] = sc.map(u1, v1);
                auto [x2, y2] = sc.map(u2, v2);
                img.line(x1, y1, x2, y2, r, g, b, layer.opacity);
            }
        }
    }

    // PNG assembly
    std::vector<unsigned char> raw;
    raw.reserve((3 * spec.width + 1) * spec.height);
    for (int y = 0; y < spec.height; ++y) {
        raw.push_back(0);  // no filter
        raw.insert(raw.end(), img.rgb.begin() + 3 * static_cast<size_t>(y) * spec.width,
                   img.rgb.begin() + 3 * static_cast<size_t>(y + 1) * spec.width);
    }
    uLongf comp_len = compressBound(static_cast<uLong>(raw.size()));
    std::vector<unsigned char> comp(comp_len);
    if (compress2(comp.data(), &comp_len, raw.data(), static_cast<uLong>(raw.size()),
                  6) != Z_OK)
        throw std::runtime_error("png deflate failed");
    comp.resize(comp_len);

    std::vector<unsigned char> out = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    std::vector<unsigned char> ihdr;
    auto push32 = [&](unsigned long v) {
        ihdr.push_back((v >> 24) & 0xff);
        ihdr.push_back((v >> 16) & 0xff);
        ihdr.push_back((v >> 8) & 0xff);
        ihdr.push_back(v & 0xff);
    };
    push32(spec.width);
    push32(spec.height);
    ihdr.push_back(8);   // bit depth
    ihdr.push_back(2);   // rgb
    ihdr.push_back(0);
    ihdr.push_back(0);
    ihdr.push_back(0);
    png_chunk(out, "IHDR", ihdr);
    png_chunk(out, "IDAT", comp);
    png_chunk(out, "IEND", {});
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InputError("cannot write " + path);
    os << text;
}

void write_file_binary(const std::string& path,
                       const std::vector<unsigned char>& bytes) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InputError("cannot write " + path);
    os.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
}

}  // namespace coamoeba
