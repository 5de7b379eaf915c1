#pragma once

#include <string>

#include "coamoeba/coamoeba.hpp"

namespace coamoeba {

// Static figure emission: coamoebas in fundamental domains, lifted
// arrangements, orthographic 3d views. SVG is the primary format (cosets as
// exact lines/planes); PNG rasterizes clouds.

struct Projection {
    enum class Kind { Coords2D, Coords3DOrthographic } kind = Kind::Coords2D;
    double azimuth_deg = 30.0;
    double elevation_deg = 20.0;
};

struct RenderLayer {
    enum class Kind { Cloud, Cosets } kind = Kind::Cloud;
    // clouds: lifted points (doubles); cosets: the arrangement to enumerate
    std::vector<std::vector<double>> points;
    LiftedArrangement arrangement;
    std::string color = "#1f6fb2";
    double opacity = 1.0;
};

struct RenderSpec {
    Projection projection;
    int domains = 1;  // fundamental domains per axis; box = [0, domains]^n
    std::vector<RenderLayer> layers;
    int width = 640;
    int height = 640;
};

// One SVG element with class "coset" is emitted per enumerated arrangement
// member, so structural acceptance can count them.
std::string render_svg(const RenderSpec& spec);

// Minimal PNG encoding of the rasterized scene (zlib-deflated scanlines).
std::vector<unsigned char> render_png(const RenderSpec& spec);

void write_file(const std::string& path, const std::string& text);
void write_file_binary(const std::string& path,
                       const std::vector<unsigned char>& bytes);

}  // namespace coamoeba
