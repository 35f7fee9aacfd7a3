#pragma once

#include <string>
#include <string_view>

#include "strata/growth.hpp"
#include "strata/layer.hpp"

namespace strata {

// A ground plan plus a provenance label for reports.
struct PlanDocument {
    Layer layer;
    std::string source_name;
};

// Parses newline-separated rows of '#' (occupied) and '.' (empty). All rows
// must have equal length; a trailing final newline is permitted. Rejects
// ragged rows, foreign characters, empty input, and plans with no occupied
// cell.
PlanDocument parse_plan_text(std::string_view input, std::string source_name = "");

// Renders a layer in the same '#'/'.' alphabet, one row per line, with a
// trailing newline. parse_plan_text(render_plan_text(layer)) == layer.
std::string render_plan_text(const Layer& layer);

// Parses a plain portable bitmap ("P1"): magic, optional '#' comments among
// the header tokens, width, height, then width*height pixels of 0/1 (packed
// digits or whitespace-separated). Pixel 1 = occupied.
PlanDocument parse_pbm(std::string_view input, std::string source_name = "");

// Renders a layer as a plain portable bitmap, one pixel row per line.
std::string render_pbm(const Layer& layer);

// Serializes a tower as text:
//   CA-SLICES 1 <width> <height> <layer_count> <termination> <rule_code|->
// followed by each layer bottom-up as '#'/'.' rows, layers separated by one
// blank line, with a single trailing newline. Byte-exact round-trip with
// parse_slices.
std::string export_slices(const Tower& tower);

// Inverse of export_slices. Validates the header against the body and rejects
// unknown termination tags, dimension mismatches, and count mismatches, with
// line numbers.
Tower parse_slices(std::string_view input);

// Emits one axis-aligned unit cube per occupied cell in the common "v"/"f"
// polygon mesh text format. Cells are visited layers-ascending, then rows,
// then columns. The cube for (layer k, row i, col j) spans x in [j, j+1],
// y in [k, k+1], z in [i, i+1] (y is up); its 8 vertices are emitted in the
// documented corner order below, then 6 outward-facing quads with 1-based
// indices local to that block. No vertex sharing between cubes.
//
// Corner order for a cube at (x, y, z) = (j, k, i):
//   1 (x,   y,   z  )   2 (x+1, y,   z  )   3 (x+1, y,   z+1)   4 (x, y,   z+1)
//   5 (x,   y+1, z  )   6 (x+1, y+1, z  )   7 (x+1, y+1, z+1)   8 (x, y+1, z+1)
//
// Throws ValidationError for a tower with no occupied cells.
std::string export_obj(const Tower& tower);

} // namespace strata
