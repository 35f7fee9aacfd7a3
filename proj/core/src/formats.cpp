#include "strata/formats.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "strata/error.hpp"

namespace strata {

namespace {

std::vector<std::string_view> split_lines(std::string_view input) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= input.size()) {
        std::size_t end = input.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(input.substr(start));
            break;
        }
        lines.push_back(input.substr(start, end - start));
        start = end + 1;
    }
    // A trailing final newline yields one empty pseudo-line; drop it.
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

Layer parse_grid_lines(const std::vector<std::string_view>& lines, int first_line_number) {
    const int height = static_cast<int>(lines.size());
    const int width = static_cast<int>(lines.front().size());
    if (width == 0) {
        throw ParseError("empty row", first_line_number);
    }
    Layer layer(width, height);
    for (int r = 0; r < height; ++r) {
        const std::string_view line = lines[static_cast<std::size_t>(r)];
        if (static_cast<int>(line.size()) != width) {
            throw ParseError("row has " + std::to_string(line.size()) + " cells, expected " +
                                 std::to_string(width),
                             first_line_number + r);
        }
        for (int c = 0; c < width; ++c) {
            const char ch = line[static_cast<std::size_t>(c)];
            if (ch == '#') {
                layer.set(r, c, 1);
            } else if (ch != '.') {
                throw ParseError(std::string("unexpected character '") + ch + "' at column " +
                                     std::to_string(c + 1),
                                 first_line_number + r);
            }
        }
    }
    return layer;
}

} // namespace

PlanDocument parse_plan_text(std::string_view input, std::string source_name) {
    std::vector<std::string_view> lines = split_lines(input);
    if (lines.empty()) {
        throw ParseError("empty plan");
    }
    Layer layer = parse_grid_lines(lines, 1);
    if (layer.is_empty()) {
        throw ValidationError("plan has no occupied cells");
    }
    return PlanDocument{std::move(layer), std::move(source_name)};
}

std::string render_plan_text(const Layer& layer) {
    std::string out;
    out.reserve(static_cast<std::size_t>((layer.width() + 1) * layer.height()));
    for (int r = 0; r < layer.height(); ++r) {
        for (int c = 0; c < layer.width(); ++c) {
            out.push_back(layer.at(r, c) ? '#' : '.');
        }
        out.push_back('\n');
    }
    return out;
}

namespace {

// Token scanner for the plain bitmap header: whitespace separates tokens and
// '#' starts a comment running to end of line.
class PbmScanner {
public:
    explicit PbmScanner(std::string_view input) : input_(input) {}

    void skip_separators(bool allow_comments) {
        while (pos_ < input_.size()) {
            const char ch = input_[pos_];
            if (ch == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos_;
            } else if (ch == '#' && allow_comments) {
                while (pos_ < input_.size() && input_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view next_token(bool allow_comments) {
        skip_separators(allow_comments);
        const std::size_t start = pos_;
        while (pos_ < input_.size() && !std::isspace(static_cast<unsigned char>(input_[pos_])) &&
               !(allow_comments && input_[pos_] == '#')) {
            ++pos_;
        }
        return input_.substr(start, pos_ - start);
    }

    // Single raster digit; packed digits are standard for plain bitmaps.
    char next_pixel() {
        skip_separators(false);
        if (pos_ >= input_.size()) return '\0';
        return input_[pos_++];
    }

    bool at_end() {
        skip_separators(false);
        return pos_ >= input_.size();
    }

    int line() const { return line_; }

private:
    std::string_view input_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

int parse_dimension(std::string_view token, const char* which, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(std::string("malformed ") + which + " '" + std::string(token) + "'",
                         line);
    }
    if (value < 1) {
        throw ParseError(std::string(which) + " must be >= 1, got " + std::to_string(value), line);
    }
    return value;
}

} // namespace

PlanDocument parse_pbm(std::string_view input, std::string source_name) {
    PbmScanner scanner(input);
    const std::string_view magic = scanner.next_token(true);
    if (magic != "P1") {
        throw ParseError("expected magic 'P1', got '" + std::string(magic) + "'", scanner.line());
    }
    const int width = parse_dimension(scanner.next_token(true), "width", scanner.line());
    const int height = parse_dimension(scanner.next_token(true), "height", scanner.line());

    Layer layer(width, height);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const char pixel = scanner.next_pixel();
            if (pixel == '\0') {
                throw ParseError("pixel data truncated: expected " +
                                     std::to_string(width * height) + " pixels",
                                 scanner.line());
            }
            if (pixel == '1') {
                layer.set(r, c, 1);
            } else if (pixel != '0') {
                throw ParseError(std::string("pixel must be 0 or 1, got '") + pixel + "'",
                                 scanner.line());
            }
        }
    }
    if (!scanner.at_end()) {
        throw ParseError("trailing data after pixel raster", scanner.line());
    }
    if (layer.is_empty()) {
        throw ValidationError("plan has no occupied cells");
    }
    return PlanDocument{std::move(layer), std::move(source_name)};
}

std::string render_pbm(const Layer& layer) {
    std::string out = "P1\n" + std::to_string(layer.width()) + " " +
                      std::to_string(layer.height()) + "\n";
    for (int r = 0; r < layer.height(); ++r) {
        for (int c = 0; c < layer.width(); ++c) {
            if (c > 0) out.push_back(' ');
            out.push_back(layer.at(r, c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

std::string export_slices(const Tower& tower) {
    std::string out = "CA-SLICES 1 " + std::to_string(tower.frame_width()) + " " +
                      std::to_string(tower.frame_height()) + " " + std::to_string(tower.height()) +
                      " " + to_string(tower.termination) + " " +
                      (tower.rule_code ? std::to_string(*tower.rule_code) : "-") + "\n";
    for (std::size_t i = 0; i < tower.layers.size(); ++i) {
        if (i > 0) out.push_back('\n');
        out += render_plan_text(tower.layers[i]);
    }
    return out;
}

Tower parse_slices(std::string_view input) {
    std::vector<std::string_view> lines = split_lines(input);
    if (lines.empty()) {
        throw ParseError("empty slice file");
    }

    std::istringstream header{std::string(lines.front())};
    std::string magic, version, termination_tag, rule_field;
    int width = 0, height = 0, layer_count = 0;
    if (!(header >> magic >> version >> width >> height >> layer_count >> termination_tag >>
          rule_field)) {
        throw ParseError("malformed header; expected "
                         "'CA-SLICES 1 <w> <h> <layers> <termination> <rule|->'",
                         1);
    }
    std::string extra;
    if (header >> extra) {
        throw ParseError("unexpected trailing header field '" + extra + "'", 1);
    }
    if (magic != "CA-SLICES") {
        throw ParseError("expected magic 'CA-SLICES', got '" + magic + "'", 1);
    }
    if (version != "1") {
        throw ParseError("unsupported slice format version '" + version + "'", 1);
    }
    if (width < 1 || height < 1 || layer_count < 1) {
        throw ParseError("header dimensions and layer count must be >= 1", 1);
    }
    const auto termination = termination_from_string(termination_tag);
    if (!termination) {
        throw ParseError("unknown termination tag '" + termination_tag + "'", 1);
    }

    Tower tower;
    tower.termination = *termination;
    if (rule_field != "-") {
        int code = 0;
        auto [ptr, ec] = std::from_chars(rule_field.data(), rule_field.data() + rule_field.size(),
                                         code);
        if (ec != std::errc{} || ptr != rule_field.data() + rule_field.size() || code < 0 ||
            code >= kRuleSpaceSize) {
            throw ParseError("rule field must be '-' or a code in [0, 1023], got '" + rule_field +
                                 "'",
                             1);
        }
        tower.rule_code = code;
    }

    std::size_t cursor = 1; // line index into `lines`
    for (int k = 0; k < layer_count; ++k) {
        if (k > 0) {
            if (cursor >= lines.size() || !lines[cursor].empty()) {
                throw ParseError("expected blank line between layers",
                                 static_cast<int>(cursor) + 1);
            }
            ++cursor;
        }
        if (cursor + static_cast<std::size_t>(height) > lines.size()) {
            throw ParseError("layer " + std::to_string(k) + " truncated: expected " +
                                 std::to_string(height) + " rows",
                             static_cast<int>(lines.size()) + 1);
        }
        std::vector<std::string_view> grid(lines.begin() + static_cast<std::ptrdiff_t>(cursor),
                                           lines.begin() +
                                               static_cast<std::ptrdiff_t>(cursor + height));
        Layer layer = parse_grid_lines(grid, static_cast<int>(cursor) + 1);
        if (layer.width() != width) {
            throw ParseError("layer " + std::to_string(k) + " is " +
                                 std::to_string(layer.width()) + " wide, header says " +
                                 std::to_string(width),
                             static_cast<int>(cursor) + 1);
        }
        tower.layers.push_back(std::move(layer));
        cursor += static_cast<std::size_t>(height);
    }
    if (cursor != lines.size()) {
        throw ParseError("unexpected content after layer " + std::to_string(layer_count - 1),
                         static_cast<int>(cursor) + 1);
    }
    return tower;
}

std::string export_obj(const Tower& tower) {
    if (tower.population() == 0) {
        throw ValidationError("mesh export needs at least one occupied cell");
    }
    std::string out;
    long long base = 0;
    for (int k = 0; k < tower.height(); ++k) {
        const Layer& layer = tower.layers[static_cast<std::size_t>(k)];
        for (int i = 0; i < layer.height(); ++i) {
            for (int j = 0; j < layer.width(); ++j) {
                if (!layer.at(i, j)) continue;
                const int x0 = j, y0 = k, z0 = i;
                const int x1 = j + 1, y1 = k + 1, z1 = i + 1;
                const int corners[8][3] = {
                    {x0, y0, z0}, {x1, y0, z0}, {x1, y0, z1}, {x0, y0, z1},
                    {x0, y1, z0}, {x1, y1, z0}, {x1, y1, z1}, {x0, y1, z1},
                };
                for (const auto& corner : corners) {
                    out += "v " + std::to_string(corner[0]) + " " + std::to_string(corner[1]) +
                           " " + std::to_string(corner[2]) + "\n";
                }
                // Quads wound counter-clockwise seen from outside the cube.
                const int faces[6][4] = {
                    {1, 2, 3, 4}, // bottom (-y)
                    {5, 8, 7, 6}, // top    (+y)
                    {1, 5, 6, 2}, // near   (-z)
                    {4, 3, 7, 8}, // far    (+z)
                    {1, 4, 8, 5}, // left   (-x)
                    {2, 6, 7, 3}, // right  (+x)
                };
                for (const auto& face : faces) {
                    out += "f";
                    for (int index : face) {
                        out += " " + std::to_string(base + index);
                    }
                    out.push_back('\n');
                }
                base += 8;
            }
        }
    }
    return out;
}

} // namespace strata
