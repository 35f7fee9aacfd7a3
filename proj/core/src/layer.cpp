#include "strata/layer.hpp"

#include <algorithm>
#include <numeric>

#include "strata/error.hpp"

namespace strata {

Layer::Layer(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw DomainError("layer dimensions must be >= 1, got " + std::to_string(width) +
                              "x" + std::to_string(height));
    }
    cells_.assign(static_cast<std::size_t>(width) * height, 0);
}

Layer Layer::from_cells(int width, int height, std::vector<std::uint8_t> cells) {
    Layer layer(width, height);
    if (cells.size() != layer.cells_.size()) {
        throw DomainError("cell count " + std::to_string(cells.size()) + " does not match " +
                              std::to_string(width) + "x" + std::to_string(height));
    }
    for (std::uint8_t v : cells) {
        if (v > 1) throw DomainError("layer cells must be 0 or 1");
    }
    layer.cells_ = std::move(cells);
    return layer;
}

int Layer::population() const {
    return std::accumulate(cells_.begin(), cells_.end(), 0);
}

std::optional<CellRect> Layer::occupied_bounds() const {
    CellRect rect{height_, width_, -1, -1};
    for (int r = 0; r < height_; ++r) {
        for (int c = 0; c < width_; ++c) {
            if (!at(r, c)) continue;
            rect.min_row = std::min(rect.min_row, r);
            rect.min_col = std::min(rect.min_col, c);
            rect.max_row = std::max(rect.max_row, r);
            rect.max_col = std::max(rect.max_col, c);
        }
    }
    if (rect.max_row < 0) return std::nullopt;
    return rect;
}

int neighborhood_total(const Layer& layer, int row, int col) {
    if (row < 0 || row >= layer.height() || col < 0 || col >= layer.width()) {
        throw DomainError("neighborhood center (" + std::to_string(row) + ", " +
                          std::to_string(col) + ") outside layer " +
                          std::to_string(layer.width()) + "x" + std::to_string(layer.height()));
    }
    int total = 0;
    const int r0 = std::max(row - 1, 0), r1 = std::min(row + 1, layer.height() - 1);
    const int c0 = std::max(col - 1, 0), c1 = std::min(col + 1, layer.width() - 1);
    for (int r = r0; r <= r1; ++r) {
        for (int c = c0; c <= c1; ++c) {
            total += layer.at(r, c);
        }
    }
    return total;
}

Layer step_layer(const Layer& layer, const TotalisticRule& rule) {
    const int w = layer.width();
    const int h = layer.height();
    Layer out(w, h);

    // Separable Moore sum: vertical triples per column for the current row,
    // then a horizontal triple over those.
    std::vector<int> col_sums(static_cast<std::size_t>(w));
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            int v = layer.at(r, c);
            if (r > 0) v += layer.at(r - 1, c);
            if (r + 1 < h) v += layer.at(r + 1, c);
            col_sums[static_cast<std::size_t>(c)] = v;
        }
        for (int c = 0; c < w; ++c) {
            int total = col_sums[static_cast<std::size_t>(c)];
            if (c > 0) total += col_sums[static_cast<std::size_t>(c - 1)];
            if (c + 1 < w) total += col_sums[static_cast<std::size_t>(c + 1)];
            out.set(r, c, static_cast<std::uint8_t>(rule.output_unchecked(total)));
        }
    }
    return out;
}

Layer apply_mask(const Layer& layer, const Layer& mask) {
    if (layer.width() != mask.width() || layer.height() != mask.height()) {
        throw DomainError("mask dimensions " + std::to_string(mask.width()) + "x" +
                              std::to_string(mask.height()) + " do not match layer " +
                              std::to_string(layer.width()) + "x" +
                              std::to_string(layer.height()));
    }
    Layer out(layer.width(), layer.height());
    for (int r = 0; r < layer.height(); ++r) {
        for (int c = 0; c < layer.width(); ++c) {
            out.set(r, c, static_cast<std::uint8_t>(layer.at(r, c) & mask.at(r, c)));
        }
    }
    return out;
}

} // namespace strata
