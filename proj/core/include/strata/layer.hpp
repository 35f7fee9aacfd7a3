#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "strata/rule.hpp"

namespace strata {

// Tight bounds of the occupied cells of a layer.
struct CellRect {
    int min_row = 0;
    int min_col = 0;
    int max_row = 0;
    int max_col = 0;

    int width() const { return max_col - min_col + 1; }
    int height() const { return max_row - min_row + 1; }
};

// A rectangular binary grid; one horizontal slice of a tower. Cell value 1
// means a block is present. Stored row-major.
class Layer {
public:
    // All-empty layer. Dimensions must be >= 1.
    Layer(int width, int height);

    // Validates dimensions, cell count and that every entry is 0 or 1.
    static Layer from_cells(int width, int height, std::vector<std::uint8_t> cells);

    int width() const { return width_; }
    int height() const { return height_; }

    std::uint8_t at(int row, int col) const {
        assert(row >= 0 && row < height_ && col >= 0 && col < width_);
        return cells_[static_cast<std::size_t>(row) * width_ + col];
    }

    void set(int row, int col, std::uint8_t value) {
        assert(row >= 0 && row < height_ && col >= 0 && col < width_);
        assert(value == 0 || value == 1);
        cells_[static_cast<std::size_t>(row) * width_ + col] = value;
    }

    const std::vector<std::uint8_t>& cells() const { return cells_; }

    int population() const;
    bool is_empty() const { return population() == 0; }

    // Bounds of the occupied cells; nullopt for an empty layer.
    std::optional<CellRect> occupied_bounds() const;

    friend bool operator==(const Layer&, const Layer&) = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> cells_;
};

// Sum of the 9-cell Moore neighborhood centered at (row, col), the center
// counted once. Cells outside the grid contribute 0. Throws DomainError if
// the center itself is out of bounds.
int neighborhood_total(const Layer& layer, int row, int col);

// One synchronous totalistic update: every output cell is the rule's output
// for the neighborhood sum taken on the input layer. The exterior is dead and
// the frame never grows.
Layer step_layer(const Layer& layer, const TotalisticRule& rule);

// Cell-wise AND. Throws ValidationError when dimensions differ.
Layer apply_mask(const Layer& layer, const Layer& mask);

} // namespace strata
