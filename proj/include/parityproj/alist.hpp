#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace parityproj {

struct AlistParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sparse binary parity-check matrix. rows[j] lists the variable indices of
// check j (0-based, strictly increasing, degree >= 2); cols[i] lists the
// checks of variable i (degree >= 1). row/col adjacency is kept consistent by
// construction.
class ParityCheckMatrix {
  public:
    ParityCheckMatrix(int n, int m, std::vector<std::vector<std::int32_t>> rows);

    int n() const { return n_; }
    int m() const { return m_; }
    const std::vector<std::int32_t>& row(int j) const { return rows_[static_cast<std::size_t>(j)]; }
    const std::vector<std::int32_t>& col(int i) const { return cols_[static_cast<std::size_t>(i)]; }
    int row_degree(int j) const { return static_cast<int>(row(j).size()); }
    int col_degree(int i) const { return static_cast<int>(col(i).size()); }
    int max_row_degree() const;
    int max_col_degree() const;

    /// Position of variable i within row j (index into row(j)). Precomputed;
    /// pairs up with col(i) entry by entry.
    const std::vector<std::int32_t>& col_positions(int i) const {
        return col_pos_[static_cast<std::size_t>(i)];
    }

    /// H * bits mod 2 == 0?
    bool syndrome_ok(const std::vector<std::uint8_t>& bits) const;

    std::string to_alist() const;

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<std::int32_t>> rows_;
    std::vector<std::vector<std::int32_t>> cols_;
    std::vector<std::vector<std::int32_t>> col_pos_;
};

/// Parses the alist format: "n m", max degrees, column then row degree lists,
/// per-column and per-row 1-based index blocks (0-padded blocks accepted).
/// Throws AlistParseError with line context on malformed input.
ParityCheckMatrix parse_alist(const std::string& text);
ParityCheckMatrix load_alist(const std::string& path);

} // namespace parityproj
