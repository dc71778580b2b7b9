// frame.hpp — s-frames and symmetric pyramids.
//
// An s-frame has 2r rows labelled 1..r, -r..-1 from top to bottom, with
// length(row -i) = length(row i).  Rows are stored top to bottom; index k
// holds the row labelled k+1 for k < r and k-2r for k >= r.  Empty rows are
// permitted (restrictions to a coset produce them); a Pyramid is an s-frame
// with no empty rows whose lengths weakly increase toward the x-axis.
#pragma once

#include <vector>

#include "stab/util.hpp"

namespace stab {

struct SFrame {
  std::vector<int> len;  // size 2r, top to bottom

  int pairs() const { return static_cast<int>(len.size()) / 2; }
  int rows() const { return static_cast<int>(len.size()); }
  int boxes() const {
    int n = 0;
    for (int l : len) n += l;
    return n;
  }
  // row label of stored index k
  int label_of(int k) const { return k < pairs() ? k + 1 : k - rows(); }
  // stored index of row label l (l in 1..r or -r..-1)
  int index_of(int l) const { return l > 0 ? l - 1 : l + rows(); }
  int mirror(int k) const { return rows() - 1 - k; }

  // Horizontal placement of row k in half-box units, centered about the
  // y-axis; boxes of a row of length m span [-m, m] stepping by 2.
  int row_offset(int k) const { return -len[k]; }

  friend bool operator==(const SFrame&, const SFrame&) = default;
};

struct Pyramid {
  SFrame frame;

  int pairs() const { return frame.pairs(); }
  int boxes() const { return frame.boxes(); }

  friend bool operator==(const Pyramid&, const Pyramid&) = default;
};

// Builds the symmetric pyramid with top-half row lengths `upper` (outermost
// first, so weakly increasing).  Throws NonMonotone otherwise.
Pyramid pyramid_from_rows(const std::vector<int>& upper);

// Top-half lengths, outermost first.
std::vector<int> upper_lengths(const Pyramid& p);

// Jordan type: the multiset of all 2r row lengths, weakly decreasing.  Every
// multiplicity is even.
std::vector<int> jordan_type(const Pyramid& p);

// Row-by-row numbering by 1..n, -n..-1 across rows from top to bottom.
std::vector<std::vector<int>> coordinate_pyramid(const Pyramid& p);

// One extra box in each row.
Pyramid plus_pyramid(const Pyramid& p);

// True iff every column of the left justification occupies a contiguous set
// of rows.  Empty rows break contiguity only if nonempty rows lie on both
// sides.
bool is_convex(const std::vector<int>& lengths);

// Row lengths sorted weakly decreasing, zero rows dropped.
std::vector<int> frame_partition(const std::vector<int>& lengths);

bool is_pyramid_shape(const SFrame& f);

}  // namespace stab
