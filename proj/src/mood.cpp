#include "catmood/mood.hpp"

namespace catmood {

void propagate_neighbor_marks(MoodMask& mask) {
  const int nx = mask.nx, ny = mask.ny;
  const bool two_d = ny > 1;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (mask.at(i, j) != 1) continue;
      const int jlo = two_d ? std::max(j - 1, 0) : j;
      const int jhi = two_d ? std::min(j + 1, ny - 1) : j;
      for (int nj = jlo; nj <= jhi; ++nj)
        for (int ni = std::max(i - 1, 0); ni <= std::min(i + 1, nx - 1); ++ni)
          if (mask.at(ni, nj) == 0) mask.at(ni, nj) = -1;
    }
}

}  // namespace catmood
