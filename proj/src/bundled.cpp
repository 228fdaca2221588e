#include "logchern/bundled.hpp"

#include "logchern/errors.hpp"

namespace logchern {

const std::vector<BundledExample>& bundled_examples() {
  static const std::vector<BundledExample> examples{
      {"eight-planes-p3", "xyzw(x-w)(y-w)(x+y+z)(x-y+z) in P^3; not locally free at three points", R"({"l": 4, "hyperplanes": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, -1], [0, 1, 0, -1], [1, 1, 1, 0], [1, -1, 1, 0]], "labels": ["x", "y", "z", "w", "x-w", "y-w", "x+y+z", "x-y+z"]})"},
      {"boolean-2", "coordinate hyperplanes in C^2", R"({"l": 2, "hyperplanes": [[1, 0], [0, 1]]})"},
      {"boolean-3", "coordinate hyperplanes in C^3", R"({"l": 3, "hyperplanes": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})"},
      {"boolean-4", "coordinate hyperplanes in C^4", R"({"l": 4, "hyperplanes": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]})"},
      {"boolean-5", "coordinate hyperplanes in C^5", R"({"l": 5, "hyperplanes": [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]})"},
      {"generic-3-lines", "three lines through the origin of C^2", R"({"l": 2, "hyperplanes": [[1, 0], [0, 1], [1, 1]]})"},
      {"rank2-triple", "x-y, x-z, y-z in C^3 (rank 2)", R"({"l": 3, "hyperplanes": [[1, -1, 0], [1, 0, -1], [0, 1, -1]]})"},
      {"generic-4-in-c3", "x, y, z, x+y+z; locally free, not free", R"({"l": 3, "hyperplanes": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]})"},
      {"generic-5-in-c4", "x, y, z, w, x+y+z+w; locally free, not free", R"({"l": 4, "hyperplanes": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1]]})"},
      {"braid-a3", "z_i - z_j in C^4; free with exponents 0,1,2,3", R"({"l": 4, "hyperplanes": [[1, -1, 0, 0], [1, 0, -1, 0], [1, 0, 0, -1], [0, 1, -1, 0], [0, 1, 0, -1], [0, 0, 1, -1]]})"},
      {"cone-generic-4", "x, y, z, x+y+z in C^4; not free at one point", R"({"l": 4, "hyperplanes": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 0]]})"},
      {"cylinder-generic-4", "x, y, z, x+y+z in C^5; non-free locus is a line", R"({"l": 5, "hyperplanes": [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [1, 1, 1, 0, 0]]})"},
  };
  return examples;
}

Arrangement bundled_arrangement(const std::string& name) {
  for (const auto& e : bundled_examples())
    if (e.name == name) return parse_arrangement(e.json);
  throw InputError("no bundled arrangement named " + name);
}

}  // namespace logchern
