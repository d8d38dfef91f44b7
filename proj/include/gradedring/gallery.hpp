#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gradedring/report.hpp"

namespace gradedring {

struct GalleryCheck {
  std::string name;
  std::string expected;
  std::string actual;
};

struct GalleryReport {
  std::string id;
  /// (label, printed object) for the rings and elements built.
  std::vector<std::pair<std::string, std::string>> objects;
  /// Checks that passed; a failing check throws instead.
  std::vector<GalleryCheck> checks;
  std::vector<std::string> transcript;
};

/// The six item ids. Parameterized items accept "id(p)" for p in {2, 3, 5};
/// the bare id runs all three.
const std::vector<std::string>& gallery_ids();

/// Throws TheoremViolation with an expected/actual diff on the first failed check.
GalleryReport run_gallery(const std::string& id);

Json gallery_json(const GalleryReport& r);

}  // namespace gradedring
