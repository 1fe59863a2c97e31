#pragma once

// Named diagrams used by the tests, the acceptance suite and the CLI.

#include <string>
#include <string_view>
#include <vector>

#include "khr/linkdiag.hpp"

namespace khr {

struct Fixture {
  std::string name;
  std::string description;
  /// PD text, braid word, or "cable f,n,m".
  std::string source;
  int crossings = 0;
  int components = 0;
  bool positive = false;  ///< every crossing positive (and at least one crossing)

  PlanarDiagram diagram() const;
};

const std::vector<Fixture>& fixtures();
/// Throws ValidationError for an unknown name.
const Fixture& fixture(std::string_view name);

/// Parses any diagram source accepted by Fixture::source.
PlanarDiagram diagram_from_source(std::string_view source);

/// Pairs of diagrams of the same framed oriented link related by
/// Reidemeister II/III moves (no curls).
struct DiagramPair {
  std::string name;
  std::string first;
  std::string second;
};

const std::vector<DiagramPair>& reidemeister_pairs();

}  // namespace khr
