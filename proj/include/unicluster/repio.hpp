#pragma once

#include "unicluster/folding.hpp"

#include <iosfwd>

namespace unicluster {

// Module-definition text format (rational entries):
//
//   dim 1 2 1
//   alpha
//   0
//   -1
//   alphastar
//   1 0
//   betastar
//   1 0
//   beta
//   0
//   1
//
// Each arrow block lists target-dim rows of source-dim entries; empty shapes
// have no rows. Blank lines and lines starting with '#' are ignored on
// input; render_rep emits the canonical form, which re-parses bit-exactly.
Rep parse_rep(std::istream& in);
Rep parse_rep_string(const std::string& text);
std::string render_rep(const Rep& x);

// Positivity input: 4 lines of 4 whitespace-separated rational tokens
// forming an upper unitriangular matrix.
RatUniMat parse_matrix(std::istream& in);
RatUniMat parse_matrix_string(const std::string& text);

std::string graph_to_dot(const ExchangeGraph& g);
std::string graph_to_json(const ExchangeGraph& g);
std::string folded_to_dot(const FoldedGraph& g);
std::string folded_to_json(const FoldedGraph& g);
std::string catalog_to_json(const Word& w);
std::string catalog_to_text(const Word& w);

// Label helpers shared by the exporters.
std::string vertex_label(const RigidObject& v);           // non-projective ids
std::string folded_vertex_label(const RigidObject& v);    // pi-projected minor pairs

}  // namespace unicluster
