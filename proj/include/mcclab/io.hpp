#pragma once

#include "mcclab/complex.hpp"
#include "mcclab/qfunc.hpp"
#include "mcclab/random_complex.hpp"
#include "mcclab/rtrees.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace mcclab {

// {"n":N,"facets":[[...],...]} on one line, facets in canonical order.
std::string complex_to_json(const SimplicialComplex& complex);
// Throws IoError on malformed text and DomainError on invalid facets.
SimplicialComplex complex_from_json(const std::string& text);

// Dimension taken from the facets, which must all have the same size.
PureComplex as_pure(const SimplicialComplex& complex);

// {"n":N,"edges":[[a,b],...]}.
std::string graph_to_json(const Graph& graph);
Graph graph_from_json(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);
// Writes a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// alpha,p,trials,frac_isolated_simplex,frac_giant_dust,frac_isolated_vertex,frac_connected
std::string sweep_csv(const std::vector<SweepRow>& rows);
// x,Q,q_numerator,q_denominator,q_float
std::string q_scan_csv(const std::vector<QEvaluation>& scan);

} // namespace mcclab
