#pragma once

#include "detrendcorr/corrmat.hpp"
#include "detrendcorr/mfdfa.hpp"
#include "detrendcorr/mstnet.hpp"
#include "detrendcorr/rmt.hpp"
#include "detrendcorr/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace detrendcorr {

/// RFC-4180 CSV: quoted fields, doubled quotes, embedded separators and
/// line breaks inside quotes.
std::vector<std::vector<std::string>> read_csv(std::istream& in);
std::string csv_escape(const std::string& field);

/// Shortest exact decimal for doubles ("%.17g" round-trips bit-exactly).
std::string format_double(double v);

void write_panel_csv(std::ostream& out, const Panel& panel);
Panel read_panel_csv(std::istream& in);

void write_matrix_csv(std::ostream& out, const CorrMatrix& m);
CorrMatrix read_matrix_csv(std::istream& in);
std::string matrix_sidecar_json(const CorrMatrix& m);
void apply_matrix_sidecar(CorrMatrix& m, const std::string& json_text);

void write_grid_csv(std::ostream& out, const FluctuationGrid& grid);

void write_tree_edges_csv(std::ostream& out, const Tree& t);
void write_tree_nodes_csv(std::ostream& out, const Tree& t,
                          const std::vector<double>& size,
                          const Communities* communities);

std::string spectrum_report_json(const SpectralDecomposition& spec,
                                 const MpLaw& law);
void write_eigenvector_csv(std::ostream& out,
                           const std::vector<std::string>& labels,
                           const Eigen::VectorXd& v);

/// FNV-1a 64-bit fingerprint (hex) of a byte string; used to compare
/// artifacts across reruns, not for security.
std::string fnv1a_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace detrendcorr
