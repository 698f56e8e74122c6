// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#ifndef WALSHLAB_IO_HPP
#define WALSHLAB_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "walshlab/counterexample.hpp"
#include "walshlab/dyadic.hpp"
#include "walshlab/hardy.hpp"
#include "walshlab/summability.hpp"
#include "walshlab/systems.hpp"
#include "walshlab/weights.hpp"

namespace walshlab {

/// 17 significant digits, so doubles round-trip through text losslessly.
std::string format_double(double v);

/// GridFunction CSV: "# resolution=N" then one value per line in cell order.
/// Extra "# key=value ..." annotation lines are permitted and ignored on read.
void write_grid_csv(std::ostream& out, const GridFunction& f,
                    const std::vector<std::pair<std::string, std::string>>& annotations = {});
void write_grid_csv(const std::string& path, const GridFunction& f,
                    const std::vector<std::pair<std::string, std::string>>& annotations = {});
GridFunction read_grid_csv(std::istream& in);
GridFunction read_grid_csv_file(const std::string& path);

/// SpectralCoeffs CSV: "# system=walsh|kaczmarz resolution=N" then
/// "index,coefficient" rows.
void write_coeffs_csv(std::ostream& out, const SpectralCoeffs& coeffs);
void write_coeffs_csv(const std::string& path, const SpectralCoeffs& coeffs);
SpectralCoeffs read_coeffs_csv(std::istream& in);
SpectralCoeffs read_coeffs_csv_file(const std::string& path);

/// Weights CSV: optional "# monotonicity=..." header, then "k,q_k" rows for
/// k = 0,1,2,... with no gaps. Monotonicity defaults to none.
WeightSequence read_weights_csv(std::istream& in, const std::string& label);
WeightSequence read_weights_csv_file(const std::string& path);

/// A rendered table: column names plus rows of preformatted cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void write_csv(std::ostream& out) const;
  void write_csv_file(const std::string& path) const;
};

/// Columns n,q_prev,Q_n,ratio_node,ratio_cond1.
Table to_table(const WeightDiagnostics& d);

/// Columns k,alpha_k,n_k,min_abs_T,paper_bound,weak_quasinorm,hardy_norm,ratio.
Table to_table(const DivergenceReport& r);

/// {"mean_ok":..,"size_ok":..,"support_ok":..,"measured_sup":..,"bound":..}
std::string atom_report_json(const AtomReport& report);

}  // namespace walshlab

#endif
