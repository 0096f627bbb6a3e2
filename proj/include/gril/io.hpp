/*
   Copyright 2026 The GRIL Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gril/complex.hpp"
#include "gril/filtrations.hpp"
#include "gril/landscape.hpp"

namespace gril::io {

//! Text bifiltration: header `bifil 2 <M>`, then one simplex per line as
//! `<dim> <v0> .. <vdim> ; <i> <j>`. Blank lines and `#` comments are
//! skipped. Throws ParseError (with line) or ValidationError.
[[nodiscard]] BiFiltration parse_bifiltration(std::string_view doc);
[[nodiscard]] std::string serialize_bifiltration(const BiFiltration& f);
[[nodiscard]] BiFiltration read_bifiltration(const std::filesystem::path& file);

//! TUDataset layout: <name>_A.txt, <name>_graph_indicator.txt,
//! <name>_graph_labels.txt and optionally <name>_node_attributes.txt (first
//! column used) or <name>_node_labels.txt. Indices in the files are 1-based.
[[nodiscard]] std::vector<AttributedGraph> read_tudataset(const std::filesystem::path& dir, const std::string& name);
void write_tudataset(const std::filesystem::path& dir, const std::string& name,
                     const std::vector<AttributedGraph>& graphs);

//! One row per vector; columns h<dim>_p<idx>_k<k>_l<ell>.
[[nodiscard]] std::string emit_features(const std::vector<GrilVector>& vectors, const std::vector<std::string>& ids,
                                        const std::vector<int>& labels);

struct FeatureTable {
    std::vector<std::string> columns;  // feature columns only
    std::vector<std::string> ids;
    std::vector<int> labels;
    std::vector<std::vector<double>> rows;
};
[[nodiscard]] FeatureTable parse_features(std::string_view doc);

//! Plain PGM of one (k, ell, dim) slice. Columns follow the first centre
//! coordinate, rows the second with the largest at the top. Throws
//! InvalidArgument if the centres are not a full rectangular grid.
[[nodiscard]] std::string emit_heatmap(const GrilVector& v, int k, int ell, int dim);

[[nodiscard]] std::string read_text(const std::filesystem::path& file);
void write_text(const std::filesystem::path& file, std::string_view text);

}  // namespace gril::io
