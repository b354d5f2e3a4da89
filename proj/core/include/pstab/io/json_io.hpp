#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pstab/bq/bq_decide.hpp"
#include "pstab/bq/slice.hpp"
#include "pstab/moebius/representation.hpp"
#include "pstab/ps/spectrum.hpp"

// File formats. Malformed documents raise ErrorCode::ParseError.
namespace pstab::io {

// {"rank": n, "generators": [[[re,im],[re,im],[re,im],[re,im]], ...]}
// Entries are row-major a, b, c, d. The determinant must be within 1e-6 of
// 1 (DeterminantError otherwise); the matrices are then renormalized.
moebius::Representation parse_representation(std::string_view json_text);
moebius::Representation load_representation(const std::filesystem::path& path);
std::string representation_to_json(const moebius::Representation& rep);

// {"verdict", "min_ratio", "max_ratio", "failures", "entries", "max_len", "rank"}
std::string ps_report_to_json(const ps::PsReport& report, int rank);
ps::PsReport ps_report_from_json(std::string_view json_text);

// {"kind", "nodes_explored", "depth_max", "witnesses": [{"p", "q", "trace": [re,im]}]}
std::string bq_verdict_to_json(const bq::BqVerdict& verdict);
bq::BqVerdict bq_verdict_from_json(std::string_view json_text);

// {"kappa":[re,im], "fixed_x":[re,im], "window":[[re,im],[re,im]], "width":W,
//  "height":H, "root":"smaller"|"larger", "budget":N, "small_trace_bound":B}
// root, budget and small_trace_bound are optional.
bq::SliceConfig parse_slice_config(std::string_view json_text);
bq::SliceConfig load_slice_config(const std::filesystem::path& path);
std::string slice_config_to_json(const bq::SliceConfig& cfg);

void write_ppm(const std::filesystem::path& path, const bq::Image& image);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace pstab::io
