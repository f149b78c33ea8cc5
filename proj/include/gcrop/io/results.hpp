#pragma once

#include <string>
#include <vector>

#include "gcrop/analytics/sweep.hpp"

namespace gcrop::io {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

// Fixed schema:
//   method,alpha,crop_size,seed,fp_rate,mean_pair_iou,mean_center_distance,
//   oob_area_fraction,lep_accuracy
// with lep_accuracy left empty when absent. The JSON form mirrors the same
// field names (null for a missing accuracy). Coverage grids are not part of
// the record schema.
std::string write_records_csv(const std::vector<analytics::SweepRecord>& records);
std::string write_records_json(const std::vector<analytics::SweepRecord>& records);

std::vector<analytics::SweepRecord> parse_records_csv(const std::string& text);
std::vector<analytics::SweepRecord> parse_records_json(const std::string& text);

// Per-(method, alpha, crop_size) mean and sample standard deviation over
// seeds, in first-appearance order.
std::string write_summary_csv(const std::vector<analytics::SweepRecord>& records);

}  // namespace gcrop::io
