#pragma once

#include <iosfwd>
#include <string>

#include "uitws/svm.hpp"

namespace uitws {

inline constexpr const char* kModelMagic = "UITWS-MODEL v1";

/// Text model format: magic line, key:value header, stats/name/weight
/// sections. Weights carry 17 significant digits so the round trip is
/// bit-exact.
void save_model(const LinearModel& model, const std::string& path);
void write_model(const LinearModel& model, std::ostream& out);

LinearModel load_model(const std::string& path);
LinearModel read_model(std::istream& in, const std::string& source_path);

}  // namespace uitws
