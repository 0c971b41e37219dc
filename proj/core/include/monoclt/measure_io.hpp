#pragma once

#include <string>

#include "monoclt/measures.hpp"

namespace monoclt {

// JSON measure spec:
//   {"kind":"atomic","atoms":[{"t":-1,"w":0.5},{"t":1,"w":0.5}]}
//   {"kind":"arcsine"}
//   {"kind":"nu_r","r":1.0}
MeasureSpec parse_measure_spec(const std::string& json_text);
MeasureSpec load_measure_spec(const std::string& path);

std::string measure_spec_to_json(const MeasureSpec& m);

}  // namespace monoclt
