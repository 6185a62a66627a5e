#ifndef VERIFLAB_SVG_HPP
#define VERIFLAB_SVG_HPP

#include <string>

#include "report.hpp"

namespace veriflab {

/// Standalone SVG line chart, one polyline per series line, with axes and a legend.
std::string line_chart(const Series& series, const std::string& title);

}  // namespace veriflab

#endif  // VERIFLAB_SVG_HPP
