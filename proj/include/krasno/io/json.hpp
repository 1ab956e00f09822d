#pragma once

#include <json.hpp>
#include <string>

#include "krasno/checkers.hpp"
#include "krasno/galleries.hpp"
#include "krasno/kernel.hpp"
#include "krasno/visibility.hpp"

namespace krasno::io {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

json to_json(const Point2& p);
Point2 point_from_json(const json& j);

json to_json(const Ring& r);
Ring ring_from_json(const json& j);

json to_json(const Region& r);
Region region_from_json(const json& j);

/// Gallery document. `extra` (an object or null) is stored under "params".
json gallery_document(const ColoredGallery& g, const json& extra = nullptr);
/// Parses and validates a gallery document; throws GeometryError(Parse) or
/// the relevant validation error.
ColoredGallery parse_gallery_document(const json& j);

json to_json(const VisibilityRegion& v);
json to_json(const Kernel& k);
json to_json(const SpikedGalleryParams& p);
json to_json(const Witness& w);
json report_document(const TheoremReport& r, const CheckConfig& cfg, const json& echo = nullptr);

/// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

json read_json_file(const std::string& path);

}  // namespace krasno::io
