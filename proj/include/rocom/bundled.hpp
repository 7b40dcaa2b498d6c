#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace rocom {

/// Documents compiled into the library: core-ontology.rcm, units.rcm,
/// murgency-extension.rcm and fire-incident.rcm.
std::optional<std::string_view> bundled_document(std::string_view name);
std::vector<std::string_view> bundled_document_names();

}  // namespace rocom
