#ifndef MDSI_MANIFEST_HPP
#define MDSI_MANIFEST_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdsi/errors.hpp"

namespace mdsi {

struct ManifestEntry {
    std::string ref_path;
    std::string dist_path;
    double mos = 0.0;
    std::optional<std::string> distortion;
    std::optional<int> level;
};

struct Dataset {
    std::string name;
    std::vector<ManifestEntry> entries;
};

/// Read a UTF-8 CSV manifest with header `ref,dist,mos[,distortion][,level]`
/// (columns located by name). Lines starting with '#' are ignored; relative
/// paths are resolved against the manifest's directory.
Dataset load_manifest(const std::filesystem::path& path);

/// Write a manifest that load_manifest round-trips exactly.
void save_manifest(const Dataset& ds, const std::filesystem::path& path);

/// Stable partition by distortion label, preserving entry order.
/// Throws MissingLabel if any entry lacks a label.
std::map<std::string, Dataset> group_by_distortion(const Dataset& ds);

} // namespace mdsi

#endif
