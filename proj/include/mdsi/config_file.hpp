#ifndef MDSI_CONFIG_FILE_HPP
#define MDSI_CONFIG_FILE_HPP

#include <filesystem>
#include <string>

#include "mdsi/similarity.hpp"

namespace mdsi {

/// Parse a flat key = value config file mirroring MetricConfig fields
/// (alpha, c1, c2, c3, gradient_variant, chroma_variant, combine, gamma,
/// beta, pooling, rho, q, o). '#' starts a comment. Unknown keys and
/// malformed values raise ParseError. Missing keys keep their defaults.
MetricConfig load_config_file(const std::filesystem::path& path);

/// Apply one key/value override to a config (same keys as the file).
void apply_config_entry(MetricConfig& cfg, const std::string& key,
                        const std::string& value);

std::string to_string(GradientVariant v);
std::string to_string(ChromaVariant v);
std::string to_string(CombineScheme v);
std::string to_string(PoolingStrategy v);

} // namespace mdsi

#endif
