#ifndef MDSI_IMAGE_IO_HPP
#define MDSI_IMAGE_IO_HPP

#include <filesystem>

#include "mdsi/image.hpp"

namespace mdsi {

/// Decode a PNG/JPEG/BMP file into an RgbImage.
///
/// 8-bit channels map value v to real(v); 16-bit inputs are rescaled by
/// 255/65535. Grayscale images are replicated to three channels.
/// Throws IoError for unreadable files, DecodeError for corrupt or
/// unsupported content.
RgbImage load_image(const std::filesystem::path& path);

} // namespace mdsi

#endif
