#pragma once

#include <cstddef>
#include <string_view>

namespace diskgeo::detail {

struct EmbeddedFile {
    std::string_view name;
    std::string_view bytes;
};

extern const EmbeddedFile kEmbeddedFiles[];
extern const std::size_t kEmbeddedFileCount;

}  // namespace diskgeo::detail
