#pragma once

#include <optional>
#include <string>

#include "cosetlab/ingest/formats.hpp"

namespace cosetlab::ingest {

struct GeneratorFile {
    std::string name;
    Format format = Format::images;
    std::string payload;
    std::string checksum;  // sha256 of payload
    std::string path;      // where it lives in the cache
};

// Reads a generator file from disk; the format comes from the header.
GeneratorFile load_generator_file(const std::string& path);

// Value of COSETLAB_BASE_URL, or empty.
std::string default_base_url();

// Looks for cache_dir/name first. On a miss, downloads base_url/name, checks it
// against expected_sha256 when given, and stores it via a temp file and rename
// together with a name.sha256 sidecar. A cached file whose sidecar disagrees
// with its content is treated as a miss.
//
// Throws GatedDataMissing when the file is absent and cannot be downloaded, and
// ChecksumMismatch when downloaded content differs from expected_sha256.
GeneratorFile fetch(const std::string& name, const std::string& base_url, const std::string& cache_dir,
                    const std::optional<std::string>& expected_sha256 = std::nullopt);

}  // namespace cosetlab::ingest
