#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace avdiff {

/// Lower-case hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

/// Library version string, e.g. "0.3.0".
std::string tool_version();

/// Reproducibility record written as manifest.json next to the artifacts.
///
/// hash() covers everything that determines the artifact contents (command,
/// scenarios, inputs, overrides, version, input hash). The output directory
/// and the artifact digests are recorded but not hashed, so the same run
/// into a different directory carries the same manifest hash.
struct RunManifest {
    std::string command;
    std::vector<std::string> scenarios;
    std::map<std::string, std::string> inputs;
    std::map<std::string, std::string> overrides;
    std::string output_dir;
    std::string version = tool_version();
    std::string input_hash;
    std::map<std::string, std::string> artifacts;  ///< file name -> sha256

    std::string hash() const;
    std::string to_json() const;
};

/// Writes artifacts into one directory and records their digests.
/// finish() writes manifest.json; nothing else touches the directory.
class ArtifactWriter {
public:
    /// Creates `dir` if needed. ValidationError if that fails.
    ArtifactWriter(std::filesystem::path dir, RunManifest manifest);

    const std::string& manifest_hash() const { return hash_; }
    const std::filesystem::path& directory() const { return dir_; }

    /// Writes `content` byte for byte to dir/name.
    void write(const std::string& name, const std::string& content);

    /// Returns the path of manifest.json.
    std::filesystem::path finish();

    const RunManifest& manifest() const { return manifest_; }

private:
    std::filesystem::path dir_;
    RunManifest manifest_;
    std::string hash_;
};

}  // namespace avdiff
