#include "avdiff/manifest.hpp"

#include <array>
#include <fstream>
#include <memory>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "avdiff/errors.hpp"

#ifndef AVDIFF_VERSION
#define AVDIFF_VERSION "0.0.0"
#endif

namespace avdiff {

std::string sha256_hex(std::string_view data) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest.data(), &length) != 1) {
        throw Error("SHA-256 computation failed");
    }
    std::string hex;
    hex.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        hex += fmt::format("{:02x}", digest[i]);
    }
    return hex;
}

std::string tool_version() { return AVDIFF_VERSION; }

namespace {

nlohmann::json identity(const RunManifest& m) {
    return {{"command", m.command},   {"scenarios", m.scenarios}, {"inputs", m.inputs},
            {"overrides", m.overrides}, {"version", m.version},   {"input_hash", m.input_hash}};
}

}  // namespace

std::string RunManifest::hash() const { return sha256_hex(identity(*this).dump()); }

std::string RunManifest::to_json() const {
    nlohmann::json j = identity(*this);
    j["manifest_hash"] = hash();
    j["output_dir"] = output_dir;
    j["artifacts"] = artifacts;
    return j.dump(2) + "\n";
}

ArtifactWriter::ArtifactWriter(std::filesystem::path dir, RunManifest manifest)
    : dir_(std::move(dir)), manifest_(std::move(manifest)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_)) {
        throw ValidationError(fmt::format("cannot create output directory '{}': {}", dir_.string(),
                                          ec ? ec.message() : "not a directory"));
    }
    manifest_.output_dir = dir_.string();
    hash_ = manifest_.hash();
}

void ArtifactWriter::write(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) {
        throw ValidationError(fmt::format("cannot write '{}'", path.string()));
    }
    manifest_.artifacts[name] = sha256_hex(content);
}

std::filesystem::path ArtifactWriter::finish() {
    const auto path = dir_ / "manifest.json";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << manifest_.to_json();
    out.close();
    if (!out) {
        throw ValidationError(fmt::format("cannot write '{}'", path.string()));
    }
    return path;
}

}  // namespace avdiff
