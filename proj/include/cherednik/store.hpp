#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cherednik/errors.hpp"

namespace cherednik {

inline constexpr const char* library_version = "0.1.0";

// One named assertion inside a record.  status is "PASS", "FAIL", or
// "EVIDENCE"; conjectural comparisons always report EVIDENCE so that open
// problems are recorded without failing a run.
struct CheckResult {
    std::string name;
    std::string status;
    std::string detail;
};

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

// A reproducible experiment result: the input echo, the computed outputs,
// and the named checks.  The content hash covers exactly those three parts;
// timings and the tool version ride along but never affect the hash, so an
// identical computation always lands in the same store file.
struct ResultRecord {
    nlohmann::json spec = nlohmann::json::object();
    nlohmann::json outputs = nlohmann::json::object();
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;
    std::string tool_version = library_version;

    void add_check(std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok ? "PASS" : "FAIL", std::move(detail)});
    }
    void add_evidence(std::string name, std::string detail) {
        checks.push_back({std::move(name), "EVIDENCE", std::move(detail)});
    }

    bool all_passing() const {
        for (const auto& ch : checks)
            if (ch.status == "FAIL") return false;
        return true;
    }

    // FAIL dominates; otherwise EVIDENCE if any check is conjectural.
    std::string overall() const {
        bool evidence = false;
        for (const auto& ch : checks) {
            if (ch.status == "FAIL") return "FAIL";
            if (ch.status == "EVIDENCE") evidence = true;
        }
        return evidence ? "EVIDENCE" : "PASS";
    }

    nlohmann::json checks_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& ch : checks)
            arr.push_back({{"name", ch.name}, {"status", ch.status}, {"detail", ch.detail}});
        return arr;
    }

    std::uint64_t content_hash_u64() const {
        const nlohmann::json canon = {
            {"spec", spec}, {"outputs", outputs}, {"checks", checks_json()}};
        return fnv1a64(canon.dump());
    }

    std::string content_hash() const {
        static const char* hex = "0123456789abcdef";
        std::uint64_t h = content_hash_u64();
        std::string s(16, '0');
        for (int i = 15; i >= 0; --i) {
            s[static_cast<std::size_t>(i)] = hex[h & 0xf];
            h >>= 4;
        }
        return s;
    }

    nlohmann::json to_json() const {
        return {{"spec", spec},
                {"outputs", outputs},
                {"checks", checks_json()},
                {"overall", overall()},
                {"elapsed_seconds", elapsed_seconds},
                {"tool_version", tool_version},
                {"content_hash", content_hash()}};
    }

    static ResultRecord from_json(const nlohmann::json& j) {
        ResultRecord r;
        r.spec = j.at("spec");
        r.outputs = j.at("outputs");
        for (const auto& ch : j.at("checks"))
            r.checks.push_back({ch.at("name").get<std::string>(),
                                ch.at("status").get<std::string>(),
                                ch.at("detail").get<std::string>()});
        r.elapsed_seconds = j.value("elapsed_seconds", 0.0);
        r.tool_version = j.value("tool_version", std::string{});
        return r;
    }
};

inline std::filesystem::path store_dir() {
    if (const char* env = std::getenv("CHEREDNIK_STORE"); env && *env) return env;
    return "./results";
}

// Append-only content-addressed write: <dir>/<hash>.json.  An existing file
// with the same name already holds identical content, so rewriting is
// skipped and concurrent writers of the same record are harmless.
inline std::filesystem::path store_record(const ResultRecord& rec,
                                          std::optional<std::filesystem::path> dir = {}) {
    const std::filesystem::path d = dir.value_or(store_dir());
    std::error_code ec;
    std::filesystem::create_directories(d, ec);
    if (ec) throw IoError("cannot create store directory " + d.string() + ": " + ec.message());

    const std::filesystem::path target = d / (rec.content_hash() + ".json");
    if (std::filesystem::exists(target)) return target;

    static std::atomic<unsigned> write_seq{0};
    const std::filesystem::path tmp = target.string() + ".tmp" + std::to_string(::getpid()) +
                                      "." + std::to_string(write_seq.fetch_add(1));
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << rec.to_json().dump(2) << "\n";
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        if (!std::filesystem::exists(target))
            throw IoError("cannot finalize " + target.string() + ": " + ec.message());
    }
    return target;
}

inline ResultRecord load_record(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot read " + file.string());
    nlohmann::json j;
    in >> j;
    return ResultRecord::from_json(j);
}

inline std::vector<std::filesystem::path> list_records(
    std::optional<std::filesystem::path> dir = {}) {
    const std::filesystem::path d = dir.value_or(store_dir());
    std::vector<std::filesystem::path> out;
    if (!std::filesystem::exists(d)) return out;
    for (const auto& e : std::filesystem::directory_iterator(d))
        if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cherednik
