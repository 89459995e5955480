#pragma once

#include <prs/graph.hpp>
#include <prs/membership.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace prs
{
    /// Environment variable naming the cache file when neither --cache nor a config file does.
    inline constexpr const char * cache_environment_variable = "PRSAT_CACHE";

    struct CacheRecord
    {
        MembershipStatus status = MembershipStatus::unknown;
        SearchMode mode = SearchMode::exact;

        auto operator==(const CacheRecord &) const -> bool = default;
    };

    /// Membership verdicts keyed by the canonical forms of (G, H), backed by an
    /// append-only text file with one "g6(G) g6(H) status mode" record per line.
    /// Unknown verdicts are never stored, and an exact record is never replaced
    /// by a sampled one. Replaying the file reproduces the in-memory state.
    class VerdictCache
    {
    public:
        /// Loads the file if it exists; throws FormatError on a malformed line.
        explicit VerdictCache(std::filesystem::path path);

        auto lookup(const Graph & g, const Graph & h) const -> std::optional<CacheRecord>;

        /// Returns true if the record was new or upgraded (and so appended).
        auto store(const Graph & g, const Graph & h, const CacheRecord & record) -> bool;

        auto size() const -> std::size_t { return _records.size(); }
        auto path() const -> const std::filesystem::path & { return _path; }

    private:
        using Key = std::pair<std::string, std::string>;

        auto merge(const Key & key, const CacheRecord & record) -> bool;

        std::filesystem::path _path;
        std::map<Key, CacheRecord> _records;
    };
}
