#include <prs/cache.hpp>
#include <prs/canonical.hpp>
#include <prs/errors.hpp>

#include <fstream>
#include <sstream>

namespace prs
{
    namespace
    {
        auto parse_status(const std::string & s) -> std::optional<MembershipStatus>
        {
            if (s == "member")
                return MembershipStatus::member;
            if (s == "non_member")
                return MembershipStatus::non_member;
            return std::nullopt;
        }

        auto parse_mode(const std::string & s) -> std::optional<SearchMode>
        {
            if (s == "exact")
                return SearchMode::exact;
            if (s == "sampled")
                return SearchMode::sampled;
            return std::nullopt;
        }
    }

    VerdictCache::VerdictCache(std::filesystem::path path) :
        _path(std::move(path))
    {
        std::ifstream in(_path);
        if (! in)
            return;
        std::string line;
        std::size_t offset = 0;
        while (std::getline(in, line)) {
            std::size_t here = offset;
            offset += line.size() + 1;
            if (line.empty())
                continue;
            std::istringstream fields(line);
            std::string g6g, g6h, status, mode, extra;
            fields >> g6g >> g6h >> status >> mode;
            auto s = parse_status(status);
            auto m = parse_mode(mode);
            if (! fields || (fields >> extra) || ! s || ! m)
                throw FormatError("malformed cache record in " + _path.string(), here);
            merge({g6g, g6h}, {*s, *m});
        }
    }

    auto VerdictCache::merge(const Key & key, const CacheRecord & record) -> bool
    {
        auto it = _records.find(key);
        if (it == _records.end()) {
            _records.emplace(key, record);
            return true;
        }
        if (it->second == record)
            return false;
        if (it->second.mode == SearchMode::exact && record.mode == SearchMode::sampled)
            return false;
        it->second = record;
        return true;
    }

    auto VerdictCache::lookup(const Graph & g, const Graph & h) const -> std::optional<CacheRecord>
    {
        auto it = _records.find({canonical_form(g).bytes, canonical_form(h).bytes});
        if (it == _records.end())
            return std::nullopt;
        return it->second;
    }

    auto VerdictCache::store(const Graph & g, const Graph & h, const CacheRecord & record) -> bool
    {
        if (record.status == MembershipStatus::unknown)
            return false;
        Key key{canonical_form(g).bytes, canonical_form(h).bytes};
        if (! merge(key, record))
            return false;
        std::ofstream out(_path, std::ios::app);
        if (! out)
            throw PreconditionError("cannot append to cache file " + _path.string());
        out << key.first << ' ' << key.second << ' ' << to_string(record.status) << ' ' << to_string(record.mode) << '\n';
        out.flush();
        return true;
    }
}
