#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "senet/error.hpp"

namespace senet {

/// Dense handle for a registered vertex. Indices are assigned in
/// registration order and never reused.
using VertexIndex = std::uint32_t;

struct Vertex {
    std::string id;
    VertexIndex index;
};

/// Registry of vertex ids. Ids are unique, indices are dense and stable for
/// the life of the universe. Once complexes are built over a universe it is
/// treated as immutable.
class VertexUniverse {
public:
    VertexUniverse() = default;

    template <typename Range>
    static VertexUniverse from_ids(const Range& ids) {
        VertexUniverse u;
        for (const auto& id : ids) u.register_vertex(id);
        return u;
    }

    static VertexUniverse from_ids(std::initializer_list<std::string_view> ids) {
        VertexUniverse u;
        for (auto id : ids) u.register_vertex(id);
        return u;
    }

    Vertex register_vertex(std::string_view id) {
        if (id.empty())
            fail(ErrorKind::validation, "vertex id must not be empty");
        for (unsigned char c : id) {
            if (c <= 0x20)
                fail(ErrorKind::validation,
                     "vertex id '" + std::string(id) + "' contains whitespace");
        }
        if (lookup_.contains(std::string(id)))
            fail(ErrorKind::validation, "duplicate vertex id '" + std::string(id) + "'");
        const auto index = static_cast<VertexIndex>(ids_.size());
        ids_.emplace_back(id);
        lookup_.emplace(ids_.back(), index);
        return Vertex{ids_.back(), index};
    }

    bool contains(std::string_view id) const {
        return lookup_.find(std::string(id)) != lookup_.end();
    }

    VertexIndex index_of(std::string_view id) const {
        auto it = lookup_.find(std::string(id));
        if (it == lookup_.end())
            fail(ErrorKind::validation, "unknown vertex id '" + std::string(id) + "'");
        return it->second;
    }

    const std::string& id_of(VertexIndex index) const {
        if (index >= ids_.size())
            fail(ErrorKind::validation,
                 "vertex index " + std::to_string(index) + " out of bounds");
        return ids_[index];
    }

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }

    /// Ids in index order.
    const std::vector<std::string>& ids() const noexcept { return ids_; }

    friend bool operator==(const VertexUniverse& a, const VertexUniverse& b) {
        return a.ids_ == b.ids_;
    }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, VertexIndex> lookup_;
};

} // namespace senet
