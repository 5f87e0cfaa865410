#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace morseq {

using Vertex = int;

/// A simplex: a finite non-empty set of vertex identifiers, canonicalized
/// as a strictly increasing list. dim = number of vertices minus one.
class Simplex {
public:
    /// Guard for subset enumeration; far beyond anything this library targets.
    static constexpr int kMaxDim = 25;

    Simplex(std::initializer_list<Vertex> vs);
    explicit Simplex(std::vector<Vertex> vs);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    const std::vector<Vertex>& vertices() const { return verts_; }

    bool has_vertex(Vertex v) const;
    /// true iff other ⊆ this.
    bool has_face(const Simplex& other) const;
    /// true iff other ⊂ this (strict).
    bool has_proper_face(const Simplex& other) const;

    /// All codimension-1 subsets, in increasing vertex-drop order.
    std::vector<Simplex> codim1_faces() const;

    std::string str() const;

    bool operator==(const Simplex& o) const { return verts_ == o.verts_; }
    bool operator!=(const Simplex& o) const { return verts_ != o.verts_; }
    /// Total order by (dimension, lexicographic vertices); used for all
    /// deterministic tie-breaking in this library.
    bool operator<(const Simplex& o) const;

private:
    struct raw_tag {};
    Simplex(raw_tag, std::vector<Vertex> vs) : verts_(std::move(vs)) {}

    std::vector<Vertex> verts_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (Vertex v : s.vertices()) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace morseq
