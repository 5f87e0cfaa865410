#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "morseq/simplex.hpp"

namespace morseq {

/// A finite set of simplexes with a precomputed codimension-1 incidence
/// index: for every face, the ids of its boundary faces (codim-1 subsets
/// present in the set) and coboundary faces (codim-1 supersets present).
///
/// Faces are stored sorted by (dimension, lexicographic vertices), so face
/// ids follow the canonical tie-breaking order used everywhere else.
/// Immutable after construction; safe to share across threads.
class FaceSet {
public:
    using Id = std::int32_t;
    static constexpr Id kNoId = -1;

    FaceSet() = default;
    explicit FaceSet(std::vector<Simplex> faces);

    std::size_t size() const { return faces_.size(); }
    bool empty() const { return faces_.empty(); }
    /// Largest face dimension, or -1 for the empty set.
    int dimension() const { return dim_; }

    const std::vector<Simplex>& faces() const { return faces_; }
    const Simplex& face(Id id) const { return faces_[static_cast<std::size_t>(id)]; }

    bool contains(const Simplex& s) const { return find(s) != kNoId; }
    /// Id of s, or kNoId when absent.
    Id find(const Simplex& s) const;

    const std::vector<Id>& boundary_ids(Id id) const {
        return boundary_[static_cast<std::size_t>(id)];
    }
    const std::vector<Id>& coboundary_ids(Id id) const {
        return coboundary_[static_cast<std::size_t>(id)];
    }

    /// Total Σ|boundary| (= Σ|coboundary|); the incidence mass that drives
    /// the engine's amortized cost accounting.
    std::size_t incidence_count() const { return incidences_; }

    bool operator==(const FaceSet& o) const { return faces_ == o.faces_; }
    bool operator!=(const FaceSet& o) const { return faces_ != o.faces_; }

private:
    std::vector<Simplex> faces_;
    std::unordered_map<Simplex, Id, SimplexHash> index_;
    std::vector<std::vector<Id>> boundary_;
    std::vector<std::vector<Id>> coboundary_;
    std::size_t incidences_ = 0;
    int dim_ = -1;
};

}  // namespace morseq
