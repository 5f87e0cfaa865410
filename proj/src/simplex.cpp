#include "morseq/simplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace morseq {

namespace {

std::vector<Vertex> canonicalize(std::vector<Vertex> vs) {
    if (vs.empty()) {
        throw std::invalid_argument("simplex must be non-empty");
    }
    std::sort(vs.begin(), vs.end());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0) {
            throw std::invalid_argument("vertex identifiers must be non-negative");
        }
        if (i > 0 && vs[i] == vs[i - 1]) {
            throw std::invalid_argument("duplicate vertex in simplex");
        }
    }
    if (static_cast<int>(vs.size()) - 1 > Simplex::kMaxDim) {
        throw std::invalid_argument("simplex dimension exceeds supported maximum");
    }
    return vs;
}

}  // namespace

Simplex::Simplex(std::initializer_list<Vertex> vs) : verts_(canonicalize(std::vector<Vertex>(vs))) {}

Simplex::Simplex(std::vector<Vertex> vs) : verts_(canonicalize(std::move(vs))) {}

bool Simplex::has_vertex(Vertex v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::has_face(const Simplex& other) const {
    return std::includes(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end());
}

bool Simplex::has_proper_face(const Simplex& other) const {
    return other.size() < size() && has_face(other);
}

std::vector<Simplex> Simplex::codim1_faces() const {
    std::vector<Simplex> out;
    if (verts_.size() < 2) {
        return out;
    }
    out.reserve(verts_.size());
    for (std::size_t drop = 0; drop < verts_.size(); ++drop) {
        std::vector<Vertex> sub;
        sub.reserve(verts_.size() - 1);
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (i != drop) {
                sub.push_back(verts_[i]);
            }
        }
        out.push_back(Simplex(raw_tag{}, std::move(sub)));
    }
    return out;
}

std::string Simplex::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ',';
        os << verts_[i];
    }
    os << '}';
    return os.str();
}

bool Simplex::operator<(const Simplex& o) const {
    if (verts_.size() != o.verts_.size()) {
        return verts_.size() < o.verts_.size();
    }
    return verts_ < o.verts_;
}

}  // namespace morseq
