#pragma once

#include <set>
#include <vector>

#include "borelreg/errors.hpp"

namespace borelreg {

/// An abstract simplicial complex on integer vertex labels. Faces are sorted
/// label tuples kept in lexicographic order, which fixes the boundary-matrix
/// signs once and for all. The void complex (no faces) and the irrelevant
/// complex (only the empty face) are distinct states.
class SimplicialComplex {
public:
    using Face = std::vector<int>;

    /// The void complex.
    SimplicialComplex() = default;

    /// Builds the downward closure of the given faces. An empty list gives
    /// the void complex; {{}} gives the irrelevant complex.
    static SimplicialComplex closure(std::vector<int> vertices, const std::vector<Face>& faces);

    /// Trusted constructor for a family already closed under subsets
    /// (every face must have all its codimension-1 subfaces present).
    static SimplicialComplex from_closed_faces(std::vector<int> vertices,
                                               std::set<Face> faces);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::set<Face>& faces() const { return faces_; }

    bool is_void() const { return faces_.empty(); }
    bool is_irrelevant() const { return faces_.size() == 1 && faces_.begin()->empty(); }

    /// Largest face size minus one; -1 for the irrelevant complex, -2 for void.
    int dimension() const;

    /// The k-faces in lexicographic order; k = -1 yields the empty face when
    /// the complex is nonvoid.
    std::vector<Face> faces_of_dimension(int k) const;
    int face_count(int k) const;

private:
    std::vector<int> vertices_;
    std::set<Face> faces_;
};

}  // namespace borelreg
