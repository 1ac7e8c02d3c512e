#include "borelreg/homology.hpp"

#include <algorithm>

namespace borelreg {

ExactMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
    if (k < 0)
        throw DomainError("boundary_matrix: k must be nonnegative");
    const auto rows_faces = complex.faces_of_dimension(k - 1);
    const auto cols_faces = complex.faces_of_dimension(k);
    ExactMatrix m(static_cast<int>(rows_faces.size()), static_cast<int>(cols_faces.size()));
    for (int c = 0; c < m.cols(); ++c) {
        const auto& face = cols_faces[static_cast<std::size_t>(c)];
        SimplicialComplex::Face sub(face.size() - 1);
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < face.size(); ++i)
                if (i != drop)
                    sub[w++] = face[i];
            const auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
            const int r = static_cast<int>(it - rows_faces.begin());
            m(r, c) = (drop % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, const FieldSpec& field) {
    HomologyRanks h;
    if (complex.is_void())
        return h;
    const int dim = complex.dimension();
    std::vector<int> boundary_rank(static_cast<std::size_t>(dim + 2), 0);
    for (int k = 0; k <= dim; ++k)
        boundary_rank[static_cast<std::size_t>(k)] = rank(boundary_matrix(complex, k), field);
    h.set(-1, complex.face_count(-1) - boundary_rank[0]);
    for (int k = 0; k <= dim; ++k)
        h.set(k, complex.face_count(k) - boundary_rank[static_cast<std::size_t>(k)] -
                     boundary_rank[static_cast<std::size_t>(k + 1)]);
    return h;
}

}  // namespace borelreg
