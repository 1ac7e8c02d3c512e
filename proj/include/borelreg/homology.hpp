#pragma once

#include <map>

#include "borelreg/exact_linalg.hpp"
#include "borelreg/simplicial.hpp"

namespace borelreg {

/// Matrix of the boundary map from k-chains to (k-1)-chains. Columns are the
/// k-faces and rows the (k-1)-faces, both in lexicographic order; dropping
/// the i-th vertex of a face contributes sign (-1)^i. For k = 0 the single
/// row is the augmentation onto the empty face.
ExactMatrix boundary_matrix(const SimplicialComplex& complex, int k);

/// Reduced homology ranks, nonzero entries only.
class HomologyRanks {
public:
    int at(int k) const {
        auto it = by_degree_.find(k);
        return it == by_degree_.end() ? 0 : it->second;
    }
    const std::map<int, int>& nonzero() const { return by_degree_; }
    void set(int k, int rank) {
        if (rank != 0)
            by_degree_[k] = rank;
    }

private:
    std::map<int, int> by_degree_;
};

/// Ranks of the reduced homology over the given field, for degrees -1 through
/// the dimension of the complex. The void complex has no homology at all; the
/// irrelevant complex has rank one in degree -1.
HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, const FieldSpec& field);

}  // namespace borelreg
