#include "borelreg/simplicial.hpp"

#include <algorithm>
#include <utility>

namespace borelreg {

namespace {

bool sorted_unique(const SimplicialComplex::Face& f) {
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] >= f[i + 1])
            return false;
    return true;
}

}  // namespace

SimplicialComplex SimplicialComplex::closure(std::vector<int> vertices,
                                             const std::vector<Face>& faces) {
    std::set<Face> closed;
    std::vector<Face> work;
    for (Face f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        work.push_back(std::move(f));
    }
    while (!work.empty()) {
        Face f = std::move(work.back());
        work.pop_back();
        if (!closed.insert(f).second)
            continue;
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Face sub;
            sub.reserve(f.size() - 1);
            for (std::size_t t = 0; t < f.size(); ++t)
                if (t != drop)
                    sub.push_back(f[t]);
            if (!closed.count(sub))
                work.push_back(std::move(sub));
        }
    }
    return from_closed_faces(std::move(vertices), std::move(closed));
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::vector<int> vertices,
                                                       std::set<Face> faces) {
    for (const Face& f : faces) {
        if (!sorted_unique(f))
            throw DomainError("SimplicialComplex: face labels must be strictly increasing");
        // Checking codimension-1 subfaces suffices for downward closure.
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Face sub;
            sub.reserve(f.size() - 1);
            for (std::size_t t = 0; t < f.size(); ++t)
                if (t != drop)
                    sub.push_back(f[t]);
            if (!faces.count(sub))
                throw DomainError("SimplicialComplex: face family is not downward closed");
        }
    }
    SimplicialComplex c;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    c.vertices_ = std::move(vertices);
    c.faces_ = std::move(faces);
    return c;
}

int SimplicialComplex::dimension() const {
    if (is_void())
        return -2;
    int dim = -1;
    for (const Face& f : faces_)
        dim = std::max(dim, static_cast<int>(f.size()) - 1);
    return dim;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::faces_of_dimension(int k) const {
    std::vector<Face> out;
    if (k < -1)
        return out;
    const std::size_t want = static_cast<std::size_t>(k + 1);
    for (const Face& f : faces_)
        if (f.size() == want)
            out.push_back(f);
    return out;
}

int SimplicialComplex::face_count(int k) const {
    if (k < -1)
        return 0;
    const std::size_t want = static_cast<std::size_t>(k + 1);
    int count = 0;
    for (const Face& f : faces_)
        if (f.size() == want)
            ++count;
    return count;
}

}  // namespace borelreg
