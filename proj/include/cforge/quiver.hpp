#pragma once
// Bound quiver algebras A = kQ/I over F_p.  The ideal is generated by
// k-linear combinations of parallel equal-length paths of length >= 2
// (length-homogeneous relations), which keeps the algebra graded by path
// length: the surviving residue classes of paths form a basis, and the
// radical filtration is read off from path lengths.
//
// Vertices are 1-based.  A path stores its arrows in application order
// (index 0 is applied first); the product p*q composes q first, so
// e_i A e_j is spanned by the surviving paths that start at j and end at i.

#include "assoc.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cforge {

struct Arrow {
    std::string name;
    int src = 0, tgt = 0;
};

struct RelTerm {
    uint32_t coeff = 1;
    std::vector<int> arrows; // arrow indices in application order
};

struct Relation {
    std::vector<RelTerm> terms;
};

struct Path {
    int src = 0, tgt = 0;
    std::vector<int> arrows; // application order; empty = trivial path at src == tgt
    size_t length() const { return arrows.size(); }
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
  public:
    static constexpr size_t kMaxPathLength = 64;
    static constexpr size_t kMaxFormalPathsPerLength = 200000;

    static AlgebraPtr build(const Fp& F, int n_vertices, std::vector<Arrow> arrows,
                            std::vector<Relation> relations);

    const Fp& field() const { return F_; }
    int vertices() const { return nv_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    size_t dim() const { return paths_.size(); }
    const Path& path(size_t id) const { return paths_[id]; }
    // max length of a surviving path + 1 (nilpotency degree of the radical)
    size_t loewy_length() const { return loewy_; }

    size_t trivial_path_id(int v) const;
    // ids of surviving paths from src to tgt, trivial paths included
    const std::vector<size_t>& paths_from_to(int src, int tgt) const;
    // position of a path inside its paths_from_to list
    size_t index_in_pair(size_t id) const { return pair_pos_[id]; }
    // product x*y of two basis paths (y applied first) expanded over the basis
    const std::vector<std::pair<size_t, uint32_t>>& path_product(size_t x, size_t y) const;
    // is there a surviving length-1 path v -> v?
    bool has_loop_at(int v) const;

    std::string path_name(size_t id) const; // arrows joined by '*', last applied first
    int arrow_index(const std::string& name) const; // -1 if absent

  private:
    Algebra(Fp F) : F_(F) {}

    Fp F_;
    int nv_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<Path> paths_;
    size_t loewy_ = 1;
    std::vector<size_t> trivial_;
    std::map<std::pair<int, int>, std::vector<size_t>> by_src_tgt_;
    std::vector<size_t> pair_pos_;
    std::vector<size_t> empty_;
    // product table, indexed x * dim + y
    std::vector<std::vector<std::pair<size_t, uint32_t>>> prod_;
};

} // namespace cforge
