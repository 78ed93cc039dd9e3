#include "cforge/quiver.hpp"

#include <algorithm>

namespace cforge {

namespace {

struct Stratum {
    std::vector<std::vector<int>> fpaths; // formal arrow sequences, application order
    std::map<std::vector<int>, size_t> index;
    Mat ideal; // rref rows over fpath columns
    std::vector<size_t> pivots;
    std::vector<bool> is_pivot;
    std::vector<long> global; // alive column -> global path id, else -1
};

} // namespace

AlgebraPtr Algebra::build(const Fp& F, int n_vertices, std::vector<Arrow> arrows,
                          std::vector<Relation> relations) {
    if (n_vertices < 1) throw CfError("algebra needs at least one vertex");
    for (size_t i = 0; i < arrows.size(); ++i) {
        const Arrow& a = arrows[i];
        if (a.src < 1 || a.src > n_vertices || a.tgt < 1 || a.tgt > n_vertices)
            throw CfError("arrow '" + a.name + "' has a vertex out of range");
        if (a.name.empty() || a.name.find('*') != std::string::npos)
            throw CfError("invalid arrow name");
        for (size_t j = 0; j < i; ++j)
            if (arrows[j].name == a.name) throw CfError("duplicate arrow name '" + a.name + "'");
    }
    // Validate relations: parallel, equal-length (>= 2) terms with composable arrows.
    for (Relation& rel : relations) {
        if (rel.terms.empty()) throw CfError("empty relation");
        int rsrc = -1, rtgt = -1;
        size_t rlen = 0;
        for (RelTerm& t : rel.terms) {
            t.coeff = F.reduce_int((long long)t.coeff);
            if (t.coeff == 0) throw CfError("relation term with zero coefficient");
            if (t.arrows.size() < 2)
                throw CfError("relations must be generated in path length >= 2");
            for (size_t k = 0; k < t.arrows.size(); ++k) {
                int ai = t.arrows[k];
                if (ai < 0 || (size_t)ai >= arrows.size()) throw CfError("relation uses unknown arrow");
                if (k > 0 && arrows[t.arrows[k - 1]].tgt != arrows[ai].src)
                    throw CfError("relation term is not a composable path");
            }
            int tsrc = arrows[t.arrows.front()].src;
            int ttgt = arrows[t.arrows.back()].tgt;
            if (rsrc == -1) {
                rsrc = tsrc;
                rtgt = ttgt;
                rlen = t.arrows.size();
            } else if (tsrc != rsrc || ttgt != rtgt) {
                throw CfError("relation terms are not parallel paths");
            } else if (t.arrows.size() != rlen) {
                throw CfError("relation terms have mixed lengths; only length-homogeneous "
                              "relations are supported");
            }
        }
    }

    auto alg = std::shared_ptr<Algebra>(new Algebra(F));
    alg->nv_ = n_vertices;
    alg->arrows_ = arrows;

    // Length 0 and 1 live entirely outside the ideal.
    std::vector<Stratum> strata;
    for (int v = 1; v <= n_vertices; ++v) {
        alg->trivial_.push_back(alg->paths_.size());
        alg->paths_.push_back(Path{v, v, {}});
    }
    {
        Stratum s1;
        for (size_t a = 0; a < arrows.size(); ++a) {
            s1.index[{(int)a}] = s1.fpaths.size();
            s1.fpaths.push_back({(int)a});
            s1.global.push_back((long)alg->paths_.size());
            alg->paths_.push_back(Path{arrows[a].src, arrows[a].tgt, {(int)a}});
        }
        s1.is_pivot.assign(s1.fpaths.size(), false);
        s1.ideal = Mat(0, s1.fpaths.size());
        strata.push_back(std::move(s1));
    }

    size_t last_alive_len = arrows.empty() ? 0 : 1;
    for (size_t d = 2; d <= kMaxPathLength + 1; ++d) {
        const Stratum& prev = strata.back(); // length d-1
        bool prev_has_alive = false;
        for (long g : prev.global)
            if (g >= 0) prev_has_alive = true;
        // Once a whole length stratum dies, every longer path lies in the ideal.
        if (!prev_has_alive) break;

        Stratum cur;
        for (const auto& seq : prev.fpaths) {
            int t = arrows[seq.back()].tgt;
            for (size_t a = 0; a < arrows.size(); ++a) {
                if (arrows[a].src != t) continue;
                std::vector<int> ext = seq;
                ext.push_back((int)a);
                cur.index[ext] = cur.fpaths.size();
                cur.fpaths.push_back(std::move(ext));
                if (cur.fpaths.size() > kMaxFormalPathsPerLength)
                    throw CfError("path enumeration cap exceeded; ideal is not admissible "
                                  "within the supported bounds");
            }
        }
        if (cur.fpaths.empty()) break;

        // Ideal stratum: arrow * I_{d-1} + I_{d-1} * arrow + relations of length d.
        std::vector<Mat> gen_rows;
        auto add_row = [&](const std::vector<std::pair<size_t, uint32_t>>& entries) {
            Mat row(1, cur.fpaths.size());
            for (auto [c, v] : entries) row.at(0, c) = F.add(row.at(0, c), v);
            gen_rows.push_back(std::move(row));
        };
        for (size_t r = 0; r < prev.ideal.rows(); ++r) {
            for (size_t a = 0; a < arrows.size(); ++a) {
                // Multiplying an ideal element by an arrow on either side stays
                // in the ideal; terms that do not compose with the arrow vanish.
                std::vector<std::pair<size_t, uint32_t>> left, right;
                for (size_t c = 0; c < prev.fpaths.size(); ++c) {
                    uint32_t v = prev.ideal.at(r, c);
                    if (!v) continue;
                    const auto& seq = prev.fpaths[c];
                    if (arrows[seq.back()].tgt == arrows[a].src) {
                        std::vector<int> ext = seq;
                        ext.push_back((int)a);
                        left.push_back({cur.index.at(ext), v});
                    }
                    if (arrows[a].tgt == arrows[seq.front()].src) {
                        std::vector<int> ext;
                        ext.push_back((int)a);
                        ext.insert(ext.end(), seq.begin(), seq.end());
                        right.push_back({cur.index.at(ext), v});
                    }
                }
                if (!left.empty()) add_row(left);
                if (!right.empty()) add_row(right);
            }
        }
        for (const Relation& rel : relations) {
            if (rel.terms[0].arrows.size() != d) continue;
            std::vector<std::pair<size_t, uint32_t>> entries;
            for (const RelTerm& t : rel.terms) entries.push_back({cur.index.at(t.arrows), t.coeff});
            add_row(entries);
        }

        Mat gens(gen_rows.size(), cur.fpaths.size());
        for (size_t i = 0; i < gen_rows.size(); ++i)
            for (size_t j = 0; j < cur.fpaths.size(); ++j) gens.at(i, j) = gen_rows[i].at(0, j);
        RrefResult R = rref(F, gens);
        Mat ideal(R.rank, cur.fpaths.size());
        for (size_t i = 0; i < R.rank; ++i)
            for (size_t j = 0; j < cur.fpaths.size(); ++j) ideal.at(i, j) = R.m.at(i, j);
        cur.ideal = std::move(ideal);
        cur.pivots = R.pivots;
        cur.is_pivot.assign(cur.fpaths.size(), false);
        for (size_t c : R.pivots) cur.is_pivot[c] = true;

        bool any_alive = false;
        cur.global.assign(cur.fpaths.size(), -1);
        for (size_t c = 0; c < cur.fpaths.size(); ++c) {
            if (cur.is_pivot[c]) continue;
            any_alive = true;
            cur.global[c] = (long)alg->paths_.size();
            const auto& seq = cur.fpaths[c];
            alg->paths_.push_back(Path{arrows[seq.front()].src, arrows[seq.back()].tgt, seq});
        }
        if (any_alive) last_alive_len = d;
        strata.push_back(std::move(cur));
        if (d == kMaxPathLength + 1 && any_alive)
            throw CfError("paths of unbounded length survive; ideal is not admissible "
                          "within the supported bounds");
        if (!any_alive) break;
    }
    alg->loewy_ = last_alive_len + 1;

    // Normal form of a formal arrow sequence, as (global id, coeff) pairs.
    auto normal_form = [&](const std::vector<int>& seq) {
        std::vector<std::pair<size_t, uint32_t>> out;
        size_t d = seq.size();
        if (d == 0) throw CfError("normal_form: empty sequence");
        if (d - 1 >= strata.size()) return out; // beyond every computed stratum: zero
        const Stratum& s = strata[d - 1];
        auto it = s.index.find(seq);
        if (it == s.index.end()) return out;
        size_t c = it->second;
        if (!s.is_pivot[c]) {
            out.push_back({(size_t)s.global[c], 1});
            return out;
        }
        size_t row = 0;
        while (s.pivots[row] != c) ++row;
        for (size_t j = 0; j < s.fpaths.size(); ++j) {
            if (s.is_pivot[j]) continue;
            uint32_t v = s.ideal.at(row, j);
            if (v) out.push_back({(size_t)s.global[j], F.neg(v)});
        }
        return out;
    };

    // Full product table over the surviving basis.
    size_t n = alg->paths_.size();
    alg->prod_.assign(n * n, {});
    for (size_t x = 0; x < n; ++x) {
        const Path& px = alg->paths_[x];
        for (size_t y = 0; y < n; ++y) {
            const Path& py = alg->paths_[y];
            if (px.src != py.tgt) continue; // not composable: product is zero
            if (px.length() == 0) {
                alg->prod_[x * n + y] = {{y, 1}};
            } else if (py.length() == 0) {
                alg->prod_[x * n + y] = {{x, 1}};
            } else {
                std::vector<int> seq = py.arrows;
                seq.insert(seq.end(), px.arrows.begin(), px.arrows.end());
                alg->prod_[x * n + y] = normal_form(seq);
            }
        }
    }

    alg->pair_pos_.assign(n, 0);
    for (size_t id = 0; id < n; ++id) {
        const Path& p = alg->paths_[id];
        auto& lst = alg->by_src_tgt_[{p.src, p.tgt}];
        alg->pair_pos_[id] = lst.size();
        lst.push_back(id);
    }
    return alg;
}

size_t Algebra::trivial_path_id(int v) const {
    if (v < 1 || v > nv_) throw CfError("vertex out of range");
    return trivial_[v - 1];
}

const std::vector<size_t>& Algebra::paths_from_to(int src, int tgt) const {
    auto it = by_src_tgt_.find({src, tgt});
    return it == by_src_tgt_.end() ? empty_ : it->second;
}

const std::vector<std::pair<size_t, uint32_t>>& Algebra::path_product(size_t x, size_t y) const {
    return prod_[x * paths_.size() + y];
}

bool Algebra::has_loop_at(int v) const {
    for (size_t id : paths_from_to(v, v))
        if (paths_[id].length() == 1) return true;
    return false;
}

std::string Algebra::path_name(size_t id) const {
    const Path& p = paths_[id];
    if (p.arrows.empty()) return "e" + std::to_string(p.src);
    std::string s;
    for (size_t k = p.arrows.size(); k-- > 0;) {
        s += arrows_[p.arrows[k]].name;
        if (k > 0) s += "*";
    }
    return s;
}

int Algebra::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name) return (int)i;
    return -1;
}

} // namespace cforge
