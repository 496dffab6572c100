#include "coxwl2/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace coxwl2 {

namespace {

using Column = std::map<int, Integer>;

bool is_unit(const Integer& x) { return x == 1 || x == -1; }

// Nonzero invariant factors of a dense matrix.
std::vector<Integer> dense_smith(std::vector<std::vector<Integer>> a) {
    std::vector<Integer> out;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr == rows) {
                return out;
            }
            std::swap(a[t], a[pr]);
            for (std::size_t i = 0; i < rows; ++i) {
                std::swap(a[i][t], a[i][pc]);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] != 0) {
                    Integer f = a[i][t] / a[t][t];
                    for (std::size_t j = t; j < cols; ++j) {
                        a[i][j] -= f * a[t][j];
                    }
                    clean = clean && a[i][t] == 0;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] != 0) {
                    Integer f = a[t][j] / a[t][t];
                    for (std::size_t i = t; i < rows; ++i) {
                        a[i][j] -= f * a[i][t];
                    }
                    clean = clean && a[t][j] == 0;
                }
            }
            if (!clean) {
                continue;
            }
            // divisibility of the remaining block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) {
                            a[t][k] += a[i][k];
                        }
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                out.push_back(abs(a[t][t]));
                break;
            }
        }
    }
    return out;
}

// Nonzero invariant factors of a sparse integer matrix given by columns.
std::vector<Integer> invariant_factors(std::vector<Column> cols, int nrows) {
    std::vector<Integer> out;
    std::vector<std::set<int>> row_cols(static_cast<std::size_t>(nrows));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (const auto& [r, v] : cols[c]) {
            row_cols[static_cast<std::size_t>(r)].insert(static_cast<int>(c));
        }
    }
    std::vector<bool> alive(cols.size(), true);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (!alive[c] || cols[c].empty()) {
                continue;
            }
            int pivot_row = -1;
            std::size_t best = 0;
            for (const auto& [r, v] : cols[c]) {
                std::size_t load = row_cols[static_cast<std::size_t>(r)].size();
                if (is_unit(v) && (pivot_row < 0 || load < best)) {
                    pivot_row = r;
                    best = load;
                }
            }
            if (pivot_row < 0) {
                continue;
            }
            const Integer pv = cols[c][pivot_row];
            std::vector<int> others(row_cols[static_cast<std::size_t>(pivot_row)].begin(),
                                    row_cols[static_cast<std::size_t>(pivot_row)].end());
            for (int c2 : others) {
                if (static_cast<std::size_t>(c2) == c) {
                    continue;
                }
                Column& target = cols[static_cast<std::size_t>(c2)];
                Integer f = target[pivot_row] * pv;
                for (const auto& [r, v] : cols[c]) {
                    Integer& slot = target[r];
                    slot -= f * v;
                    if (slot == 0) {
                        target.erase(r);
                        row_cols[static_cast<std::size_t>(r)].erase(c2);
                    } else {
                        row_cols[static_cast<std::size_t>(r)].insert(c2);
                    }
                }
            }
            for (const auto& [r, v] : cols[c]) {
                row_cols[static_cast<std::size_t>(r)].erase(static_cast<int>(c));
            }
            cols[c].clear();
            alive[c] = false;
            out.emplace_back(1);
            progress = true;
        }
    }
    // dense remainder
    std::vector<int> rows_used;
    std::vector<std::size_t> cols_used;
    for (int r = 0; r < nrows; ++r) {
        if (!row_cols[static_cast<std::size_t>(r)].empty()) {
            rows_used.push_back(r);
        }
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (alive[c] && !cols[c].empty()) {
            cols_used.push_back(c);
        }
    }
    if (!cols_used.empty()) {
        std::unordered_map<int, std::size_t> row_pos;
        for (std::size_t i = 0; i < rows_used.size(); ++i) {
            row_pos[rows_used[i]] = i;
        }
        std::vector<std::vector<Integer>> dense(rows_used.size(), std::vector<Integer>(cols_used.size(), 0));
        for (std::size_t j = 0; j < cols_used.size(); ++j) {
            for (const auto& [r, v] : cols[cols_used[j]]) {
                dense[row_pos.at(r)][j] = v;
            }
        }
        for (auto& f : dense_smith(std::move(dense))) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<HomologyGroup> homology_of_chains(const SimplicialComplex& l, const SimplicialComplex* a) {
    const int top = l.dimension();
    if (top < 0) {
        return {};
    }
    // chain bases: faces of L not in A
    std::vector<std::vector<const Simplex*>> basis(static_cast<std::size_t>(top + 1));
    std::vector<std::unordered_map<Simplex, int, SimplexHash>> pos(static_cast<std::size_t>(top + 1));
    for (int k = 0; k <= top; ++k) {
        for (const auto& s : l.faces(k)) {
            if (a != nullptr && a->contains(s)) {
                continue;
            }
            pos[static_cast<std::size_t>(k)].emplace(s, static_cast<int>(basis[static_cast<std::size_t>(k)].size()));
            basis[static_cast<std::size_t>(k)].push_back(&s);
        }
    }
    // factors[k]: invariant factors of the boundary C_k -> C_{k-1}
    std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(top + 2));
    for (int k = 1; k <= top; ++k) {
        std::vector<Column> cols;
        cols.reserve(basis[static_cast<std::size_t>(k)].size());
        for (const Simplex* s : basis[static_cast<std::size_t>(k)]) {
            Column col;
            for (std::size_t i = 0; i < s->size(); ++i) {
                Simplex face = *s;
                face.erase(face.begin() + static_cast<long>(i));
                auto it = pos[static_cast<std::size_t>(k - 1)].find(face);
                if (it != pos[static_cast<std::size_t>(k - 1)].end()) {
                    col[it->second] = (i % 2 == 0) ? 1 : -1;
                }
            }
            cols.push_back(std::move(col));
        }
        factors[static_cast<std::size_t>(k)] =
            invariant_factors(std::move(cols), static_cast<int>(basis[static_cast<std::size_t>(k - 1)].size()));
    }
    std::vector<HomologyGroup> h(static_cast<std::size_t>(top + 1));
    for (int k = 0; k <= top; ++k) {
        long n = static_cast<long>(basis[static_cast<std::size_t>(k)].size());
        long out_rank = static_cast<long>(factors[static_cast<std::size_t>(k)].size());
        long in_rank = static_cast<long>(factors[static_cast<std::size_t>(k + 1)].size());
        h[static_cast<std::size_t>(k)].rank = n - out_rank - in_rank;
        for (const auto& f : factors[static_cast<std::size_t>(k + 1)]) {
            if (f != 1) {
                h[static_cast<std::size_t>(k)].torsion.push_back(f);
            }
        }
        std::sort(h[static_cast<std::size_t>(k)].torsion.begin(), h[static_cast<std::size_t>(k)].torsion.end());
    }
    return h;
}

} // namespace

std::vector<HomologyGroup> smith_homology(const SimplicialComplex& l) { return homology_of_chains(l, nullptr); }

std::vector<HomologyGroup> smith_homology(const SimplicialComplex& l, const SimplicialComplex& a) {
    return homology_of_chains(l, &a);
}

std::vector<HomologyGroup> free_homology(const std::vector<long>& ranks) {
    std::vector<HomologyGroup> h;
    for (long r : ranks) {
        h.push_back(HomologyGroup{r, {}});
    }
    return h;
}

std::vector<HomologyGroup> trimmed(std::vector<HomologyGroup> h) {
    while (!h.empty() && h.back().rank == 0 && h.back().torsion.empty()) {
        h.pop_back();
    }
    return h;
}

std::string to_string(const std::vector<HomologyGroup>& h) {
    std::ostringstream out;
    out << "(";
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (k > 0) {
            out << ", ";
        }
        std::vector<std::string> parts;
        if (h[k].rank == 1) {
            parts.push_back("Z");
        } else if (h[k].rank > 1) {
            parts.push_back("Z^" + std::to_string(h[k].rank));
        }
        for (const auto& t : h[k].torsion) {
            parts.push_back("Z/" + t.get_str());
        }
        if (parts.empty()) {
            out << "0";
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            out << (i > 0 ? "+" : "") << parts[i];
        }
    }
    out << ")";
    return out.str();
}

} // namespace coxwl2
