#include "vtypes/semigroup.hpp"

#include "vtypes/error.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace vtypes {

namespace {

using boost::multiprecision::abs;

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (auto& row : m) {
        std::swap(row[a], row[b]);
    }
}

// row[dst] += q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < m[dst].size(); ++j) {
        m[dst][j] += q * m[src][j];
    }
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
    for (auto& row : m) {
        row[dst] += q * row[src];
    }
}

struct NucleusData {
    std::vector<int> nucleus;
    IntMatrix relations;  // I - A
    SNFResult snf;
};

std::string cache_key(const TypeSystem& t, const std::vector<int>& nucleus) {
    std::string key = canonical_form(t.diagram()) + "|" + std::to_string(t.root());
    for (int l : nucleus) {
        key += "," + std::to_string(l);
    }
    return key;
}

std::shared_ptr<const NucleusData> nucleus_data(const TypeSystem& t, const std::vector<int>& nucleus) {
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const NucleusData>> cache;
    const std::string key = cache_key(t, nucleus);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    auto data = std::make_shared<NucleusData>();
    data->nucleus = nucleus;
    const std::size_t n = nucleus.size();
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) {
        pos[nucleus[i]] = i;
    }
    data->relations = identity_matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (int x = 0; x < 2; ++x) {
            data->relations[i][pos.at(t.child(nucleus[i], x))] -= 1;
        }
    }
    data->snf = smith_normal_form(data->relations);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(data)).first->second;
}

const std::vector<int>& only_nucleus(const Classification& c) {
    if (c.kind != Kind::Nuclear) {
        throw Error(ErrorCode::NotApplicable, "s-types are computed for nuclear systems only");
    }
    return c.nuclei.front();
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    IntMatrix out(rows, std::vector<BigInt>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

BigInt determinant(const IntMatrix& input) {
    IntMatrix m = input;
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m[swap_with][k] == 0) {
                ++swap_with;
            }
            if (swap_with == n) {
                return 0;
            }
            swap_rows(m, k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

SNFResult smith_normal_form(const IntMatrix& input) {
    IntMatrix m = input;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    SNFResult res;
    res.left = identity_matrix(rows);
    res.right = identity_matrix(cols);
    const std::size_t steps = std::min(rows, cols);
    for (std::size_t k = 0; k < steps; ++k) {
        for (;;) {
            std::size_t pi = rows;
            std::size_t pj = cols;
            for (std::size_t i = k; i < rows; ++i) {
                for (std::size_t j = k; j < cols; ++j) {
                    if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == rows) {
                break;
            }
            swap_rows(m, k, pi);
            swap_rows(res.left, k, pi);
            swap_cols(m, k, pj);
            swap_cols(res.right, k, pj);
            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (m[i][k] != 0) {
                    const BigInt q = m[i][k] / m[k][k];
                    add_row(m, i, k, -q);
                    add_row(res.left, i, k, -q);
                    clean = clean && m[i][k] == 0;
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (m[k][j] != 0) {
                    const BigInt q = m[k][j] / m[k][k];
                    add_col(m, j, k, -q);
                    add_col(res.right, j, k, -q);
                    clean = clean && m[k][j] == 0;
                }
            }
            if (!clean) {
                continue;
            }
            bool divisible = true;
            for (std::size_t i = k + 1; i < rows && divisible; ++i) {
                for (std::size_t j = k + 1; j < cols; ++j) {
                    if (m[i][j] % m[k][k] != 0) {
                        add_row(m, k, i, 1);
                        add_row(res.left, k, i, 1);
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) {
                break;
            }
        }
        if (m[k][k] < 0) {
            for (auto& v : m[k]) {
                v = -v;
            }
            for (auto& v : res.left[k]) {
                v = -v;
            }
        }
    }
    for (std::size_t k = 0; k < steps; ++k) {
        res.diagonal.push_back(m[k][k]);
    }
    return res;
}

IntMatrix adjacency_matrix(const TypeGraph& g) {
    const std::size_t n = g.edges.size();
    IntMatrix m(n, std::vector<BigInt>(n, 0));
    for (std::size_t v = 0; v < n; ++v) {
        m[v][g.edges[v][0]] += 1;
        m[v][g.edges[v][1]] += 1;
    }
    return m;
}

std::string SemigroupInfo::h0_string() const {
    std::vector<std::string> parts;
    for (const auto& f : invariant_factors) {
        parts.push_back("Z" + f.str());
    }
    for (int i = 0; i < free_rank; ++i) {
        parts.push_back("Z");
    }
    if (parts.empty()) {
        return "0";
    }
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        out += " + " + parts[i];
    }
    return out;
}

std::string SemigroupInfo::abelianization_string() const {
    std::vector<std::string> parts(abelianization_z2, "Z2");
    for (int i = 0; i < abelianization_free; ++i) {
        parts.push_back("Z");
    }
    if (parts.empty()) {
        return "0";
    }
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        out += " + " + parts[i];
    }
    return out;
}

std::vector<SemigroupInfo> semigroup_info(const TypeSystem& t, const Classification& c) {
    if (c.kind != Kind::Nuclear && c.kind != Kind::Multinuclear) {
        throw Error(ErrorCode::NotApplicable, "semigroup invariants need a nuclear or multinuclear system");
    }
    std::vector<SemigroupInfo> out;
    for (const auto& nucleus : c.nuclei) {
        const auto data = nucleus_data(t, nucleus);
        SemigroupInfo info;
        info.nucleus = nucleus;
        for (const auto& d : data->snf.diagonal) {
            if (d == 0) {
                ++info.free_rank;
            } else if (d > 1) {
                info.invariant_factors.push_back(d);
            }
        }
        info.h1_rank = info.free_rank;
        info.det_i_minus_a = determinant(data->relations);
        for (const auto& f : info.invariant_factors) {
            if (f % 2 == 0) {
                ++info.abelianization_z2;
            }
        }
        info.abelianization_z2 += info.free_rank;
        info.abelianization_free = info.h1_rank;
        info.fix_virtually_simple = info.free_rank == 0;
        info.fix_simple = info.fix_virtually_simple && info.abelianization_z2 == 0;
        out.push_back(std::move(info));
    }
    return out;
}

std::vector<BigInt> nucleus_counts(const TypeSystem& t, const Classification& c, const std::vector<Address>& cones) {
    const auto& nucleus = only_nucleus(c);
    const std::size_t n = t.size();
    std::vector<BigInt> total(n, 0);
    for (const auto& a : cones) {
        std::vector<BigInt> layer(n, 0);
        layer[t.type_of(a)] = 1;
        for (std::size_t depth = a.length(); depth < static_cast<std::size_t>(c.t); ++depth) {
            std::vector<BigInt> next(n, 0);
            for (std::size_t l = 0; l < n; ++l) {
                if (layer[l] != 0) {
                    next[t.child(static_cast<int>(l), 0)] += layer[l];
                    next[t.child(static_cast<int>(l), 1)] += layer[l];
                }
            }
            layer = std::move(next);
        }
        for (std::size_t l = 0; l < n; ++l) {
            total[l] += layer[l];
        }
    }
    std::vector<BigInt> out;
    for (int l : nucleus) {
        out.push_back(total[l]);
    }
    return out;
}

SType stype_of(const TypeSystem& t, const Classification& c, const std::vector<Address>& cones) {
    if (!is_antichain(cones)) {
        throw Error(ErrorCode::NotIncomparable, "cones are not pairwise disjoint");
    }
    const auto& nucleus = only_nucleus(c);
    const auto data = nucleus_data(t, nucleus);
    const auto v = nucleus_counts(t, c, cones);
    const std::size_t n = nucleus.size();
    SType s;
    s.coords.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            s.coords[j] += v[i] * data->snf.right[i][j];
        }
        const BigInt& d = data->snf.diagonal[j];
        if (d != 0) {
            s.coords[j] %= d;
            if (s.coords[j] < 0) {
                s.coords[j] += d;
            }
        }
    }
    return s;
}

bool stype_equal(const SType& x, const SType& y) { return x == y; }

}  // namespace vtypes
