#include "oriental/faces.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace oriental {

const char* to_string(Side s) { return s == Side::Source ? "source" : "target"; }

std::uint64_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

std::vector<CubeWord> mapped(const std::vector<CubeWord>& ws, CubeWord (*f)(const CubeWord&)) {
    std::vector<CubeWord> out;
    out.reserve(ws.size());
    for (const auto& w : ws) out.push_back(f(w));
    return out;
}

CubeWord repeated(Symbol s, std::size_t n) {
    return CubeWord(std::vector<Symbol>(n, s));
}

// write-once memo shared by psi and omega; guarded for concurrent readers
std::map<std::tuple<bool, std::size_t, std::size_t>, std::vector<CubeWord>> g_face_memo;
std::mutex g_face_mutex;

const std::vector<CubeWord>& face_words(bool source, std::size_t k, std::size_t n) {
    std::lock_guard<std::mutex> lock(g_face_mutex);
    auto key = std::make_tuple(source, k, n);
    auto it = g_face_memo.find(key);
    if (it != g_face_memo.end()) return it->second;

    std::function<const std::vector<CubeWord>&(bool, std::size_t, std::size_t)> build =
        [&](bool src, std::size_t kk, std::size_t nn) -> const std::vector<CubeWord>& {
        auto kkey = std::make_tuple(src, kk, nn);
        auto found = g_face_memo.find(kkey);
        if (found != g_face_memo.end()) return found->second;
        std::vector<CubeWord> ws;
        if (kk >= nn) {
            ws = {repeated(Symbol::Zero, nn)};
        } else if (kk == 0) {
            ws = {repeated(src ? Symbol::Minus : Symbol::Plus, nn)};
        } else if (src) {
            ws = mapped(build(true, kk - 1, nn - 1), append_mu);
            auto rest = mapped(build(true, kk, nn - 1),
                               kk % 2 == 0 ? append_lambda : append_nu);
            ws.insert(ws.end(), rest.begin(), rest.end());
        } else {
            ws = mapped(build(false, kk, nn - 1),
                        kk % 2 == 0 ? append_nu : append_lambda);
            auto rest = mapped(build(false, kk - 1, nn - 1), append_mu);
            ws.insert(ws.end(), rest.begin(), rest.end());
        }
        return g_face_memo.emplace(kkey, std::move(ws)).first->second;
    };
    return build(source, k, n);
}

} // namespace

const std::vector<CubeWord>& psi(std::size_t k, std::size_t n) { return face_words(true, k, n); }
const std::vector<CubeWord>& omega(std::size_t k, std::size_t n) { return face_words(false, k, n); }

FaceList face_list(Side side, std::size_t k, std::size_t n) {
    FaceList fl;
    fl.side = side;
    fl.k = k;
    fl.n = n;
    fl.words = side == Side::Source ? psi(k, n) : omega(k, n);
    return fl;
}

bool is_section(const std::set<CubeWord>& words, std::size_t k, std::size_t n) {
    if (words.size() != binom(n, k)) return false;
    std::set<ParallelClass> seen;
    for (const auto& w : words) {
        if (w.size() != n || dimension(w) != k) return false;
        if (!seen.insert(parallel_class(w)).second) return false;
    }
    return seen.size() == binom(n, k);
}

std::set<CubeWord> closure(const std::set<CubeWord>& cells) {
    std::set<CubeWord> out;
    std::vector<CubeWord> frontier(cells.begin(), cells.end());
    while (!frontier.empty()) {
        CubeWord w = frontier.back();
        frontier.pop_back();
        if (!out.insert(w).second) continue;
        if (dimension(w) == 0) continue;
        for (const auto& f : geometric_faces(w))
            if (!out.count(f)) frontier.push_back(f);
    }
    return out;
}

DiskCertificate certify_disk(const std::set<CubeWord>& cells, std::size_t k) {
    if (cells.empty()) throw EmptyInput("certify_disk: no cells");
    DiskCertificate cert;
    for (const auto& w : cells) {
        if (dimension(w) != k) {
            cert.failure = "cell \"" + to_string(w) + "\" has dimension " +
                           std::to_string(dimension(w)) + ", expected " + std::to_string(k);
            return cert;
        }
    }
    if (k == 0) {
        // a single vertex is a 0-disk with empty boundary
        if (cells.size() != 1) {
            cert.failure = "disconnected: " + std::to_string(cells.size()) + " vertices";
            return cert;
        }
        cert.ok = true;
        return cert;
    }

    // incidence of (k-1)-cells in the top cells
    std::map<CubeWord, std::vector<CubeWord>> cofaces_of_facet;
    for (const auto& w : cells)
        for (const auto& f : geometric_faces(w)) cofaces_of_facet[f].push_back(w);

    for (const auto& [f, tops] : cofaces_of_facet) {
        if (tops.size() > 2) {
            cert.failure = "facet \"" + to_string(f) + "\" lies in " +
                           std::to_string(tops.size()) + " cells";
            return cert;
        }
        if (tops.size() == 1) cert.boundary.insert(f);
    }

    // dual adjacency graph connectivity
    std::map<CubeWord, std::size_t> index;
    for (const auto& w : cells) index.emplace(w, index.size());
    std::vector<std::size_t> comp(cells.size());
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (comp[a] != a) a = comp[a] = comp[comp[a]];
        return a;
    };
    for (const auto& [f, tops] : cofaces_of_facet)
        if (tops.size() == 2) comp[find(index[tops[0]])] = find(index[tops[1]]);
    for (std::size_t i = 0; i < comp.size(); ++i) {
        if (find(i) != find(0)) {
            cert.failure = "dual adjacency graph disconnected";
            cert.boundary.clear();
            return cert;
        }
    }

    // greedy free-face collapse, lexicographically smallest free face first
    std::set<CubeWord> complex_cells = closure(cells);
    std::map<CubeWord, std::vector<CubeWord>> strict_cofaces, strict_faces;
    for (const auto& u : complex_cells) {
        for (const auto& w : complex_cells) {
            if (u != w && is_face_of(u, w)) {
                strict_cofaces[u].push_back(w);
                strict_faces[w].push_back(u);
            }
        }
    }
    std::map<CubeWord, std::size_t> coface_count;
    std::set<CubeWord> present = complex_cells;
    std::set<CubeWord> candidates; // possibly-free cells
    for (const auto& u : complex_cells) {
        coface_count[u] = strict_cofaces[u].size();
        if (coface_count[u] == 1) candidates.insert(u);
    }
    auto remove_cell = [&](const CubeWord& c) {
        present.erase(c);
        for (const auto& u : strict_faces[c]) {
            if (!present.count(u)) continue;
            if (--coface_count[u] == 1) candidates.insert(u);
        }
    };
    while (!candidates.empty()) {
        CubeWord u = *candidates.begin();
        candidates.erase(candidates.begin());
        if (!present.count(u) || coface_count[u] != 1) continue;
        CubeWord t;
        bool found_t = false;
        for (const auto& w : strict_cofaces[u]) {
            if (present.count(w)) {
                t = w;
                found_t = true;
                break;
            }
        }
        if (!found_t) continue;
        remove_cell(t);
        remove_cell(u);
    }
    if (present.size() != 1 || dimension(*present.begin()) != 0) {
        cert.failure = "complex does not collapse to a vertex (" +
                       std::to_string(present.size()) + " cells remain)";
        cert.boundary.clear();
        return cert;
    }

    cert.ok = true;
    return cert;
}

} // namespace oriental
