#include "oriental/cube.hpp"

#include <algorithm>

namespace oriental {

char to_char(Symbol s) {
    switch (s) {
        case Symbol::Minus: return '-';
        case Symbol::Zero: return '0';
        case Symbol::Plus: return '+';
    }
    return '?';
}

Symbol symbol_from_char(char c) {
    switch (c) {
        case '-': return Symbol::Minus;
        case '0': return Symbol::Zero;
        case '+': return Symbol::Plus;
    }
    throw InvalidCharacter(std::string("invalid symbol '") + c + "', expected one of -0+");
}

std::string ParallelClass::label() const {
    std::string out;
    for (int p : zero_positions) out += std::to_string(p);
    return out;
}

CubeWord parse_word(std::string_view text) {
    std::vector<Symbol> syms;
    syms.reserve(text.size());
    for (char c : text) syms.push_back(symbol_from_char(c));
    return CubeWord(std::move(syms));
}

std::string to_string(const CubeWord& w) {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w.symbols()) out += to_char(s);
    return out;
}

std::size_t dimension(const CubeWord& w) {
    return static_cast<std::size_t>(
        std::count(w.symbols().begin(), w.symbols().end(), Symbol::Zero));
}

CubeWord antipodal(const CubeWord& w) {
    std::vector<Symbol> syms;
    syms.reserve(w.size());
    for (Symbol s : w.symbols()) {
        switch (s) {
            case Symbol::Minus: syms.push_back(Symbol::Plus); break;
            case Symbol::Plus: syms.push_back(Symbol::Minus); break;
            case Symbol::Zero: syms.push_back(Symbol::Zero); break;
        }
    }
    return CubeWord(std::move(syms));
}

CubeWord substitute(const CubeWord& x, const CubeWord& y) {
    if (y.size() != dimension(x))
        throw ArityMismatch("substitute: length of \"" + to_string(y) + "\" (" +
                            std::to_string(y.size()) + ") != dimension of \"" + to_string(x) +
                            "\" (" + std::to_string(dimension(x)) + ")");
    std::vector<Symbol> syms = x.symbols();
    std::size_t j = 0;
    for (auto& s : syms)
        if (s == Symbol::Zero) s = y.at(j++);
    return CubeWord(std::move(syms));
}

static CubeWord append(const CubeWord& w, Symbol s) {
    std::vector<Symbol> syms = w.symbols();
    syms.push_back(s);
    return CubeWord(std::move(syms));
}

CubeWord append_lambda(const CubeWord& w) { return append(w, Symbol::Minus); }
CubeWord append_mu(const CubeWord& w) { return append(w, Symbol::Zero); }
CubeWord append_nu(const CubeWord& w) { return append(w, Symbol::Plus); }

std::set<CubeWord> geometric_faces(const CubeWord& w) {
    if (dimension(w) == 0)
        throw NotACell("geometric_faces: \"" + to_string(w) + "\" has dimension 0");
    std::set<CubeWord> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.at(i) != Symbol::Zero) continue;
        std::vector<Symbol> lo = w.symbols(), hi = w.symbols();
        lo[i] = Symbol::Minus;
        hi[i] = Symbol::Plus;
        out.insert(CubeWord(std::move(lo)));
        out.insert(CubeWord(std::move(hi)));
    }
    return out;
}

ParallelClass parallel_class(const CubeWord& w) {
    ParallelClass pc;
    pc.ambient = w.size();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.at(i) == Symbol::Zero) pc.zero_positions.insert(static_cast<int>(i) + 1);
    return pc;
}

bool is_face_of(const CubeWord& u, const CubeWord& w) {
    if (u.size() != w.size()) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.at(i) != Symbol::Zero && u.at(i) != w.at(i)) return false;
    return true;
}

std::vector<CubeWord> all_words(std::size_t n) {
    std::vector<CubeWord> out;
    out.reserve(1);
    std::vector<Symbol> cur;
    // counting in base 3, most significant first, preserves canonical order
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t v = 0; v < total; ++v) {
        cur.assign(n, Symbol::Minus);
        std::size_t rem = v;
        for (std::size_t i = n; i-- > 0;) {
            cur[i] = static_cast<Symbol>(rem % 3);
            rem /= 3;
        }
        out.push_back(CubeWord(cur));
    }
    return out;
}

} // namespace oriental
