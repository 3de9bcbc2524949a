#include "oriental/cocycle.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace oriental {

namespace {

Block leaf_of(Symbol s, std::size_t n) {
    return Block(CubeWord(std::vector<Symbol>(n, s)));
}

Block map_leaves(const Block& b, CubeWord (*f)(const CubeWord&)) {
    if (b.is_leaf()) return Block(f(b.word()));
    std::vector<Block> kids;
    kids.reserve(b.children().size());
    for (const auto& c : b.children()) kids.push_back(map_leaves(c, f));
    return Block(b.level(), std::move(kids));
}

/// Substitute every leaf w by x*w: places a pure block inside ambient space.
Block embed(const CubeWord& x, const Block& b) {
    if (b.is_leaf()) return Block(substitute(x, b.word()));
    std::vector<Block> kids;
    kids.reserve(b.children().size());
    for (const auto& c : b.children()) kids.push_back(embed(x, c));
    return Block(b.level(), std::move(kids));
}

Block to_level(const Block& b, std::size_t k) { return promote(b, k); }

/// Concatenate same-level blocks child-wise into one level-k block.
Block concat(std::size_t k, const std::vector<Block>& parts) {
    std::vector<Block> kids;
    for (const auto& p : parts) {
        Block q = to_level(p, k);
        kids.insert(kids.end(), q.children().begin(), q.children().end());
    }
    return Block(k, std::move(kids));
}

/// The triple-induction table. Entries are built strictly in order of
/// ambient n; a lookup of an unbuilt entry is a logic error, which guards
/// against accidental recursion into the induction.
class CocycleTable {
public:
    static CocycleTable& instance() {
        static CocycleTable table;
        return table;
    }

    const Block& sigma(std::size_t k, std::size_t n) { return get(true, k, n); }
    const Block& tau(std::size_t k, std::size_t n) { return get(false, k, n); }

    void ensure(std::size_t n) {
        std::lock_guard<std::mutex> lock(mutex_);
        for (std::size_t m = built_; m <= n; ++m) build(m);
        built_ = std::max(built_, n + 1);
    }

    Block sigma_of(std::size_t k, const Block& b) { return restrict_of(true, k, b); }
    Block tau_of(std::size_t k, const Block& b) { return restrict_of(false, k, b); }

    Block lambda_of(std::size_t k, const Block& b) { return shift_of(true, k, b); }
    Block nu_of(std::size_t k, const Block& b) { return shift_of(false, k, b); }

    Block mu_of(std::size_t k, const Block& b);

private:
    CocycleTable() = default;

    const Block& get(bool source, std::size_t k, std::size_t n) {
        char kind = k >= n ? 'z' : (source ? 's' : 't');
        if (k >= n) k = 0;
        auto it = memo_.find(std::make_tuple(kind, k, n));
        if (it == memo_.end())
            throw std::logic_error("cocycle table entry (" + std::to_string(k) + "," +
                                   std::to_string(n) + ") consulted before it was built");
        return it->second;
    }

    void put(char kind, std::size_t k, std::size_t n, Block b) {
        memo_.emplace(std::make_tuple(kind, k, n), std::move(b));
    }

    void build(std::size_t m) {
        if (memo_.count(std::make_tuple('s', std::size_t{0}, m))) return;
        put('z', 0, m, leaf_of(Symbol::Zero, m));
        put('s', 0, m, leaf_of(Symbol::Minus, m));
        put('t', 0, m, leaf_of(Symbol::Plus, m));
        for (std::size_t k = 1; k + 1 <= m; ++k) {
            Block sa = mu_of(k - 1, sigma(k - 1, m - 1));
            Block sb = shift_of(k % 2 == 0, k - 1, to_level(sigma(k, m - 1), k));
            put('s', k, m, concat(k, {sa, sb}));
            Block tb = shift_of(k % 2 == 1, k - 1, to_level(tau(k, m - 1), k));
            Block ta = mu_of(k - 1, tau(k - 1, m - 1));
            put('t', k, m, concat(k, {tb, ta}));
        }
    }

    // sigma_k / tau_k on blocks; source selects the first/last descent.
    Block restrict_of(bool source, std::size_t k, const Block& b);

    // lambda_k (is_lambda) or nu_k on blocks.
    Block shift_of(bool is_lambda, std::size_t k, const Block& b);

    /// Wrap every full level-j sub-block of b with the sibling context.
    Block stretch(const Block& b, std::size_t j, const std::vector<Block>& pre,
                  const std::vector<Block>& post) {
        if (b.level() == j) {
            std::vector<Block> kids = pre;
            kids.insert(kids.end(), b.children().begin(), b.children().end());
            kids.insert(kids.end(), post.begin(), post.end());
            return Block(j, std::move(kids));
        }
        std::vector<Block> kids;
        kids.reserve(b.children().size());
        for (const auto& c : b.children()) kids.push_back(stretch(c, j, pre, post));
        return Block(b.level(), std::move(kids));
    }

    std::map<std::tuple<char, std::size_t, std::size_t>, Block> memo_;
    std::mutex mutex_;
    std::size_t built_ = 0;
};

Block CocycleTable::restrict_of(bool source, std::size_t k, const Block& b) {
    if (b.is_leaf()) {
        const CubeWord& x = b.word();
        const Block& pure = get(source, k, dimension(x));
        return to_level(embed(x, pure), k);
    }
    if (k == 0) {
        // restrict to the extreme 0-block and take its vertex
        const Block& c = source ? b.children().front() : b.children().back();
        return restrict_of(source, 0, c);
    }
    if (b.level() > k) {
        const Block& c = source ? b.children().front() : b.children().back();
        return restrict_of(source, k, c);
    }
    if (b.level() == k) {
        std::vector<Block> parts;
        parts.reserve(b.children().size());
        for (const auto& c : b.children()) parts.push_back(restrict_of(source, k, c));
        return concat(k, parts);
    }
    // 1 <= level <= k-1: identity on flat blocks, else distinguished stretching
    if (block_dimension(b) <= k) return to_level(b, k);
    std::size_t i = distinguished_child(b);
    Block core = restrict_of(source, k, b.children()[i]);
    std::vector<Block> pre(b.children().begin(), b.children().begin() + i);
    std::vector<Block> post(b.children().begin() + i + 1, b.children().end());
    return stretch(core, b.level(), pre, post);
}

Block CocycleTable::shift_of(bool is_lambda, std::size_t k, const Block& b) {
    if (k == 0) return map_leaves(b, is_lambda ? append_lambda : append_nu);
    if (b.level() > k) {
        std::vector<Block> kids;
        kids.reserve(b.children().size());
        for (const auto& c : b.children()) kids.push_back(shift_of(is_lambda, k, c));
        return Block(b.level(), std::move(kids));
    }
    Block a = to_level(b, k);
    std::size_t n = block_ambient(a);
    std::vector<Block> mapped;
    mapped.reserve(a.children().size());
    for (const auto& c : a.children()) mapped.push_back(shift_of(is_lambda, k - 1, c));
    Block body = concat(k, mapped);
    // lambda appends mu tau_{k-1}[n] for k odd and prepends mu sigma_{k-1}[n]
    // for k even; nu does the opposite.
    bool append_tau_end = (k % 2 == 1) == is_lambda;
    if (append_tau_end) {
        Block cap = mu_of(k - 1, tau(k - 1, n));
        return concat(k, {body, cap});
    }
    Block cap = mu_of(k - 1, sigma(k - 1, n));
    return concat(k, {cap, body});
}

Block CocycleTable::mu_of(std::size_t k, const Block& b) {
    if (k == 0) {
        if (!b.is_leaf()) throw LevelMismatch("mu_0 expects a 0-block");
        return Block(append_mu(b.word()));
    }
    if (b.level() > k) throw LevelMismatch("mu_" + std::to_string(k) + " applied to a level-" +
                                           std::to_string(b.level()) + " block");
    Block a = to_level(b, k);
    const auto& kids = a.children();
    std::size_t t = kids.size();
    std::vector<Block> lines;
    lines.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<Block> entries;
        entries.reserve(t);
        for (std::size_t j = 0; j < t; ++j) {
            if (j < i) {
                Block tk = restrict_of(false, k, kids[j]);
                entries.push_back(shift_of(k % 2 == 1, k - 1, tk));
            } else if (j == i) {
                entries.push_back(to_level(mu_of(k - 1, kids[i]), k));
            } else {
                Block sk = restrict_of(true, k, kids[j]);
                entries.push_back(shift_of(k % 2 == 0, k - 1, sk));
            }
        }
        lines.push_back(concat(k, entries));
    }
    return Block(k + 1, std::move(lines));
}

} // namespace

const Block& sigma_block(std::size_t k, std::size_t n) {
    auto& table = CocycleTable::instance();
    table.ensure(n);
    return table.sigma(k, n);
}

const Block& tau_block(std::size_t k, std::size_t n) {
    auto& table = CocycleTable::instance();
    table.ensure(n);
    return table.tau(k, n);
}

Block sigma_of(std::size_t k, const Block& b) {
    auto& table = CocycleTable::instance();
    table.ensure(block_ambient(b));
    return table.sigma_of(k, b);
}

Block tau_of(std::size_t k, const Block& b) {
    auto& table = CocycleTable::instance();
    table.ensure(block_ambient(b));
    return table.tau_of(k, b);
}

Block lambda_block(std::size_t k, const Block& b) {
    auto& table = CocycleTable::instance();
    table.ensure(block_ambient(b));
    return table.lambda_of(k, b);
}

Block nu_block(std::size_t k, const Block& b) {
    auto& table = CocycleTable::instance();
    table.ensure(block_ambient(b));
    return table.nu_of(k, b);
}

Block mu_block(std::size_t k, const Block& b) {
    auto& table = CocycleTable::instance();
    table.ensure(block_ambient(b));
    return table.mu_of(k, b);
}

Pile sigma_end_pile(std::size_t n) { return target_pile_with_source_top(n); }
Pile tau_start_pile(std::size_t n) { return source_pile_with_target_top(n); }

CocycleCondition cocycle(std::size_t n) {
    if (n == 0) throw Error("cocycle: n must be >= 1");
    CocycleCondition c;
    c.n = n;
    c.source_form = linearize(sigma_block(n - 1, n));
    c.target_form = linearize(tau_block(n - 1, n));
    return c;
}

Trace run_source(std::size_t n) {
    return run(linearize(sigma_block(n - 1, n)), face_pile(Side::Source, n));
}

Trace run_target(std::size_t n) {
    return run(linearize(tau_block(n - 1, n)), tau_start_pile(n));
}

ExecutionReport verify_execution(std::size_t n) {
    ExecutionReport rep;
    try {
        Trace s = run_source(n);
        if (!s.final_state().same_sets(sigma_end_pile(n))) {
            rep.failure = "source run does not end at Omega with psi_" + std::to_string(n - 1);
            return rep;
        }
        Trace t = run_target(n);
        if (!t.final_state().same_sets(face_pile(Side::Target, n))) {
            rep.failure = "target run does not end at Omega";
            return rep;
        }
    } catch (const Error& e) {
        rep.failure = e.what();
        return rep;
    }
    rep.ok = true;
    return rep;
}

Prop62Report verify_prop_6_2(std::size_t n) {
    if (n < 2) throw Error("verify_prop_6_2: n must be >= 2");
    Prop62Report rep;
    std::size_t k = n - 1;
    const Block& s = sigma_block(k, n);

    // (i) restriction of full j-sub-blocks
    for (std::size_t j = 1; j < k; ++j) {
        for (const auto& alpha : sub_blocks(s, j)) {
            for (std::size_t i = 0; i < j; ++i) {
                if (linearize(sigma_of(i, alpha)) != linearize(sigma_block(i, n))) {
                    rep.failure = "sigma_" + std::to_string(i) + " of a full " +
                                  std::to_string(j) + "-sub-block differs from sigma_" +
                                  std::to_string(i) + "[" + std::to_string(n) + "]";
                    return rep;
                }
                if (linearize(tau_of(i, alpha)) != linearize(tau_block(i, n))) {
                    rep.failure = "tau_" + std::to_string(i) + " of a full " +
                                  std::to_string(j) + "-sub-block differs from tau_" +
                                  std::to_string(i) + "[" + std::to_string(n) + "]";
                    return rep;
                }
                rep.restriction_checks += 2;
            }
        }
    }

    // (ii) adjacent j-blocks glue along a j-disk, target to source
    auto cells_of = [](const Block& b, std::size_t j) {
        std::set<CubeWord> tops;
        for (const auto& w : block_words(b))
            if (dimension(w) == j) tops.insert(w);
        return tops;
    };
    std::function<bool(const Block&)> scan = [&](const Block& b) -> bool {
        if (b.is_leaf()) return true;
        std::size_t j = b.level() - 1;
        const auto& kids = b.children();
        for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
            Block left = tau_of(j, kids[i]);
            Block right = sigma_of(j, kids[i + 1]);
            auto tops = cells_of(right, j);
            if (tops != cells_of(left, j)) {
                rep.failure = "adjacent level-" + std::to_string(j) +
                              " blocks do not glue: tau and sigma carry different " +
                              std::to_string(j) + "-cells";
                return false;
            }
            if (j >= 1) {
                auto cert = certify_disk(tops, j);
                if (!cert.ok) {
                    rep.failure = "gluing interface at level " + std::to_string(j) +
                                  " is not a disk: " + cert.failure;
                    return false;
                }
            }
            ++rep.gluing_checks;
            if (linearize(left) == linearize(right)) ++rep.gluing_strict;
        }
        for (const auto& c : kids)
            if (!scan(c)) return false;
        return true;
    };
    if (!scan(s)) return rep;

    // (iii) nested disks along the executed trace
    auto nd = check_nested_disks(run_source(n));
    if (!nd.ok) {
        rep.failure = nd.failure;
        return rep;
    }

    rep.ok = true;
    return rep;
}

} // namespace oriental
