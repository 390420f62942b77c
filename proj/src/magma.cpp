#include "bialg/magma.hpp"

#include <algorithm>
#include <set>

namespace bialg {

Magma Magma::make(std::string name, std::vector<std::string> labels,
                  std::vector<int> table_row_major) {
    const size_t n = labels.size();
    if (n == 0) fail("SchemaError", "empty carrier");
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) fail("DuplicateLabel", "duplicate label '" + l + "'");
    if (table_row_major.size() != n * n)
        fail("SchemaError", "table must be " + std::to_string(n) + "x" + std::to_string(n));
    for (int v : table_row_major)
        if (v < 0 || v >= static_cast<int>(n))
            fail("IndexOutOfRange", "table entry " + std::to_string(v) + " not in [0," +
                                        std::to_string(n) + ")");
    Magma m;
    m.name_ = std::move(name);
    m.labels_ = std::move(labels);
    m.table_ = std::move(table_row_major);
    return m;
}

int Magma::index_of(const std::string& label) const {
    auto i = find(label);
    if (!i) fail("UnknownLabel", "no element labeled '" + label + "' in " + name_);
    return *i;
}

std::optional<int> Magma::find(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

Magma Magma::restrict_to(const std::vector<int>& subset, const std::string& name) const {
    std::vector<int> pos(labels_.size(), -1);
    for (size_t k = 0; k < subset.size(); ++k) pos[subset[k]] = static_cast<int>(k);
    std::vector<std::string> labs;
    labs.reserve(subset.size());
    for (int i : subset) labs.push_back(labels_[i]);
    std::vector<int> tab(subset.size() * subset.size());
    for (size_t a = 0; a < subset.size(); ++a)
        for (size_t b = 0; b < subset.size(); ++b) {
            int v = op(subset[a], subset[b]);
            if (pos[v] < 0) fail("NotClosed", "subset of " + name_ + " is not closed");
            tab[a * subset.size() + b] = pos[v];
        }
    return Magma::make(name, std::move(labs), std::move(tab));
}

std::optional<int> Magma::identity() const {
    const int n = size();
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = op(e, a) == a && op(a, e) == a;
        if (ok) return e;
    }
    return std::nullopt;
}

int Magma::power(int x, int k) const {
    int acc = x;
    for (int i = 1; i < k; ++i) acc = op(acc, x);
    return acc;
}

const char* to_string(MagmaKind k) {
    switch (k) {
        case MagmaKind::groupoid: return "groupoid";
        case MagmaKind::quasigroup: return "quasigroup";
        case MagmaKind::semigroup: return "semigroup";
        case MagmaKind::monoid: return "monoid";
        case MagmaKind::loop: return "loop";
        case MagmaKind::group: return "group";
    }
    return "?";
}

ClassificationReport classify(const Magma& m) {
    const int n = m.size();
    ClassificationReport r;

    r.associative = true;
    for (int a = 0; a < n && r.associative; ++a)
        for (int b = 0; b < n && r.associative; ++b)
            for (int c = 0; c < n; ++c)
                if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c))) {
                    r.associative = false;
                    r.assoc_witness = {a, b, c};
                    break;
                }

    r.commutative = true;
    for (int a = 0; a < n && r.commutative; ++a)
        for (int b = a + 1; b < n; ++b)
            if (m.op(a, b) != m.op(b, a)) {
                r.commutative = false;
                r.comm_witness = {a, b};
                break;
            }

    r.idempotent = true;
    for (int a = 0; a < n; ++a)
        if (m.op(a, a) != a) {
            r.idempotent = false;
            r.idem_witness = a;
            break;
        }

    r.identity = m.identity();

    r.latin = true;
    for (int i = 0; i < n && r.latin; ++i) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int j = 0; j < n; ++j) {
            int rv = m.op(i, j), cv = m.op(j, i);
            if (row[rv]++) {
                r.latin = false;
                r.latin_witness = {1, i, rv};
                break;
            }
            if (col[cv]++) {
                r.latin = false;
                r.latin_witness = {0, i, cv};
                break;
            }
        }
    }

    r.has_inverses = false;
    if (r.identity) {
        r.has_inverses = true;
        for (int a = 0; a < n; ++a) {
            bool found = false;
            for (int b = 0; b < n; ++b)
                if (m.op(a, b) == *r.identity && m.op(b, a) == *r.identity) {
                    found = true;
                    break;
                }
            if (!found) {
                r.has_inverses = false;
                r.inverse_witness = a;
                break;
            }
        }
    }

    if (r.associative && r.identity && r.has_inverses)
        r.kind = MagmaKind::group;
    else if (r.latin && r.identity)
        r.kind = MagmaKind::loop;
    else if (r.associative && r.identity)
        r.kind = MagmaKind::monoid;
    else if (r.latin)
        r.kind = MagmaKind::quasigroup;
    else if (r.associative)
        r.kind = MagmaKind::semigroup;
    else
        r.kind = MagmaKind::groupoid;
    return r;
}

bool is_group(const ClassificationReport& r) { return r.kind == MagmaKind::group; }

bool is_loop_or_group(const ClassificationReport& r) {
    return r.kind == MagmaKind::loop || r.kind == MagmaKind::group;
}

bool is_semigroup(const ClassificationReport& r) { return r.associative; }

std::optional<IdentityKind> identity_kind_from_string(const std::string& s) {
    static const std::map<std::string, IdentityKind> table = {
        {"associative", IdentityKind::Associative},
        {"moufang1", IdentityKind::Moufang1},
        {"moufang2", IdentityKind::Moufang2},
        {"moufang3", IdentityKind::Moufang3},
        {"bol", IdentityKind::Bol},
        {"bruck", IdentityKind::Bruck},
        {"left-alternative", IdentityKind::LeftAlternative},
        {"right-alternative", IdentityKind::RightAlternative},
        {"wip", IdentityKind::WIP},
        {"p", IdentityKind::PIdentity},
        {"semialternative", IdentityKind::Semialternative},
    };
    auto it = table.find(s);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

const char* to_string(IdentityKind k) {
    switch (k) {
        case IdentityKind::Associative: return "associative";
        case IdentityKind::Moufang1: return "moufang1";
        case IdentityKind::Moufang2: return "moufang2";
        case IdentityKind::Moufang3: return "moufang3";
        case IdentityKind::Bol: return "bol";
        case IdentityKind::Bruck: return "bruck";
        case IdentityKind::LeftAlternative: return "left-alternative";
        case IdentityKind::RightAlternative: return "right-alternative";
        case IdentityKind::WIP: return "wip";
        case IdentityKind::PIdentity: return "p";
        case IdentityKind::Semialternative: return "semialternative";
    }
    return "?";
}

namespace {

// Unique two-sided inverse of a w.r.t. e, if exactly one exists.
std::optional<int> unique_inverse(const Magma& m, int a, int e) {
    std::optional<int> inv;
    for (int b = 0; b < m.size(); ++b)
        if (m.op(a, b) == e && m.op(b, a) == e) {
            if (inv) return std::nullopt;
            inv = b;
        }
    return inv;
}

// Left division a \ b: the unique w with a*w = b (requires Latin columns... rows).
std::optional<int> left_divide(const Magma& m, int a, int b) {
    std::optional<int> w;
    for (int x = 0; x < m.size(); ++x)
        if (m.op(a, x) == b) {
            if (w) return std::nullopt;
            w = x;
        }
    return w;
}

} // namespace

IdentityCheck check_identity(const Magma& m, IdentityKind kind) {
    const int n = m.size();
    IdentityCheck out;
    out.holds = true;

    auto fail_with = [&](std::vector<int> w) {
        if (out.holds) {
            out.holds = false;
            out.witness = std::move(w);
        }
    };

    auto scan_triples = [&](auto&& pred) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (!pred(x, y, z)) {
                        fail_with({x, y, z});
                        return;
                    }
    };
    auto scan_pairs = [&](auto&& pred) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (!pred(x, y)) {
                    fail_with({x, y});
                    return;
                }
    };

    switch (kind) {
        case IdentityKind::Associative:
            scan_triples([&](int x, int y, int z) {
                return m.op(m.op(x, y), z) == m.op(x, m.op(y, z));
            });
            break;
        case IdentityKind::Moufang1:
            scan_triples([&](int x, int y, int z) {
                return m.op(m.op(x, y), m.op(z, x)) == m.op(m.op(x, m.op(y, z)), x);
            });
            break;
        case IdentityKind::Moufang2:
            scan_triples([&](int x, int y, int z) {
                return m.op(m.op(m.op(x, y), z), y) == m.op(x, m.op(y, m.op(z, y)));
            });
            break;
        case IdentityKind::Moufang3:
            scan_triples([&](int x, int y, int z) {
                return m.op(x, m.op(y, m.op(x, z))) == m.op(m.op(m.op(x, y), x), z);
            });
            break;
        case IdentityKind::Bol:
            scan_triples([&](int x, int y, int z) {
                return m.op(m.op(m.op(x, y), z), y) == m.op(x, m.op(m.op(y, z), y));
            });
            break;
        case IdentityKind::LeftAlternative:
            scan_pairs([&](int x, int y) { return m.op(m.op(x, x), y) == m.op(x, m.op(x, y)); });
            break;
        case IdentityKind::RightAlternative:
            scan_pairs([&](int x, int y) { return m.op(m.op(x, y), y) == m.op(x, m.op(y, y)); });
            break;
        case IdentityKind::PIdentity:
            scan_pairs([&](int x, int y) { return m.op(m.op(x, y), x) == m.op(x, m.op(y, x)); });
            break;
        case IdentityKind::Bruck: {
            auto e = m.identity();
            if (!e) fail("NotApplicable", "Bruck needs a two-sided identity");
            scan_triples([&](int x, int y, int z) {
                return m.op(m.op(x, m.op(y, x)), z) == m.op(x, m.op(y, m.op(x, z)));
            });
            // Inverse clause checked only over elements with unique two-sided
            // inverses; elements lacking one are reported as skipped.
            std::vector<std::optional<int>> inv(n);
            for (int x = 0; x < n; ++x) {
                inv[x] = unique_inverse(m, x, *e);
                if (!inv[x]) out.skipped.push_back(x);
            }
            for (int x = 0; x < n && out.holds; ++x)
                for (int y = 0; y < n; ++y) {
                    if (!inv[x] || !inv[y]) continue;
                    auto ixy = unique_inverse(m, m.op(x, y), *e);
                    if (!ixy) continue;
                    if (*ixy != m.op(*inv[x], *inv[y])) {
                        fail_with({x, y});
                        break;
                    }
                }
            break;
        }
        case IdentityKind::WIP: {
            auto e = m.identity();
            if (!e) fail("NotApplicable", "WIP needs a two-sided identity");
            scan_triples([&](int x, int y, int z) {
                return m.op(m.op(x, y), z) != *e || m.op(x, m.op(y, z)) == *e;
            });
            break;
        }
        case IdentityKind::Semialternative: {
            auto r = classify(m);
            if (!(r.latin && r.identity)) fail("NotALoop", "semialternative needs a loop");
            auto assoc = [&](int x, int y, int z) {
                return left_divide(m, m.op(x, m.op(y, z)), m.op(m.op(x, y), z));
            };
            scan_triples([&](int x, int y, int z) {
                auto a = assoc(x, y, z), b = assoc(y, z, x);
                return a && b && *a == *b;
            });
            break;
        }
    }
    return out;
}

std::vector<int> closure(const Magma& m, std::vector<int> seed) {
    std::set<int> s(seed.begin(), seed.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(m.op(a, b)).second) grew = true;
    }
    return {s.begin(), s.end()};
}

namespace {

bool subset_is_kind(const Magma& m, const std::vector<int>& subset, SubKind kind) {
    // closure first
    std::vector<char> in(m.size(), 0);
    for (int i : subset) in[i] = 1;
    for (int a : subset)
        for (int b : subset)
            if (!in[m.op(a, b)]) return false;
    Magma sub = m.restrict_to(subset, "sub");
    auto r = classify(sub);
    switch (kind) {
        case SubKind::subsemigroup: return r.associative;
        case SubKind::subgroup: return is_group(r);
        case SubKind::subloop: return r.latin && r.identity.has_value();
    }
    return false;
}

} // namespace

SubalgebraList enumerate_subalgebras(const Magma& m, SubKind kind, int max_count,
                                     bool require_exhaustive, int exhaustive_cap) {
    const int n = m.size();
    SubalgebraList out;
    if (n <= exhaustive_cap) {
        for (uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) subset.push_back(i);
            if (subset_is_kind(m, subset, kind)) {
                out.sets.push_back(subset);
                if (static_cast<int>(out.sets.size()) >= max_count) return out;
            }
        }
        return out;
    }
    if (require_exhaustive)
        fail("CapExceeded", "carrier size " + std::to_string(n) + " above exhaustive cap " +
                                std::to_string(exhaustive_cap));
    out.exhaustive = false;
    std::set<std::vector<int>> seen;
    auto try_seed = [&](std::vector<int> seed) {
        auto cl = closure(m, std::move(seed));
        if (static_cast<int>(out.sets.size()) >= max_count) return;
        if (!seen.insert(cl).second) return;
        if (subset_is_kind(m, cl, kind)) out.sets.push_back(cl);
    };
    for (int a = 0; a < n; ++a) try_seed({a});
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) try_seed({a, b});
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

LoopInvariants local_invariants(const Magma& m) {
    auto r = classify(m);
    if (!(r.latin && r.identity)) fail("NotALoop", m.name() + " is not a loop");
    const int n = m.size();
    const int e = *r.identity;

    auto assoc_vanishes = [&](int a, int b, int c) {
        return m.op(m.op(a, b), c) == m.op(a, m.op(b, c));
    };

    LoopInvariants inv;
    for (int a = 0; a < n; ++a) {
        bool l = true, mid = true, rr = true;
        for (int x = 0; x < n && (l || mid || rr); ++x)
            for (int y = 0; y < n; ++y) {
                if (l && !assoc_vanishes(a, x, y)) l = false;
                if (mid && !assoc_vanishes(x, a, y)) mid = false;
                if (rr && !assoc_vanishes(x, y, a)) rr = false;
                if (!l && !mid && !rr) break;
            }
        if (l) inv.left_nucleus.push_back(a);
        if (mid) inv.middle_nucleus.push_back(a);
        if (rr) inv.right_nucleus.push_back(a);
        if (l && mid && rr) inv.nucleus.push_back(a);
        bool comm = true;
        for (int y = 0; y < n; ++y)
            if (m.op(a, y) != m.op(y, a)) {
                comm = false;
                break;
            }
        if (comm) inv.moufang_center.push_back(a);
        if (l && mid && rr && comm) inv.center.push_back(a);
    }

    // Commutator (x,y): xy = (yx)(x,y);  associator (x,y,z): (xy)z = (x(yz))(x,y,z).
    std::set<int> comms{e}, assocs{e};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto w = left_divide(m, m.op(y, x), m.op(x, y));
            if (w) comms.insert(*w);
            for (int z = 0; z < n; ++z) {
                auto a = left_divide(m, m.op(x, m.op(y, z)), m.op(m.op(x, y), z));
                if (a) assocs.insert(*a);
            }
        }
    inv.commutator_subloop = closure(m, {comms.begin(), comms.end()});
    inv.associator_subloop = closure(m, {assocs.begin(), assocs.end()});
    return inv;
}

std::optional<int> element_order(const Magma& m, int x) {
    auto e = m.identity();
    if (!e) fail("NoIdentity", m.name() + " has no two-sided identity");
    int acc = x;
    const int bound = 2 * m.size() + 1; // power sequence cycles within n steps
    for (int k = 1; k <= bound; ++k) {
        if (acc == *e) return k;
        acc = m.op(acc, x);
    }
    return std::nullopt;
}

std::vector<int> normalizer(const Magma& m, int a) {
    std::vector<int> out;
    for (int x = 0; x < m.size(); ++x)
        if (m.op(x, a) == m.op(a, x)) out.push_back(x);
    return out;
}

Magma quotient_group(const Magma& g, const std::vector<int>& normal_subgroup) {
    auto r = classify(g);
    if (!is_group(r)) fail("NotAGroup", g.name() + " is not a group");
    std::set<int> h(normal_subgroup.begin(), normal_subgroup.end());
    if (!h.count(*r.identity)) fail("NotNormal", "subgroup must contain the identity");
    // normality: gH = Hg for every g
    for (int x = 0; x < g.size(); ++x) {
        std::set<int> xh, hx;
        for (int e : h) {
            xh.insert(g.op(x, e));
            hx.insert(g.op(e, x));
        }
        if (xh != hx) fail("NotNormal", "subgroup is not normal in " + g.name());
    }
    // cosets, keyed by their sorted member sets
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> cosets;
    std::vector<int> coset_of(g.size());
    for (int x = 0; x < g.size(); ++x) {
        std::set<int> xh;
        for (int e : h) xh.insert(g.op(x, e));
        std::vector<int> key(xh.begin(), xh.end());
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, static_cast<int>(cosets.size())).first;
            cosets.push_back(key);
        }
        coset_of[x] = it->second;
    }
    std::vector<std::string> labels;
    for (const auto& c : cosets) labels.push_back(g.label(c.front()) + "H");
    const int q = static_cast<int>(cosets.size());
    std::vector<int> table(static_cast<size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[static_cast<size_t>(i) * q + j] =
                coset_of[g.op(cosets[i].front(), cosets[j].front())];
    return Magma::make(g.name() + "/H", std::move(labels), std::move(table));
}

Magma magma_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("table"))
        fail("SchemaError", "magma document needs 'elements' and 'table'");
    std::string name = doc.value("name", "magma");
    if (!doc["elements"].is_array() || !doc["table"].is_array())
        fail("SchemaError", "'elements' and 'table' must be arrays");
    std::vector<std::string> labels;
    for (const auto& l : doc["elements"]) {
        if (!l.is_string()) fail("SchemaError", "labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    const size_t n = labels.size();
    if (doc["table"].size() != n) fail("SchemaError", "table must have one row per element");
    std::vector<int> table;
    table.reserve(n * n);
    for (const auto& row : doc["table"]) {
        if (!row.is_array() || row.size() != n) fail("SchemaError", "ragged table row");
        for (const auto& v : row) {
            if (!v.is_number_integer()) fail("SchemaError", "table entries must be integers");
            table.push_back(v.get<int>());
        }
    }
    return Magma::make(std::move(name), std::move(labels), std::move(table));
}

nlohmann::json magma_to_json(const Magma& m) {
    nlohmann::json doc;
    doc["name"] = m.name();
    doc["elements"] = m.labels();
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m.op(i, j));
        rows.push_back(row);
    }
    doc["table"] = rows;
    return doc;
}

nlohmann::json classification_to_json(const Magma& m, const ClassificationReport& r) {
    nlohmann::json j;
    j["name"] = m.name();
    j["kind"] = to_string(r.kind);
    j["associative"] = r.associative;
    j["commutative"] = r.commutative;
    j["idempotent"] = r.idempotent;
    j["latin"] = r.latin;
    if (r.identity) j["identity"] = m.label(*r.identity);
    auto lab = [&](const auto& w) {
        nlohmann::json a = nlohmann::json::array();
        for (int i : w) a.push_back(m.label(i));
        return a;
    };
    if (r.assoc_witness) j["witnesses"]["associativity"] = lab(*r.assoc_witness);
    if (r.comm_witness) j["witnesses"]["commutativity"] = lab(*r.comm_witness);
    if (r.idem_witness) j["witnesses"]["idempotency"] = m.label(*r.idem_witness);
    if (r.inverse_witness) j["witnesses"]["inverse"] = m.label(*r.inverse_witness);
    return j;
}

} // namespace bialg
