#include "multigraph.hpp"

#include <algorithm>
#include <array>

#include "errors.hpp"

namespace swapsmith {

namespace {

std::uint64_t fnv1a64(std::uint64_t h, std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xffULL;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

void LoopyMultigraph::check_vertex(Vertex v) const {
    if (v >= n_)
        throw usage_error("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
}

Multiplicity LoopyMultigraph::multiplicity(VertexPair p) const {
    auto it = std::lower_bound(mult_.begin(), mult_.end(), p,
                               [](const Entry& e, const VertexPair& q) { return e.first < q; });
    if (it != mult_.end() && it->first == p)
        return it->second;
    return 0;
}

void LoopyMultigraph::add_edges(VertexPair p, std::int64_t delta) {
    check_vertex(p.a);
    check_vertex(p.b);
    if (delta == 0)
        return;
    auto it = std::lower_bound(mult_.begin(), mult_.end(), p,
                               [](const Entry& e, const VertexPair& q) { return e.first < q; });
    std::int64_t current = (it != mult_.end() && it->first == p) ? it->second : 0;
    std::int64_t next = current + delta;
    if (next < 0)
        throw internal_error("multiplicity of a pair would drop below zero");
    if (current == 0) {
        mult_.insert(it, Entry{p, static_cast<Multiplicity>(next)});
    } else if (next == 0) {
        mult_.erase(it);
    } else {
        it->second = static_cast<Multiplicity>(next);
    }
}

std::uint64_t LoopyMultigraph::degree(Vertex v) const {
    check_vertex(v);
    std::uint64_t d = 0;
    for (const auto& [p, m] : mult_) {
        if (p.is_loop()) {
            if (p.a == v)
                d += 2ULL * m;
        } else if (p.contains(v)) {
            d += m;
        }
    }
    return d;
}

std::vector<std::uint64_t> LoopyMultigraph::degree_vector() const {
    std::vector<std::uint64_t> d(n_, 0);
    for (const auto& [p, m] : mult_) {
        if (p.is_loop()) {
            d[p.a] += 2ULL * m;
        } else {
            d[p.a] += m;
            d[p.b] += m;
        }
    }
    return d;
}

std::vector<std::uint64_t> LoopyMultigraph::degree_sequence() const {
    auto d = degree_vector();
    std::sort(d.begin(), d.end(), std::greater<std::uint64_t>());
    return d;
}

std::uint64_t LoopyMultigraph::edge_count() const {
    std::uint64_t c = 0;
    for (const auto& e : mult_)
        c += e.second;
    return c;
}

std::uint64_t LoopyMultigraph::loop_count() const {
    std::uint64_t c = 0;
    for (const auto& e : mult_)
        if (e.first.is_loop())
            c += e.second;
    return c;
}

bool LoopyMultigraph::has_loops() const {
    return std::any_of(mult_.begin(), mult_.end(), [](const Entry& e) { return e.first.is_loop(); });
}

bool LoopyMultigraph::is_simple() const {
    return std::all_of(mult_.begin(), mult_.end(),
                       [](const Entry& e) { return !e.first.is_loop() && e.second == 1; });
}

std::optional<EdgeClass> LoopyMultigraph::classify(VertexPair p) const {
    check_vertex(p.a);
    check_vertex(p.b);
    Multiplicity m = multiplicity(p);
    if (m == 0)
        return std::nullopt;
    if (p.is_loop())
        return EdgeClass::Loop;
    return m > 1 ? EdgeClass::MultipleNonLoop : EdgeClass::Simple;
}

bool LoopyMultigraph::is_admissible(VertexPair e, VertexPair e2) const {
    auto ce = classify(e);
    auto ce2 = classify(e2);
    if (!ce || !ce2)
        throw domain_error("is_admissible: edge absent from graph");
    if (e.incident_to(e2))
        return false;
    return *ce != EdgeClass::Simple || *ce2 != EdgeClass::Simple;
}

bool LoopyMultigraph::can_apply(const Swap& s) const {
    VertexPair r1 = s.removed_first();
    VertexPair r2 = s.removed_second();
    if (s.v1 >= n_ || s.v2 >= n_ || s.v3 >= n_ || s.v4 >= n_)
        return false;
    if (r1 == r2)
        return multiplicity(r1) >= 2;
    return multiplicity(r1) >= 1 && multiplicity(r2) >= 1;
}

void LoopyMultigraph::apply_swap(const Swap& s) {
    check_vertex(s.v1);
    check_vertex(s.v2);
    check_vertex(s.v3);
    check_vertex(s.v4);
    if (!can_apply(s))
        throw domain_error("apply_swap: missing edge copy");
    add_edges(s.removed_first(), -1);
    add_edges(s.removed_second(), -1);
    add_edges(s.added_first(), +1);
    add_edges(s.added_second(), +1);
}

LoopyMultigraph LoopyMultigraph::without_loops() const {
    LoopyMultigraph g(n_);
    for (const auto& e : mult_)
        if (!e.first.is_loop())
            g.mult_.push_back(e);
    return g;
}

std::uint64_t LoopyMultigraph::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a64(h, n_);
    for (const auto& [p, m] : mult_) {
        h = fnv1a64(h, p.a);
        h = fnv1a64(h, p.b);
        h = fnv1a64(h, m);
    }
    return h;
}

std::string LoopyMultigraph::fingerprint_hex() const {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fingerprint();
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

LoopyMultigraph apply_swap(LoopyMultigraph g, const Swap& s) {
    g.apply_swap(s);
    return g;
}

SwapTrace SwapTrace::starting_at(const LoopyMultigraph& g) {
    SwapTrace t;
    t.n = g.vertex_count();
    t.fingerprint = g.fingerprint();
    return t;
}

void SwapTrace::record(const LoopyMultigraph& g_before, const Swap& s) {
    bool adm = false;
    VertexPair r1 = s.removed_first();
    VertexPair r2 = s.removed_second();
    if (g_before.multiplicity(r1) >= 1 && g_before.multiplicity(r2) >= 1)
        adm = g_before.is_admissible(r1, r2);
    steps.push_back(TraceStep{s, adm});
}

LoopyMultigraph replay(const SwapTrace& trace, const LoopyMultigraph& g) {
    bool ignored = false;
    return replay_checked(trace, g, ignored);
}

LoopyMultigraph replay_checked(const SwapTrace& trace, const LoopyMultigraph& g, bool& all_admissible) {
    if (g.fingerprint() != trace.fingerprint)
        throw ReplayError("replay: fingerprint mismatch", 0);
    LoopyMultigraph cur = g;
    all_admissible = true;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const Swap& s = trace.steps[i].swap;
        if (!cur.can_apply(s))
            throw ReplayError("replay: illegal swap at index " + std::to_string(i), i);
        VertexPair r1 = s.removed_first();
        VertexPair r2 = s.removed_second();
        if (!cur.is_admissible(r1, r2))
            all_admissible = false;
        cur.apply_swap(s);
    }
    return cur;
}

} // namespace swapsmith
