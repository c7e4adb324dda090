#include "hcp3/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <span>
#include <utility>

namespace hcp3 {

std::string to_string(verdict v) {
    switch (v) {
    case verdict::holds: return "holds";
    case verdict::fails: return "fails";
    default: return "inconclusive";
    }
}

namespace {

struct budget_exhausted {};

// Backtracking Hamiltonian cycle enumerator, undirected mode.
// Starts at vertex 0; with `canonical` set, emits each cycle once
// (second vertex smaller than last). Pruning: an unvisited vertex must
// keep at least two usable edges (to unvisited vertices, to the current
// path end, or to vertex 0 for the closing edge); a vertex adjacent to the
// path end that is down to exactly two usable edges must be visited next;
// all unvisited vertices must stay reachable from the path end.
class undirected_searcher {
public:
    undirected_searcher(const graph& g, long long limit, bool canonical)
        : g_(g), n_(g.vertex_count()), limit_(limit), canonical_(canonical) {}

    // Returns true when the emit callback asked to stop.
    template <class Emit>
    bool run(Emit&& emit) {
        if (n_ < 3) return false;
        visited_.assign(n_, 0);
        ud_.assign(n_, 0);
        adj0_.assign(n_, 0);
        mark_.assign(n_, 0);
        stamp_ = 0;
        queue_.resize(n_);
        path_.clear();
        for (int v = 0; v < n_; ++v) ud_[v] = g_.degree(v);
        for (int w : g_.neighbors(0)) adj0_[w] = 1;
        visit(0);
        return recurse(emit);
    }

    long long nodes() const { return nodes_; }

private:
    void visit(int v) {
        visited_[v] = 1;
        path_.push_back(v);
        for (int w : g_.neighbors(v)) --ud_[w];
    }
    void unvisit(int v) {
        visited_[v] = 0;
        path_.pop_back();
        for (int w : g_.neighbors(v)) ++ud_[w];
    }

    template <class Emit>
    bool recurse(Emit& emit) {
        if (++nodes_ > limit_) throw budget_exhausted{};
        const int cur = path_.back();
        const int depth = static_cast<int>(path_.size());
        if (depth == n_) {
            if (adj0_[cur] &&
                (!canonical_ || path_[1] < path_[n_ - 1]))
                return emit(path_);
            return false;
        }

        // Usable-edge accounting and forced-move detection. Skipped at the
        // root: there the edge to vertex 0 can serve as either the entry or
        // the closing edge, so nothing is forced yet.
        int forced = -1;
        if (cur != 0) {
            ++stamp_;
            for (int w : g_.neighbors(cur))
                if (!visited_[w]) mark_[w] = stamp_;
            for (int x = 0; x < n_; ++x) {
                if (visited_[x]) continue;
                int avail = ud_[x] + adj0_[x] + (mark_[x] == stamp_ ? 1 : 0);
                if (avail < 2) return false;
                if (avail == 2 && mark_[x] == stamp_) {
                    if (forced >= 0) return false;  // two forced successors
                    forced = x;
                }
            }
        }

        // Connectivity: the remaining path walks through unvisited
        // vertices only, so all of them must be reachable from cur.
        if (depth < n_ - 1 && !unvisited_connected(cur, depth)) return false;

        if (forced >= 0) {
            visit(forced);
            bool stop = recurse(emit);
            unvisit(forced);
            return stop;
        }
        for (int w : g_.neighbors(cur)) {
            if (visited_[w]) continue;
            visit(w);
            bool stop = recurse(emit);
            unvisit(w);
            if (stop) return true;
        }
        return false;
    }

    bool unvisited_connected(int cur, int depth) {
        ++stamp_;
        int head = 0, tail = 0, target = n_ - depth;
        for (int w : g_.neighbors(cur))
            if (!visited_[w] && mark_[w] != stamp_) {
                mark_[w] = stamp_;
                queue_[tail++] = w;
            }
        int reached = tail;
        while (head < tail) {
            int v = queue_[head++];
            for (int w : g_.neighbors(v))
                if (!visited_[w] && mark_[w] != stamp_) {
                    mark_[w] = stamp_;
                    queue_[tail++] = w;
                    ++reached;
                }
        }
        return reached == target;
    }

    const graph& g_;
    int n_;
    long long limit_;
    bool canonical_;
    long long nodes_ = 0;
    int stamp_ = 0;
    std::vector<char> visited_;
    std::vector<int> ud_, adj0_, mark_, queue_, path_;
};

// Directed counterpart; cycles are counted up to rotation (fixed start 0).
class directed_searcher {
public:
    directed_searcher(const graph& g, long long limit)
        : g_(g), n_(g.vertex_count()), limit_(limit) {}

    template <class Emit>
    bool run(Emit&& emit) {
        if (n_ < 2) return false;
        visited_.assign(n_, 0);
        ud_in_.assign(n_, 0);
        ud_out_.assign(n_, 0);
        arc_to_0_.assign(n_, 0);
        mark_.assign(n_, 0);
        stamp_ = 0;
        queue_.resize(n_);
        path_.clear();
        for (int v = 0; v < n_; ++v) {
            ud_in_[v] = g_.in_degree(v);
            ud_out_[v] = g_.out_degree(v);
        }
        for (int u : g_.in_neighbors(0)) arc_to_0_[u] = 1;
        visit(0);
        return recurse(emit);
    }

    long long nodes() const { return nodes_; }

private:
    void visit(int v) {
        visited_[v] = 1;
        path_.push_back(v);
        for (int w : g_.out_neighbors(v)) --ud_in_[w];
        for (int u : g_.in_neighbors(v)) --ud_out_[u];
    }
    void unvisit(int v) {
        visited_[v] = 0;
        path_.pop_back();
        for (int w : g_.out_neighbors(v)) ++ud_in_[w];
        for (int u : g_.in_neighbors(v)) ++ud_out_[u];
    }

    template <class Emit>
    bool recurse(Emit& emit) {
        if (++nodes_ > limit_) throw budget_exhausted{};
        const int cur = path_.back();
        const int depth = static_cast<int>(path_.size());
        if (depth == n_) {
            if (g_.has_edge(cur, 0)) return emit(path_);
            return false;
        }

        int forced = -1;
        ++stamp_;
        for (int w : g_.out_neighbors(cur))
            if (!visited_[w]) mark_[w] = stamp_;
        for (int x = 0; x < n_; ++x) {
            if (visited_[x]) continue;
            int in_avail = ud_in_[x] + (mark_[x] == stamp_ ? 1 : 0);
            int out_avail = ud_out_[x] + arc_to_0_[x];
            if (in_avail < 1 || out_avail < 1) return false;
            if (in_avail == 1 && mark_[x] == stamp_) {
                if (forced >= 0) return false;
                forced = x;
            }
        }
        if (depth < n_ - 1 && !unvisited_reach(cur)) return false;

        if (forced >= 0) {
            visit(forced);
            bool stop = recurse(emit);
            unvisit(forced);
            return stop;
        }
        for (int w : g_.out_neighbors(cur)) {
            if (visited_[w]) continue;
            visit(w);
            bool stop = recurse(emit);
            unvisit(w);
            if (stop) return true;
        }
        return false;
    }

    // Forward reachability from cur over unvisited vertices, and backward
    // reachability to vertex 0 (the remaining path must end there).
    bool unvisited_reach(int cur) {
        const int target = n_ - static_cast<int>(path_.size());
        for (int pass = 0; pass < 2; ++pass) {
            ++stamp_;
            int head = 0, tail = 0, reached = 0;
            auto expand = [&](int v) {
                auto nbrs = pass == 0 ? g_.out_neighbors(v) : g_.in_neighbors(v);
                for (int w : nbrs)
                    if (!visited_[w] && mark_[w] != stamp_) {
                        mark_[w] = stamp_;
                        queue_[tail++] = w;
                        ++reached;
                    }
            };
            expand(pass == 0 ? cur : 0);
            while (head < tail) expand(queue_[head++]);
            if (reached != target) return false;
        }
        return true;
    }

    const graph& g_;
    int n_;
    long long limit_;
    long long nodes_ = 0;
    int stamp_ = 0;
    std::vector<char> visited_;
    std::vector<int> ud_in_, ud_out_, arc_to_0_, mark_, queue_, path_;
};

// Existence decision for undirected graphs, run as a conflict-driven search
// over edge variables: each edge is undecided, committed to the cycle, or
// excluded. Unit reasoning comes from three sources. Degree rules: a vertex
// with two committed edges excludes its remaining edges, and a vertex with
// only two non-excluded edges commits them. Segment rules: committed edges
// form open segments tracked by endpoint links; an edge joining two ends of
// the same segment closes a short cycle, so the chord between the ends of a
// merged segment is excluded proactively. Cut rules, run before every
// decision: the non-excluded graph must stay 2-connected (a Hamiltonian
// cycle is a spanning 2-connected subgraph), and both edges of any
// 2-edge-cut of it lie on the cycle. Every propagation carries a reason, so
// a contradiction is analysed to a first-unique-implication-point clause,
// the search backjumps, and the clause is kept for unit propagation. The
// learning is what lets the solver decide the converted instances, whose
// gadget structure defeats plain backtracking at a few hundred vertices:
// each refuted gadget configuration becomes a clause instead of being
// rediscovered exponentially often. Decisions extend the most recently
// grown segment when possible (conversion outputs reward finishing one
// region before touching the next), falling back to a conflict-activity
// heap; Luby restarts with phase saving handle the satisfiable side.
class edge_existence_solver {
    enum : char { und = 0, in = 1, out = 2 };

    // Literal encoding: 2e asserts edge e lies on the cycle, 2e+1 excludes
    // it. A literal's clause form is "false under the current assignment"
    // exactly when the edge is decided the opposite way.
    static int lit_in(int e) { return 2 * e; }
    static int lit_out(int e) { return 2 * e + 1; }

    struct clause {
        int lbd = 0;
        std::vector<int> lits;
    };

    // Why an edge got its value. Counting-rule reasons are reconstructed
    // on demand (filtered by trail position, so later assignments at the
    // same vertex never leak in); segment reasons are rebuilt by walking
    // the committed path between the chord's endpoints; cut forcings are
    // cached as clauses because the cut boundary is not recoverable later.
    struct reason {
        enum kind : char { decision, axiom, rule1, rule2, segment, dbclause };
        kind k = decision;
        int a = 0, b = 0;  // rule1/rule2: the vertex whose count fired
        clause* c = nullptr;
    };

public:
    edge_existence_solver(const graph& g, long long limit)
        : g_(g), n_(g.vertex_count()), limit_(limit) {}

    ~edge_existence_solver() {
        for (clause* c : learnts_) delete c;
    }

    search_result solve() {
        search_result r;
        if (n_ < 3) {
            r.outcome = search_outcome::exhausted_none;
            return r;
        }
        const auto& es = g_.edges();
        m_ = static_cast<int>(es.size());
        state_.assign(m_, und);
        level_.assign(m_, 0);
        pos_.assign(m_, 0);
        reason_.assign(m_, reason{});
        merged_.assign(m_, 0);
        polarity_.assign(m_, in);
        seen_.assign(m_, 0);
        act_.assign(m_, 0.0);
        hpos_.assign(m_, -1);
        watches_.assign(2 * m_, {});
        cnt_in_.assign(n_, 0);
        cnt_und_.assign(n_, 0);
        other_end_.resize(n_);
        seg_len_.assign(n_, 0);
        inc_off_.assign(n_ + 2, 0);
        for (int e = 0; e < m_; ++e) {
            ++inc_off_[es[e].u + 2];
            ++inc_off_[es[e].v + 2];
        }
        for (int v = 2; v < n_ + 2; ++v) inc_off_[v] += inc_off_[v - 1];
        inc_flat_.resize(2 * m_);
        for (int e = 0; e < m_; ++e) {
            inc_flat_[inc_off_[es[e].u + 1]++] = e;
            inc_flat_[inc_off_[es[e].v + 1]++] = e;
        }
        for (int v = 0; v < n_; ++v) {
            cnt_und_[v] = g_.degree(v);
            other_end_[v] = v;
        }
        label_.assign(m_, 0);
        tn_.assign(n_, tnode{});
        edge_key_.resize(m_);
        for (int e = 0; e < m_; ++e) edge_key_[e] = splitmix64(e + 1);
        theory_gap0_ = 16 + m_ / 64;
        theory_gap_ = theory_gap0_;
        bfs_mark_.assign(n_, 0);
        bfs_queue_.resize(n_);
        for (int e = 0; e < m_; ++e) heap_insert(e);
        try {
            bool ok = true;
            for (int v = 0; v < n_ && ok; ++v)
                ok = g_.degree(v) >= 2 && check_vertex(v);
            bool found = ok && run();
            r.outcome = found ? search_outcome::found
                              : search_outcome::exhausted_none;
            if (found) r.witness = extract_cycle();
        } catch (const budget_exhausted&) {
            r.outcome = search_outcome::budget_exceeded;
        }
        r.nodes_expanded = nodes_;
        return r;
    }

private:
    int other(int e, int v) const {
        return g_.edges()[e].u ^ g_.edges()[e].v ^ v;
    }

    std::span<const int> inc(int v) const {
        return {inc_flat_.data() + inc_off_[v],
                inc_flat_.data() + inc_off_[v + 1]};
    }

    int value(int l) const {  // 1 true, -1 false, 0 unassigned
        char s = state_[l >> 1];
        if (s == und) return 0;
        return ((l & 1) == 0) == (s == in) ? 1 : -1;
    }

    int level() const { return static_cast<int>(trail_lim_.size()); }

    bool run() {
        for (;;) {
            bool conflict = !propagate();
            if (!conflict && !closed_) {
                int t = theory();
                if (t > 0) continue;  // cut forcings enqueued; propagate them
                conflict = t < 0;
            }
            if (conflict) {
                if (!handle_conflict()) return false;
                continue;
            }
            if (closed_) return true;
            if (conflicts_ >= restart_at_) {
                if (static_cast<double>(trail_.size()) > 1.4 * trail_ema_) {
                    restart_at_ = conflicts_ + 64;  // deep and progressing
                } else {
                    restart_at_ = conflicts_ + 128 * luby(restart_seq_++);
                    backtrack(0);
                }
                continue;
            }
            if (static_cast<long long>(learnts_.size()) >= max_learnts_)
                reduce_db();
            int l = decide();
            if (l < 0) return closed_;
            ++decisions_;
            if (++nodes_ > limit_) throw budget_exhausted{};
            trail_lim_.push_back(static_cast<int>(trail_.size()));
            if (!enqueue(l, reason{}) && !handle_conflict()) return false;
        }
    }

    // ----- assignment and propagation -------------------------------------

    bool enqueue(int l, const reason& r) {
        const int e = l >> 1;
        const char want = (l & 1) ? out : in;
        if (state_[e] != und) {
            if (state_[e] == want) return true;
            conflict_.clear();
            conflict_.push_back(l);
            expand_reason(r, e, INT_MAX, conflict_);
            return false;
        }
        state_[e] = want;
        level_[e] = level();
        pos_[e] = static_cast<int>(trail_.size());
        reason_[e] = r;
        trail_.push_back(e);
        const int u = g_.edges()[e].u, v = g_.edges()[e].v;
        --cnt_und_[u];
        --cnt_und_[v];
        if (want == out) {
            ++out_count_;
            for (int x : {u, v})
                if (cnt_in_[x] + cnt_und_[x] < 2) {
                    conflict_.clear();
                    for (int g : inc(x))
                        if (state_[g] == out) conflict_.push_back(lit_in(g));
                    return false;
                }
            return true;
        }
        if (++cnt_in_[u] == 2) ++interior_n_;
        if (++cnt_in_[v] == 2) ++interior_n_;
        ++in_count_;
        for (int x : {u, v})
            if (cnt_in_[x] > 2) {
                conflict_.clear();
                int cnt = 0;
                for (int g : inc(x))
                    if (state_[g] == in) {
                        conflict_.push_back(lit_out(g));
                        if (++cnt == 3) break;
                    }
                return false;
            }
        const int a = other_end_[u], b = other_end_[v];
        if (a == v) {  // e joins the two ends of one open segment
            if (in_count_ == n_) {
                closed_ = true;
                return true;
            }
            conflict_.clear();
            conflict_.push_back(lit_out(e));
            segment_reason(e, INT_MAX, conflict_);
            return false;  // premature sub-cycle
        }
        merged_[e] = 1;
        oe_trail_.push_back({a, other_end_[a]});
        oe_trail_.push_back({b, other_end_[b]});
        other_end_[a] = b;
        other_end_[b] = a;
        const int len = seg_len_[a] + seg_len_[b] + 1;
        len_trail_.push_back({a, seg_len_[a]});
        len_trail_.push_back({b, seg_len_[b]});
        seg_len_[a] = seg_len_[b] = len;
        // The chord between the merged segment's ends would close a short
        // cycle; exclude it now rather than on use.
        if (len + 1 < n_) {
            for (int ce : inc(a))
                if (other(ce, a) == b && state_[ce] == und)
                    if (!enqueue(lit_out(ce), reason{reason::segment}))
                        return false;
        }
        return true;
    }

    bool check_vertex(int v) {
        if (closed_ || cnt_und_[v] == 0) return true;
        if (cnt_in_[v] == 2) {
            for (int g : inc(v))
                if (state_[g] == und &&
                    !enqueue(lit_out(g), reason{reason::rule1, v}))
                    return false;
        } else if (cnt_in_[v] + cnt_und_[v] == 2) {
            for (int g : inc(v)) {
                if (state_[g] == und &&
                    !enqueue(lit_in(g), reason{reason::rule2, v}))
                    return false;
                if (closed_) return true;
            }
        }
        return true;
    }

    bool propagate() {
        while (qhead_ < static_cast<int>(trail_.size())) {
            if (closed_) return true;
            const int e = trail_[qhead_++];
            if (!check_vertex(g_.edges()[e].u) || !check_vertex(g_.edges()[e].v))
                return false;
            if (closed_) return true;
            const int fl = state_[e] == in ? lit_out(e) : lit_in(e);
            if (!prop_watches(fl)) return false;
        }
        return true;
    }

    bool prop_watches(int fl) {
        auto& ws = watches_[fl];
        size_t i = 0, j = 0;
        bool ok = true;
        while (i < ws.size()) {
            clause* c = ws[i++];
            auto& L = c->lits;
            if (L[0] == fl) std::swap(L[0], L[1]);
            if (value(L[0]) > 0) {
                ws[j++] = c;
                continue;
            }
            bool moved = false;
            for (size_t k = 2; k < L.size(); ++k)
                if (value(L[k]) >= 0) {
                    std::swap(L[1], L[k]);
                    watches_[L[1]].push_back(c);
                    moved = true;
                    break;
                }
            if (moved) continue;
            ws[j++] = c;
            if (value(L[0]) < 0) {
                conflict_.assign(L.begin(), L.end());
                ok = false;
            } else if (!enqueue(L[0], reason{reason::dbclause, 0, 0, c})) {
                ok = false;  // structural conflict inside the assignment
            }
            if (!ok) {
                while (i < ws.size()) ws[j++] = ws[i++];
                break;
            }
        }
        ws.resize(j);
        return ok;
    }

    void backtrack(int lvl) {
        if (level() <= lvl) return;
        const int target = trail_lim_[lvl];
        while (static_cast<int>(trail_.size()) > target) {
            const int e = trail_.back();
            trail_.pop_back();
            const int u = g_.edges()[e].u, v = g_.edges()[e].v;
            if (state_[e] == out) {
                --out_count_;
            } else {
                if (cnt_in_[u]-- == 2) --interior_n_;
                if (cnt_in_[v]-- == 2) --interior_n_;
                --in_count_;
                if (merged_[e]) {
                    merged_[e] = 0;
                    for (int t = 0; t < 2; ++t) {
                        auto [x, old] = len_trail_.back();
                        len_trail_.pop_back();
                        seg_len_[x] = old;
                        auto [y, oe] = oe_trail_.back();
                        oe_trail_.pop_back();
                        other_end_[y] = oe;
                    }
                }
            }
            ++cnt_und_[u];
            ++cnt_und_[v];
            polarity_[e] = state_[e];
            state_[e] = und;
            reason_[e] = reason{};
            heap_insert(e);
        }
        trail_lim_.resize(lvl);
        qhead_ = static_cast<int>(trail_.size());
        closed_ = false;
        focus_ = -1;
        if (theory_out_ > out_count_) theory_out_ = out_count_;
    }

    // ----- conflict analysis ----------------------------------------------

    void expand_reason(const reason& r, int implied, int plimit,
                       std::vector<int>& outv) const {
        switch (r.k) {
        case reason::rule1: {
            int cnt = 0;
            for (int g : inc(r.a))
                if (g != implied && state_[g] == in && pos_[g] < plimit) {
                    outv.push_back(lit_out(g));
                    if (++cnt == 2) break;
                }
            break;
        }
        case reason::rule2:
            for (int g : inc(r.a))
                if (g != implied && state_[g] == out && pos_[g] < plimit)
                    outv.push_back(lit_in(g));
            break;
        case reason::segment:
            segment_reason(implied, plimit, outv);
            break;
        case reason::dbclause:
            for (int q : r.c->lits)
                if ((q >> 1) != implied) outv.push_back(q);
            break;
        default:
            break;  // decisions and axioms have no antecedents
        }
    }

    // The committed path between the endpoints of edge c, as exclusion
    // literals. Only edges assigned before plimit are followed, which
    // reconstructs the segment exactly as it was when c's consequence
    // fired even if the segment has grown since.
    void segment_reason(int c, int plimit, std::vector<int>& outv) const {
        const int b = g_.edges()[c].v;
        int prev = -1, cur = g_.edges()[c].u;
        for (int steps = 0; cur != b && steps <= n_; ++steps) {
            int next = -1;
            for (int g : inc(cur)) {
                if (g == c || state_[g] != in || pos_[g] >= plimit) continue;
                const int w = other(g, cur);
                if (w == prev) continue;
                outv.push_back(lit_out(g));
                next = w;
                break;
            }
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
    }

    bool handle_conflict() {
        for (;;) {
            ++conflicts_;
            theory_gap_ = theory_gap0_;
            trail_ema_ += 0.01 * (static_cast<double>(trail_.size()) - trail_ema_);
            if (++nodes_ > limit_) throw budget_exhausted{};
            // Cut-rule conflicts can live entirely below the current
            // decision level; analysis needs at least one literal at the
            // level it runs in, so drop to the deepest level involved.
            int clevel = 0;
            for (int q : conflict_) clevel = std::max(clevel, level_[q >> 1]);
            if (clevel == 0) return false;
            backtrack(clevel);
            analyze();
            backtrack(blevel_);
            var_inc_ *= (1.0 / 0.8);
            if (install_learnt()) return true;
        }
    }

    void analyze() {
        learnt_.clear();
        learnt_.push_back(0);  // asserting literal, filled below
        const int clevel = level();
        int counter = 0, idx = static_cast<int>(trail_.size()) - 1;
        int p_edge = -1;
        const std::vector<int>* cl = &conflict_;
        for (;;) {
            for (int q : *cl) {
                const int ve = q >> 1;
                if (ve == p_edge || seen_[ve] || level_[ve] == 0) continue;
                seen_[ve] = 1;
                bump(ve);
                if (level_[ve] == clevel) ++counter;
                else learnt_.push_back(q);
            }
            while (!seen_[trail_[idx]]) --idx;
            p_edge = trail_[idx--];
            seen_[p_edge] = 0;
            if (--counter == 0) break;
            tmp_.clear();
            expand_reason(reason_[p_edge], p_edge, pos_[p_edge], tmp_);
            cl = &tmp_;
        }
        learnt_[0] =
            (state_[p_edge] == in ? lit_in(p_edge) : lit_out(p_edge)) ^ 1;
        size_t maxi = 1;
        for (size_t i = 1; i < learnt_.size(); ++i) {
            seen_[learnt_[i] >> 1] = 0;
            if (level_[learnt_[i] >> 1] > level_[learnt_[maxi] >> 1]) maxi = i;
        }
        blevel_ = 0;
        if (learnt_.size() > 1) {
            std::swap(learnt_[1], learnt_[maxi]);
            blevel_ = level_[learnt_[1] >> 1];
        }
        lbd_ = 0;  // distinct decision levels in the clause
        ++lbd_stamp_;
        lbd_seen_.resize(clevel + 1, -1);
        for (int q : learnt_) {
            int lv = std::min(level_[q >> 1], clevel);
            if (lbd_seen_[lv] != lbd_stamp_) {
                lbd_seen_[lv] = lbd_stamp_;
                ++lbd_;
            }
        }
    }

    bool install_learnt() {
        if (learnt_.size() == 1)
            return enqueue(learnt_[0], reason{reason::axiom});
        clause* c = new clause{lbd_, learnt_};
        learnts_.push_back(c);
        watches_[c->lits[0]].push_back(c);
        watches_[c->lits[1]].push_back(c);
        return enqueue(c->lits[0], reason{reason::dbclause, 0, 0, c});
    }

    bool locked(const clause* c) const {
        const int e = c->lits[0] >> 1;
        return state_[e] != und && reason_[e].k == reason::dbclause &&
               reason_[e].c == c;
    }

    void detach(clause* c) {
        for (int t = 0; t < 2; ++t) {
            auto& ws = watches_[c->lits[t]];
            for (size_t i = 0; i < ws.size(); ++i)
                if (ws[i] == c) {
                    ws[i] = ws.back();
                    ws.pop_back();
                    break;
                }
        }
    }

    void reduce_db() {
        std::sort(learnts_.begin(), learnts_.end(),
                  [](const clause* a, const clause* b) {
                      if (a->lbd != b->lbd) return a->lbd < b->lbd;
                      return a->lits.size() < b->lits.size();
                  });
        const size_t keep = learnts_.size() / 2;
        std::vector<clause*> kept;
        kept.reserve(learnts_.size());
        for (size_t i = 0; i < learnts_.size(); ++i) {
            clause* c = learnts_[i];
            if (i < keep || c->lbd <= 2 || locked(c)) {
                kept.push_back(c);
            } else {
                detach(c);
                delete c;
            }
        }
        learnts_.swap(kept);
        max_learnts_ = max_learnts_ * 13 / 10;
    }

    // ----- decision heuristic ---------------------------------------------

    void bump(int e) {
        if ((act_[e] += var_inc_) > 1e100) {
            for (int g = 0; g < m_; ++g) act_[g] *= 1e-100;
            var_inc_ *= 1e-100;
        }
        if (hpos_[e] >= 0) heap_up(hpos_[e]);
    }

    void heap_up(int i) {
        const int e = heap_[i];
        while (i > 0) {
            const int p = (i - 1) / 2;
            if (act_[heap_[p]] >= act_[e]) break;
            heap_[i] = heap_[p];
            hpos_[heap_[i]] = i;
            i = p;
        }
        heap_[i] = e;
        hpos_[e] = i;
    }

    void heap_insert(int e) {
        if (hpos_[e] >= 0) return;
        hpos_[e] = static_cast<int>(heap_.size());
        heap_.push_back(e);
        heap_up(hpos_[e]);
    }

    int heap_pop() {
        if (heap_.empty()) return -1;
        const int e = heap_[0];
        hpos_[e] = -1;
        const int last = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            heap_[0] = last;
            const int sz = static_cast<int>(heap_.size());
            int i = 0;
            for (;;) {
                int c = 2 * i + 1;
                if (c >= sz) break;
                if (c + 1 < sz && act_[heap_[c + 1]] > act_[heap_[c]]) ++c;
                if (act_[heap_[c]] <= act_[last]) break;
                heap_[i] = heap_[c];
                hpos_[heap_[i]] = i;
                i = c;
            }
            heap_[i] = last;
            hpos_[last] = i;
        }
        return e;
    }

    int decide() {
        int e = -1, at = -1;
        if (focus_ >= 0 && cnt_in_[focus_] == 1 && cnt_und_[focus_] > 0) {
            double best = -1.0;
            for (int g : inc(focus_))
                if (state_[g] == und && act_[g] > best) {
                    best = act_[g];
                    e = g;
                }
            if (e >= 0) at = focus_;
        }
        while (e < 0) {
            e = heap_pop();
            if (e < 0) return -1;
            if (state_[e] != und) e = -1;
        }
        if (at < 0)
            at = cnt_in_[g_.edges()[e].u] == 1 ? g_.edges()[e].u : g_.edges()[e].v;
        // Keep extending towards the far end of the segment the commit
        // branch would grow; contradictions inside one region then surface
        // before the search wanders off to another.
        const int opp = other(e, at);
        const int far = cnt_in_[opp] == 1 ? other_end_[opp] : opp;
        focus_ = polarity_[e] == in ? far : at;
        return polarity_[e] == out ? lit_out(e) : lit_in(e);
    }

    // ----- cut rules --------------------------------------------------------

    struct dfs_frame {
        int v, parent, idx;
    };

    // Per-vertex DFS state for the cut rules, packed to one cache line
    // fraction; gen validates an entry instead of a per-run clear.
    struct tnode {
        std::uint64_t acc;
        int disc, low, pe, pv, gen;
        int pad_;
    };

    void articulation_conflict(int v, int w) {
        // Mark the live component of w in the graph minus v; the conflict
        // clause spans every excluded edge not internal to one side.
        ++bfs_stamp_;
        int head = 0, tail = 0;
        bfs_mark_[w] = bfs_stamp_;
        bfs_queue_[tail++] = w;
        while (head < tail) {
            const int x = bfs_queue_[head++];
            for (int e : inc(x)) {
                if (state_[e] == out) continue;
                const int y = other(e, x);
                if (y == v || bfs_mark_[y] == bfs_stamp_) continue;
                bfs_mark_[y] = bfs_stamp_;
                bfs_queue_[tail++] = y;
            }
        }
        conflict_.clear();
        const auto& es = g_.edges();
        auto side = [&](int x) {
            return x == v ? 2 : bfs_mark_[x] == bfs_stamp_ ? 1 : 0;
        };
        for (int g = 0; g < m_; ++g) {
            if (state_[g] != out) continue;
            const int su = side(es[g].u), sv = side(es[g].v);
            if (!(su == 1 && sv == 1) && !(su == 0 && sv == 0))
                conflict_.push_back(lit_in(g));
        }
    }

    // Walks from a committed vertex along its segment to either endpoint.
    int seg_endpoint(int x) const {
        int prev = -1;
        while (cnt_in_[x] == 2) {
            for (int g : inc(x)) {
                if (state_[g] != in) continue;
                const int w = other(g, x);
                if (w == prev) continue;
                prev = x;
                x = w;
                break;
            }
        }
        return x;
    }

    // Cut reasoning over the non-excluded graph, skipped while no edge has
    // been excluded since the last run (the live graph can only have lost
    // cuts, so nothing here would fire; this is a pruning step, never
    // needed for completeness). One DFS computes everything. The graph
    // must be connected and free of articulation vertices, a Hamiltonian
    // cycle being a spanning 2-connected subgraph; on failure the conflict
    // clause collects the excluded edges whose return would mend the
    // defect. On success, undecided edges lying on 2-edge-cuts are
    // committed (a Hamiltonian cycle crosses every cut at least twice, and
    // these cuts have nothing else to cross with), found via the
    // linear-time labelling: every non-tree edge gets a random 64-bit key,
    // every tree edge the XOR of the keys of the non-tree edges covering
    // it, and two edges form a 2-edge-cut exactly when their labels match.
    // Each candidate is verified by a real disconnection test, which also
    // yields the cut boundary for the reason, so a key collision costs a
    // missed inference, never a wrong one. Returns 1 when forcings were
    // enqueued, 0 when nothing new, -1 on conflict (conflict_ filled).
    int theory() {
        if (out_count_ < theory_out_ + theory_gap_) return 0;
        theory_out_ = out_count_;
        // The DFS runs on the contracted live graph: committed segments
        // collapse to single virtual edges between their endpoints (their
        // interior vertices carry no other live edge, so the contraction
        // preserves all cut structure), represented by the end edge on the
        // side the traversal approached from.
        const int cn = n_ - interior_n_;
        if (cn < 2 || closed_) return 0;
        ++tcur_;
        order_.clear();
        cedges_.clear();
        dfs_stack_.clear();
        int root = cnt_in_[0] == 2 ? seg_endpoint(0) : 0;
        int timer = 0, root_children = 0, root_child = -1;
        tn_[root] = {0, timer++, 0, -1, -1, tcur_, 0};
        dfs_stack_.push_back({root, -1, 0});
        while (!dfs_stack_.empty()) {
            auto& f = dfs_stack_.back();
            if (f.idx < static_cast<int>(inc(f.v).size())) {
                const int e = inc(f.v)[f.idx++];
                if (state_[e] == out || e == tn_[f.v].pe) continue;
                const int w =
                    state_[e] == in ? other_end_[f.v] : other(e, f.v);
                if (tn_[w].gen != tcur_) {
                    int rep = e;
                    if (state_[e] == in)  // identify the edge from w's side
                        for (int g : inc(w))
                            if (state_[g] == in) {
                                rep = g;
                                break;
                            }
                    tn_[w] = {0, timer, timer, rep, f.v, tcur_, 0};
                    ++timer;
                    order_.push_back(w);
                    cedges_.push_back(rep);
                    if (f.v == root) {
                        ++root_children;
                        root_child = w;
                    }
                    dfs_stack_.push_back({w, f.v, 0});
                } else if (tn_[w].disc < tn_[f.v].disc) {  // back edge
                    tn_[f.v].acc ^= edge_key_[e];
                    tn_[w].acc ^= edge_key_[e];
                    label_[e] = edge_key_[e];
                    cedges_.push_back(e);
                    if (tn_[w].disc < tn_[f.v].low) tn_[f.v].low = tn_[w].disc;
                }
            } else {
                const int v = f.v, parent = f.parent;
                dfs_stack_.pop_back();
                if (parent >= 0 && parent != root) {
                    if (tn_[v].low < tn_[parent].low) tn_[parent].low = tn_[v].low;
                    if (tn_[v].low >= tn_[parent].disc) {
                        articulation_conflict(parent, v);
                        return -1;
                    }
                } else if (parent == root && tn_[v].low < tn_[root].low) {
                    tn_[root].low = tn_[v].low;
                }
            }
        }
        if (timer != cn) {
            conflict_.clear();
            const auto& es = g_.edges();
            auto vis = [&](int x) {
                if (cnt_in_[x] == 2) x = seg_endpoint(x);
                return tn_[x].gen == tcur_;
            };
            for (int g = 0; g < m_; ++g)
                if (state_[g] == out && vis(es[g].u) != vis(es[g].v))
                    conflict_.push_back(lit_in(g));
            return -1;
        }
        if (root_children > 1) {
            articulation_conflict(root, root_child);
            return -1;
        }
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
            const int v = *it;
            const int e = tn_[v].pe;
            if (tn_[v].acc == 0) {  // bridge; unreachable past the cut checks
                bridge_conflict(v, e);
                return -1;
            }
            label_[e] = tn_[v].acc;
            tn_[tn_[v].pv].acc ^= tn_[v].acc;
        }
        // Group live edges by label through a stamped linear-probing table
        // (rebuilt per call; a hash map's allocation traffic dominates the
        // whole solver at this call rate). first/second hold up to two
        // group members: a second member marks the label as a cut family.
        ht_reset();
        for (int e : cedges_) {
            auto& g = ht_slot(label_[e]);
            if (g.first < 0) g.first = e;
            else if (g.second < 0) g.second = e;
        }
        int forced = 0;
        for (int e : cedges_) {
            if (state_[e] != und) continue;
            const auto& g = ht_slot(label_[e]);
            if (g.second < 0) continue;
            const int partner = g.first == e ? g.second : g.first;
            if (!verified_two_cut(e, partner)) continue;
            // Cache the inference as a clause (the committed edge or one of
            // the cut's excluded boundary edges must lie on the cycle), so
            // after a restart it propagates by watching instead of being
            // rediscovered here.
            lemma_.clear();
            lemma_.push_back(lit_in(e));
            for (int qi = 0; qi < side_tail_; ++qi) {
                const int x = bfs_queue_[qi];
                for (int ge : inc(x))
                    if (state_[ge] == out &&
                        bfs_mark_[other(ge, x)] != bfs_stamp_)
                        lemma_.push_back(lit_in(ge));
            }
            if (!add_lemma()) return -1;
            ++forced;
            if (closed_) break;
        }
        // Productive runs keep the gate tight; barren ones back it off, so
        // descents that stopped yielding cuts pay less and less here.
        theory_gap_ = forced > 0 ? theory_gap0_
                                 : std::min(theory_gap_ * 2, theory_gap0_ * 16);
        return forced > 0 ? 1 : 0;
    }

    // Installs lemma_ (head literal implied, the rest false) and enqueues
    // the head. Mirrors the learned-clause path of conflict analysis.
    bool add_lemma() {
        if (lemma_.size() == 1)
            return enqueue(lemma_[0], reason{reason::axiom});
        size_t maxi = 1;
        int lbd = 1;
        for (size_t i = 1; i < lemma_.size(); ++i)
            if (level_[lemma_[i] >> 1] > level_[lemma_[maxi] >> 1]) maxi = i;
        std::swap(lemma_[1], lemma_[maxi]);
        for (size_t i = 1; i < lemma_.size(); ++i)
            if (level_[lemma_[i] >> 1] != level_[lemma_[1] >> 1]) {
                lbd = 2;
                break;
            }
        clause* c = new clause{lbd + 1, lemma_};
        learnts_.push_back(c);
        watches_[c->lits[0]].push_back(c);
        watches_[c->lits[1]].push_back(c);
        return enqueue(c->lits[0], reason{reason::dbclause, 0, 0, c});
    }

    void bridge_conflict(int v, int e) {
        // Live component of v with the bridge e removed; the cycle must
        // cross its boundary twice, which the bridge alone cannot supply.
        ++bfs_stamp_;
        int head = 0, tail = 0;
        bfs_mark_[v] = bfs_stamp_;
        bfs_queue_[tail++] = v;
        while (head < tail) {
            const int x = bfs_queue_[head++];
            for (int g : inc(x)) {
                if (state_[g] == out || g == e) continue;
                const int y = other(g, x);
                if (bfs_mark_[y] != bfs_stamp_) {
                    bfs_mark_[y] = bfs_stamp_;
                    bfs_queue_[tail++] = y;
                }
            }
        }
        conflict_.clear();
        const auto& es = g_.edges();
        for (int g = 0; g < m_; ++g)
            if (state_[g] == out && (bfs_mark_[es[g].u] == bfs_stamp_) !=
                                        (bfs_mark_[es[g].v] == bfs_stamp_))
                conflict_.push_back(lit_in(g));
    }

    void ht_reset() {
        if (ht_keys_.empty()) {
            int sz = 4;
            while (sz < 4 * m_) sz *= 2;
            ht_keys_.assign(sz, 0);
            ht_vals_.resize(sz);
            ht_stamp_.assign(sz, 0);
        }
        ++ht_gen_;
    }

    std::pair<int, int>& ht_slot(std::uint64_t key) {
        const std::uint64_t mask = ht_keys_.size() - 1;
        std::uint64_t i = (key * 0x9e3779b97f4a7c15ULL) & mask;
        for (;;) {
            if (ht_stamp_[i] != ht_gen_) {
                ht_stamp_[i] = ht_gen_;
                ht_keys_[i] = key;
                ht_vals_[i] = {-1, -1};
                return ht_vals_[i];
            }
            if (ht_keys_[i] == key) return ht_vals_[i];
            i = (i + 1) & mask;
        }
    }

    // Checks that removing e and f disconnects the live graph, leaving the
    // smaller component marked (bfs_stamp_/side_tail_) for the caller's
    // boundary collection. Scanning from e's first endpoint could flood the
    // large side, so that scan is capped at half the graph and restarted
    // from the other endpoint, which for a genuine cut owns the rest.
    bool verified_two_cut(int e, int f) {
        int reached = side_bfs(g_.edges()[e].u, e, f, n_ / 2);
        if (reached < 0) reached = side_bfs(g_.edges()[e].v, e, f, n_);
        return reached >= 0 && reached < n_;
    }

    int side_bfs(int start, int e, int f, int cap) {
        ++bfs_stamp_;
        int head = 0, tail = 0, reached = 1;
        bfs_mark_[start] = bfs_stamp_;
        bfs_queue_[tail++] = start;
        while (head < tail) {
            const int v = bfs_queue_[head++];
            for (int ie : inc(v)) {
                if (state_[ie] == out || ie == e || ie == f) continue;
                const int w = other(ie, v);
                if (bfs_mark_[w] != bfs_stamp_) {
                    if (reached > cap) return -1;
                    bfs_mark_[w] = bfs_stamp_;
                    bfs_queue_[tail++] = w;
                    ++reached;
                }
            }
        }
        side_tail_ = tail;
        return reached;
    }

    static long long luby(long long i) {
        long long size = 1, seq = 0;
        while (size < i + 1) {
            ++seq;
            size = 2 * size + 1;
        }
        while (size - 1 != i) {
            size = (size - 1) / 2;
            --seq;
            i %= size;
        }
        return 1LL << seq;
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    cycle extract_cycle() const {
        cycle c;
        c.reserve(n_);
        int prev = -1, cur = 0;
        do {
            c.push_back(cur);
            for (int e : inc(cur))
                if (state_[e] == in) {
                    const int w = other(e, cur);
                    if (w != prev) {
                        prev = cur;
                        cur = w;
                        break;
                    }
                }
        } while (cur != 0 && static_cast<int>(c.size()) <= n_);
        return c;
    }

    const graph& g_;
    int n_;
    int m_ = 0;
    long long limit_;
    long long nodes_ = 0;
    long long decisions_ = 0;
    long long conflicts_ = 0;
    long long in_count_ = 0;
    long long restart_at_ = 128;
    long long restart_seq_ = 1;
    long long max_learnts_ = 30000;
    bool closed_ = false;
    int qhead_ = 0;
    int focus_ = -1;
    int blevel_ = 0;
    int lbd_ = 0;
    int lbd_stamp_ = 0;
    int bfs_stamp_ = 0;
    int side_tail_ = 0;
    int interior_n_ = 0;
    int tcur_ = 0;
    double var_inc_ = 1.0;
    double trail_ema_ = 0.0;
    std::vector<char> state_, merged_, polarity_, seen_;
    std::vector<int> level_, pos_, cnt_in_, cnt_und_, other_end_, seg_len_;
    std::vector<int> trail_, trail_lim_, learnt_, tmp_, conflict_, lemma_;
    std::vector<int> order_, cedges_, lbd_seen_;
    std::vector<tnode> tn_;
    std::vector<int> bfs_mark_, bfs_queue_, heap_, hpos_;
    std::vector<double> act_;
    std::vector<reason> reason_;
    std::vector<std::uint64_t> acc_, label_, edge_key_, ht_keys_;
    std::vector<std::pair<int, int>> ht_vals_;
    std::vector<int> ht_stamp_;
    int ht_gen_ = 0;
    long long out_count_ = 0, theory_out_ = LLONG_MIN / 2;
    long long theory_gap_ = 96, theory_gap0_ = 96;
    std::vector<clause*> learnts_;
    std::vector<std::vector<clause*>> watches_;
    std::vector<dfs_frame> dfs_stack_;
    std::vector<int> inc_off_, inc_flat_;
    std::vector<std::pair<int, int>> oe_trail_, len_trail_;
};

template <class Emit>
search_result run_search(const graph& g, const search_budget& budget,
                         bool canonical, Emit&& emit, long long& nodes) {
    search_result r;
    try {
        bool stopped;
        if (g.directed()) {
            directed_searcher s(g, budget.node_limit);
            stopped = s.run(emit);
            nodes = s.nodes();
        } else {
            undirected_searcher s(g, budget.node_limit, canonical);
            stopped = s.run(emit);
            nodes = s.nodes();
        }
        r.outcome = stopped ? search_outcome::found : search_outcome::exhausted_none;
    } catch (const budget_exhausted&) {
        nodes = budget.node_limit;
        r.outcome = search_outcome::budget_exceeded;
    }
    r.nodes_expanded = nodes;
    return r;
}

} // namespace

search_result find_hc(const graph& g, const search_budget& budget) {
    if (!g.directed()) {
        edge_existence_solver solver(g, budget.node_limit);
        return solver.solve();
    }
    long long nodes = 0;
    cycle found;
    auto r = run_search(g, budget, false,
                        [&](const std::vector<int>& c) {
                            found = c;
                            return true;
                        },
                        nodes);
    if (r.outcome == search_outcome::found) r.witness = std::move(found);
    return r;
}

count_result count_hc(const graph& g, const search_budget& budget) {
    long long nodes = 0;
    count_result cr;
    auto r = run_search(g, budget, true,
                        [&](const std::vector<int>&) {
                            ++cr.count;
                            return false;  // keep enumerating
                        },
                        nodes);
    cr.complete = r.outcome != search_outcome::budget_exceeded;
    cr.nodes_expanded = nodes;
    return cr;
}

search_result ham_path(const graph& g, int u, int w, const search_budget& budget) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n || w < 0 || w >= n || u == w)
        throw graph_error("ham_path requires two distinct vertices of g");
    // Reduce to a Hamiltonian cycle query: add a helper vertex joined to
    // both endpoints (directed: w -> helper -> u).
    std::vector<edge> edges = g.edges();
    if (g.directed()) {
        edges.push_back({w, n});
        edges.push_back({n, u});
    } else {
        edges.push_back({u, n});
        edges.push_back({w, n});
    }
    graph aug(g.mode(), n + 1, std::move(edges));
    search_result r = find_hc(aug, budget);
    if (r.outcome != search_outcome::found) return r;

    // Rotate the helper vertex out; orient the path from u to w.
    auto& c = r.witness;
    auto it = std::find(c.begin(), c.end(), n);
    std::rotate(c.begin(), it, c.end());
    c.erase(c.begin());
    if (c.front() != u) std::reverse(c.begin(), c.end());
    return r;
}

namespace {

std::vector<std::pair<int, int>> admissible_pairs(const gadget& gd) {
    std::vector<std::pair<int, int>> pairs;
    const auto& a = gd.attachments;
    if (gd.mode == graph_mode::undirected) {
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j)
                pairs.push_back({a[i].vertex, a[j].vertex});
    } else {
        for (const auto& from : a)
            for (const auto& to : a)
                if (from.dir == orientation::in && to.dir == orientation::out &&
                    from.vertex != to.vertex)
                    pairs.push_back({from.vertex, to.vertex});
    }
    return pairs;
}

} // namespace

verdict check_gadget_traversal(const gadget& gd, const search_budget& budget) {
    graph internal = gd.internal_graph();
    bool inconclusive = false;
    for (auto [u, w] : admissible_pairs(gd)) {
        search_result r = ham_path(internal, u, w, budget);
        if (r.outcome == search_outcome::exhausted_none) return verdict::fails;
        if (r.outcome == search_outcome::budget_exceeded) inconclusive = true;
    }
    return inconclusive ? verdict::inconclusive : verdict::holds;
}

namespace {

// Exhaustive search for a family of >= 2 vertex-disjoint attachment-to-
// attachment paths covering every gadget vertex. Finding one refutes the
// blocking property.
class blocking_searcher {
public:
    blocking_searcher(const gadget& gd, long long limit)
        : g_(gd.internal_graph()), n_(g_.vertex_count()), limit_(limit) {
        is_start_.assign(n_, 0);
        is_end_.assign(n_, 0);
        for (const auto& a : gd.attachments) {
            if (gd.mode == graph_mode::undirected) {
                is_start_[a.vertex] = is_end_[a.vertex] = 1;
            } else {
                if (a.dir == orientation::in) is_start_[a.vertex] = 1;
                if (a.dir == orientation::out) is_end_[a.vertex] = 1;
            }
        }
        undirected_ = gd.mode == graph_mode::undirected;
        covered_.assign(n_, 0);
        endpoint_used_.assign(n_, 0);
    }

    // True iff a violating family exists.
    bool cover_exists() {
        uncovered_ = n_;
        return next_path(-1, 0);
    }

private:
    bool next_path(int last_start, int paths_done) {
        if (++nodes_ > limit_) throw budget_exhausted{};
        if (uncovered_ == 0) return paths_done >= 2;
        for (int a = last_start + 1; a < n_; ++a) {
            if (!is_start_[a] || covered_[a] || endpoint_used_[a]) continue;
            covered_[a] = endpoint_used_[a] = 1;
            --uncovered_;
            bool found = extend(a, a, paths_done);
            covered_[a] = endpoint_used_[a] = 0;
            ++uncovered_;
            if (found) return true;
        }
        return false;
    }

    bool extend(int start, int cur, int paths_done) {
        if (++nodes_ > limit_) throw budget_exhausted{};
        for (int w : g_.out_neighbors(cur)) {
            if (covered_[w]) continue;
            covered_[w] = 1;
            --uncovered_;
            // Close the path here if w is a legal unused endpoint
            // (undirected paths are canonically oriented start < end).
            if (is_end_[w] && !endpoint_used_[w] && (!undirected_ || w > start)) {
                endpoint_used_[w] = 1;
                if (next_path(start, paths_done + 1)) return true;
                endpoint_used_[w] = 0;
            }
            if (extend(start, w, paths_done)) return true;
            covered_[w] = 0;
            ++uncovered_;
        }
        return false;
    }

    graph g_;
    int n_;
    long long limit_;
    long long nodes_ = 0;
    bool undirected_ = true;
    int uncovered_ = 0;
    std::vector<char> is_start_, is_end_, covered_, endpoint_used_;
};

} // namespace

verdict check_gadget_blocking(const gadget& gd, const search_budget& budget) {
    blocking_searcher s(gd, budget.node_limit);
    try {
        return s.cover_exists() ? verdict::fails : verdict::holds;
    } catch (const budget_exhausted&) {
        return verdict::inconclusive;
    }
}

equivalence_result check_equivalence(const graph& original,
                                     const graph& converted,
                                     const provenance& prov,
                                     const search_budget& budget) {
    equivalence_result res;
    search_result orig = find_hc(original, budget);
    search_result conv = find_hc(converted, budget);
    if (orig.outcome == search_outcome::budget_exceeded ||
        conv.outcome == search_outcome::budget_exceeded) {
        res.status = verdict::inconclusive;
        res.detail = "budget exceeded";
        return res;
    }
    res.original_hamiltonian = orig.outcome == search_outcome::found;
    res.converted_hamiltonian = conv.outcome == search_outcome::found;
    if (res.original_hamiltonian != res.converted_hamiltonian) {
        res.status = verdict::fails;
        res.detail = "HC existence differs";
        return res;
    }
    if (res.converted_hamiltonian) {
        if (prov.collapsed) {
            res.status = verdict::fails;
            res.detail = "collapsed conversion claims non-Hamiltonian input "
                         "but both graphs have a Hamiltonian cycle";
            return res;
        }
        try {
            project_cycle(prov, conv.witness, original);
            res.cycle_lifted = true;
        } catch (const graph_error& e) {
            res.status = verdict::fails;
            res.detail = std::string("cycle projection failed: ") + e.what();
            return res;
        }
    }
    res.status = verdict::holds;
    return res;
}

} // namespace hcp3
