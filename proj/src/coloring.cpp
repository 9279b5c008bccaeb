#include "ccn/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "solver_internal.hpp"

namespace ccn {

Coloring::Coloring(const std::vector<int>& labels) {
    if (labels.empty())
        throw std::invalid_argument("colouring needs at least one vertex");
    assignment_.resize(labels.size());
    std::vector<int> relabel;
    for (size_t v = 0; v < labels.size(); ++v) {
        int label = labels[v];
        if (label < 0)
            throw std::invalid_argument("negative colour label");
        auto it = std::find(relabel.begin(), relabel.end(), label);
        if (it == relabel.end()) {
            relabel.push_back(label);
            assignment_[v] = static_cast<int>(relabel.size()) - 1;
        } else {
            assignment_[v] = static_cast<int>(it - relabel.begin());
        }
    }
    class_count_ = static_cast<int>(relabel.size());
}

std::vector<int> Coloring::class_sizes() const {
    std::vector<int> theta(class_count_, 0);
    for (int c : assignment_) ++theta[c];
    return theta;
}

std::vector<std::vector<int>> Coloring::classes() const {
    std::vector<std::vector<int>> out(class_count_);
    for (int v = 0; v < size(); ++v) out[assignment_[v]].push_back(v);
    return out;
}

std::string Coloring::to_json() const {
    nlohmann::ordered_json doc;
    doc["classes"] = classes();
    return doc.dump();
}

std::vector<Edge> bad_edges(const Graph& g, const Coloring& col) {
    if (col.size() != g.order())
        throw std::invalid_argument("colouring covers " +
                                    std::to_string(col.size()) +
                                    " vertices, graph has " +
                                    std::to_string(g.order()));
    std::vector<Edge> bad;
    const auto& a = col.assignment();
    for (const auto& e : g.edges())
        if (a[e.first] == a[e.second]) bad.push_back(e);
    return bad; // g.edges() is sorted, so this is too
}

bool is_proper(const Graph& g, const Coloring& col) {
    return bad_edges(g, col).empty();
}

namespace {

using detail::MaskGraph;
using detail::PartialState;

int greedy_clique_bound(const MaskGraph& g) {
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = std::popcount(g.adj[a]), db = std::popcount(g.adj[b]);
        return da != db ? da > db : a < b;
    });
    uint64_t clique = 0;
    int count = 0;
    for (int v : order) {
        if ((g.adj[v] & clique) == clique) {
            clique |= uint64_t{1} << v;
            ++count;
        }
    }
    return std::max(count, 1);
}

// Greedy DSATUR colouring, no class cap. Returns the assignment.
std::vector<int8_t> dsatur_greedy(const MaskGraph& g) {
    PartialState s(g.n, g.n);
    for (int step = 0; step < g.n; ++step) {
        int v = detail::select_vertex(g, s);
        int c = 0;
        while (g.adj[v] & s.class_bits[c]) ++c;
        s.place(v, c);
    }
    return s.assign;
}

bool feasible_with(const MaskGraph& g, int k, PartialState& s,
                   std::vector<int8_t>& witness) {
    if (s.assigned == g.n) {
        witness = s.assign;
        return true;
    }
    int v = detail::select_vertex(g, s);
    int limit = std::min(s.used + 1, k);
    for (int c = 0; c < limit; ++c) {
        if (g.adj[v] & s.class_bits[c]) continue;
        s.place(v, c);
        if (feasible_with(g, k, s, witness)) return true;
        s.remove(v, c);
    }
    return false;
}

} // namespace

namespace detail {

std::pair<int, std::vector<int>> chi_with_witness(const Graph& g,
                                                  const SolverLimits& limits) {
    check_order_guard(g.order(), limits);
    MaskGraph mg(g);
    int lower = greedy_clique_bound(mg);
    std::vector<int8_t> greedy = dsatur_greedy(mg);
    int upper = 0;
    for (int8_t c : greedy) upper = std::max(upper, c + 1);

    std::vector<int8_t> witness = greedy;
    int chi = upper;
    for (int k = lower; k < upper; ++k) {
        PartialState s(mg.n, k);
        std::vector<int8_t> found;
        if (feasible_with(mg, k, s, found)) {
            chi = k;
            witness = found;
            break;
        }
    }
    return {chi, std::vector<int>(witness.begin(), witness.end())};
}

std::vector<int> balanced_greedy_coloring(const MaskGraph& g, int chi) {
    PartialState s(g.n, chi);
    for (int step = 0; step < g.n; ++step) {
        int v = select_vertex(g, s);
        int remaining_after = g.n - s.assigned - 1;
        int choice = -1;
        int limit = std::min(s.used + 1, chi);
        for (int c = 0; c < limit; ++c) {
            if (g.adj[v] & s.class_bits[c]) continue;
            int opens = c == s.used ? 1 : 0;
            if (remaining_after < chi - s.used - opens) continue;
            if (choice == -1 || s.class_size[c] < s.class_size[choice])
                choice = c;
        }
        if (choice == -1) return {};
        s.place(v, choice);
    }
    if (s.used != chi) return {};
    return std::vector<int>(s.assign.begin(), s.assign.end());
}

} // namespace detail

int chromatic_number(const Graph& g, const SolverLimits& limits) {
    return detail::chi_with_witness(g, limits).first;
}

namespace {

// Vertex-index-order enumeration of restricted-growth assignments into
// exactly chi independent classes. Returns false when the visitor stopped.
bool enumerate_partitions(const MaskGraph& g, int chi, PartialState& s, int v,
                          const std::function<bool(const Coloring&)>& visit) {
    if (v == g.n)
        return visit(Coloring(
            std::vector<int>(s.assign.begin(), s.assign.end())));
    int remaining_after = g.n - v - 1;
    int limit = std::min(s.used + 1, chi);
    for (int c = 0; c < limit; ++c) {
        if (g.adj[v] & s.class_bits[c]) continue;
        int opens = c == s.used ? 1 : 0;
        if (remaining_after < chi - s.used - opens) continue;
        s.place(v, c);
        bool keep_going = enumerate_partitions(g, chi, s, v + 1, visit);
        s.remove(v, c);
        if (!keep_going) return false;
    }
    return true;
}

} // namespace

void for_each_chromatic_partition(
    const Graph& g, const std::function<bool(const Coloring&)>& visit,
    const SolverLimits& limits) {
    int chi = chromatic_number(g, limits);
    MaskGraph mg(g);
    PartialState s(mg.n, chi);
    enumerate_partitions(mg, chi, s, 0, visit);
}

std::vector<Coloring> chromatic_partitions(const Graph& g,
                                           const SolverLimits& limits) {
    std::vector<Coloring> out;
    for_each_chromatic_partition(
        g,
        [&](const Coloring& col) {
            out.push_back(col);
            return true;
        },
        limits);
    return out;
}

} // namespace ccn
