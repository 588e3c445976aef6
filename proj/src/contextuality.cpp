#include "doily/contextuality.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <functional>
#include <optional>
#include <random>

#include "doily/codes.hpp"

namespace doily {

namespace {

constexpr int kMaxContexts = 1024;
using ContextSet = std::bitset<kMaxContexts>;

struct Equation {
    std::uint64_t mask = 0;
    std::uint8_t rhs = 0;
    int context = 0;
};

std::uint64_t to_mask(const std::vector<int>& pts) {
    std::uint64_t m = 0;
    for (int p : pts) m ^= std::uint64_t{1} << p;
    return m;
}

std::vector<Equation> equations(const IncidenceSystem& sys) {
    std::vector<Equation> eq;
    for (int c = 0; c < sys.num_contexts(); ++c) {
        if (sys.single_parity()) {
            eq.push_back({to_mask(sys.contexts[c]), sys.rhs[c], c});
        } else {
            for (const auto& p : sys.parities[c]) eq.push_back({to_mask(p.points), p.rhs, c});
        }
    }
    return eq;
}

std::vector<std::uint8_t> mask_assignment(std::uint64_t m, int n) {
    std::vector<std::uint8_t> x(n);
    for (int i = 0; i < n; ++i) x[i] = (m >> i) & 1U;
    return x;
}

// per-context equation ranges for fast evaluation
struct Evaluator {
    std::vector<Equation> eq;
    std::vector<int> first;  // eq index range [first[c], first[c+1])
    std::vector<std::vector<int>> contexts_of_point;

    explicit Evaluator(const IncidenceSystem& sys) : eq(equations(sys)) {
        first.assign(sys.num_contexts() + 1, 0);
        for (const auto& e : eq) ++first[e.context + 1];
        for (int c = 0; c < sys.num_contexts(); ++c) first[c + 1] += first[c];
        contexts_of_point.resize(sys.num_points());
        for (int c = 0; c < sys.num_contexts(); ++c) {
            std::uint64_t m = 0;
            for (int i = first[c]; i < first[c + 1]; ++i) m |= eq[i].mask;
            for (int p = 0; p < sys.num_points(); ++p)
                if ((m >> p) & 1U) contexts_of_point[p].push_back(c);
        }
    }

    bool satisfied(int c, std::uint64_t x) const {
        for (int i = first[c]; i < first[c + 1]; ++i)
            if ((std::popcount(eq[i].mask & x) & 1) != eq[i].rhs) return false;
        return true;
    }

    int violations(std::uint64_t x) const {
        int v = 0;
        for (std::size_t c = 0; c + 1 < first.size(); ++c) v += !satisfied(static_cast<int>(c), x);
        return v;
    }
};

DegreeResult finish(const IncidenceSystem& sys, std::uint64_t x, int lower, int upper, std::string method) {
    DegreeResult r;
    r.lower = lower;
    r.upper = upper;
    r.exact = lower == upper;
    r.witness = mask_assignment(x, sys.num_points());
    r.violated = violated_contexts(sys, r.witness);
    r.method = std::move(method);
    return r;
}

// Gaussian elimination; returns contexts whose equations combine to 0 = 1, or none.
// Equations are tracked individually: two parities of one context may cancel.
std::optional<ContextSet> inconsistency_certificate(const std::vector<Equation>& eq, const ContextSet& active) {
    const std::size_t words = (eq.size() + 63) / 64;
    struct Row {
        std::uint64_t mask;
        std::uint8_t rhs;
        std::vector<std::uint64_t> used;
    };
    std::vector<Row> pivots;  // pivot = lowest bit of mask
    for (std::size_t i = 0; i < eq.size(); ++i) {
        const auto& e = eq[i];
        if (!active.test(e.context)) continue;
        Row r{e.mask, e.rhs, std::vector<std::uint64_t>(words)};
        r.used[i / 64] |= std::uint64_t{1} << (i % 64);
        for (const auto& p : pivots)
            if ((r.mask >> std::countr_zero(p.mask)) & 1U) {
                r.mask ^= p.mask;
                r.rhs ^= p.rhs;
                for (std::size_t w = 0; w < words; ++w) r.used[w] ^= p.used[w];
            }
        if (r.mask == 0) {
            if (!r.rhs) continue;
            ContextSet cs;
            for (std::size_t j = 0; j < eq.size(); ++j)
                if ((r.used[j / 64] >> (j % 64)) & 1U) cs.set(eq[j].context);
            return cs;
        }
        pivots.push_back(std::move(r));
    }
    return std::nullopt;
}

}  // namespace

void IncidenceSystem::validate() const {
    if (points.size() > 64) throw DomainError("IncidenceSystem: more than 64 points");
    if (contexts.size() > static_cast<std::size_t>(kMaxContexts)) throw DomainError("IncidenceSystem: too many contexts");
    if (rhs.size() != contexts.size()) throw std::invalid_argument("IncidenceSystem: rhs size mismatch");
    if (!parities.empty() && parities.size() != contexts.size())
        throw std::invalid_argument("IncidenceSystem: parities size mismatch");
    auto check = [&](const std::vector<int>& pts) {
        for (int p : pts)
            if (p < 0 || p >= num_points()) throw std::out_of_range("IncidenceSystem: point index out of range");
    };
    for (const auto& c : contexts) check(c);
    for (const auto& ps : parities)
        for (const auto& p : ps) check(p.points);
}

IncidenceSystem line_system(const PointLineGeometry& g, const std::vector<PauliOperator>& labels) {
    if (static_cast<int>(labels.size()) != g.num_points()) throw std::invalid_argument("line_system: label count mismatch");
    IncidenceSystem s;
    for (const auto& l : labels) s.points.push_back(l.to_string());
    for (const auto& line : g.lines) {
        std::vector<PauliOperator> ops;
        for (int p : line) ops.push_back(labels[p]);
        s.contexts.push_back(line);
        s.rhs.push_back(context_sign(ops) < 0 ? 1 : 0);
    }
    return s;
}

std::vector<PauliOperator> canonical_w52_labels() {
    std::vector<PauliOperator> out;
    for (std::uint16_t b = 1; b < 64; ++b) out.emplace_back(GF2Vector(3, b));
    return out;
}

IncidenceSystem plane_system_w52(const std::vector<PauliOperator>& labels) {
    if (labels.size() != 63) throw std::invalid_argument("plane_system_w52: need 63 labels");
    for (std::size_t i = 0; i < 63; ++i)
        if (labels[i].num_qubits() != 3 || labels[i].vec().bits() != i + 1)
            throw std::invalid_argument("plane_system_w52: labels must follow point order");
    IncidenceSystem s;
    for (const auto& l : labels) s.points.push_back(l.to_string());
    for (const auto& plane : enumerate_subspaces(3, 3, SubspaceFilter::totally_isotropic)) {
        std::vector<int> pts;
        std::vector<PauliOperator> ops;
        for (const auto& p : plane.points()) {
            pts.push_back(p.bits() - 1);
            ops.push_back(labels[p.bits() - 1]);
        }
        PlaneClassification pc = classify_plane(ops);
        std::vector<Parity> par;
        for (std::size_t j = 0; j < pc.lines.size(); ++j) {
            const auto& l = pc.lines[j];
            par.push_back({{pts[l[0]], pts[l[1]], pts[l[2]]}, static_cast<std::uint8_t>(pc.line_signs[j] < 0)});
        }
        s.contexts.push_back(pts);
        s.rhs.push_back(pc.cls == PlaneClass::negative ? 1 : 0);
        s.parities.push_back(par);
    }
    return s;
}

bool context_satisfied(const IncidenceSystem& sys, int c, const std::vector<std::uint8_t>& x) {
    auto holds = [&](const std::vector<int>& pts, std::uint8_t rhs) {
        int s = 0;
        for (int p : pts) s ^= x.at(p) & 1;
        return s == rhs;
    };
    if (sys.single_parity()) return holds(sys.contexts.at(c), sys.rhs.at(c));
    for (const auto& p : sys.parities.at(c))
        if (!holds(p.points, p.rhs)) return false;
    return true;
}

std::vector<int> violated_contexts(const IncidenceSystem& sys, const std::vector<std::uint8_t>& x) {
    if (static_cast<int>(x.size()) != sys.num_points()) throw DimensionError("assignment size mismatch");
    std::vector<int> v;
    for (int c = 0; c < sys.num_contexts(); ++c)
        if (!context_satisfied(sys, c, x)) v.push_back(c);
    return v;
}

bool is_consistent(const IncidenceSystem& sys) {
    sys.validate();
    ContextSet all;
    for (int c = 0; c < sys.num_contexts(); ++c) all.set(c);
    return !inconsistency_certificate(equations(sys), all).has_value();
}

DegreeResult degree_exhaustive(const IncidenceSystem& sys) {
    sys.validate();
    const int n = sys.num_points();
    if (n > 24) throw DomainError("degree_exhaustive: more than 24 points");
    Evaluator ev(sys);
    int best = sys.num_contexts() + 1;
    std::uint64_t best_x = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        // x_0 is the most significant digit of v, so v order is lexicographic
        std::uint64_t x = 0;
        for (int i = 0; i < n; ++i)
            if ((v >> (n - 1 - i)) & 1U) x |= std::uint64_t{1} << i;
        int k = ev.violations(x);
        if (k < best) {
            best = k;
            best_x = x;
            if (best == 0) break;
        }
    }
    return finish(sys, best_x, best, best, "exhaustive");
}

DegreeResult degree_coset_leader(const IncidenceSystem& sys) {
    sys.validate();
    if (!sys.single_parity()) throw DomainError("degree_coset_leader: needs one parity per context");
    const int m = sys.num_contexts();
    if (m > 64) throw DomainError("degree_coset_leader: more than 64 contexts");

    // left kernel of the incidence matrix: context sets whose point masks cancel
    struct Row {
        std::uint64_t pts;
        std::uint64_t ctx;
    };
    std::vector<Row> basis;
    std::vector<std::uint64_t> kernel;
    for (int c = 0; c < m; ++c) {
        Row r{to_mask(sys.contexts[c]), std::uint64_t{1} << c};
        for (const auto& b : basis)
            if ((r.pts >> std::countr_zero(b.pts)) & 1U) {
                r.pts ^= b.pts;
                r.ctx ^= b.ctx;
            }
        if (r.pts == 0)
            kernel.push_back(r.ctx);
        else
            basis.push_back(r);
    }
    const std::uint64_t rhs = [&] {
        std::uint64_t v = 0;
        for (int c = 0; c < m; ++c)
            if (sys.rhs[c]) v |= std::uint64_t{1} << c;
        return v;
    }();
    auto syndrome_ok = [&](std::uint64_t e) {
        for (auto h : kernel)
            if (std::popcount(h & (e ^ rhs)) & 1) return false;
        return true;
    };

    std::uint64_t leader = 0;
    int weight = -1;
    std::vector<int> idx;
    std::function<bool(int, int, std::uint64_t)> search = [&](int start, int left, std::uint64_t e) -> bool {
        if (left == 0) {
            if (syndrome_ok(e)) {
                leader = e;
                return true;
            }
            return false;
        }
        for (int c = start; c <= m - left; ++c)
            if (search(c + 1, left - 1, e | (std::uint64_t{1} << c))) return true;
        return false;
    };
    for (int w = 0; w <= m && weight < 0; ++w)
        if (search(0, w, 0)) weight = w;

    // solve A x = rhs + leader with free variables zero
    const std::uint64_t target = rhs ^ leader;
    std::vector<std::pair<std::uint64_t, std::uint8_t>> rows;
    for (int c = 0; c < m; ++c) rows.push_back({to_mask(sys.contexts[c]), static_cast<std::uint8_t>((target >> c) & 1U)});
    std::vector<std::pair<std::uint64_t, std::uint8_t>> piv;
    for (auto r : rows) {
        for (const auto& p : piv)
            if ((r.first >> std::countr_zero(p.first)) & 1U) {
                r.first ^= p.first;
                r.second ^= p.second;
            }
        if (!r.first) continue;
        const int b = std::countr_zero(r.first);
        for (auto& p : piv)
            if ((p.first >> b) & 1U) {
                p.first ^= r.first;
                p.second ^= r.second;
            }
        piv.push_back(r);
    }
    std::uint64_t x = 0;
    for (const auto& p : piv)
        if (p.second) x |= std::uint64_t{1} << std::countr_zero(p.first);
    return finish(sys, x, weight, weight, "coset-leader");
}

DegreeResult degree_bound(const IncidenceSystem& sys, const BoundOptions& opt) {
    sys.validate();
    const int n = sys.num_points();
    Evaluator ev(sys);
    std::mt19937_64 rng(opt.seed);

    const int m = sys.num_contexts();
    std::uint64_t best_x = 0;
    int best = ev.violations(0);
    std::vector<char> sat(m);
    for (int r = 0; r < opt.restarts && best > 0; ++r) {
        std::uint64_t x = rng();
        if (n < 64) x &= (std::uint64_t{1} << n) - 1;
        int cur = 0;
        for (int c = 0; c < m; ++c) {
            sat[c] = ev.satisfied(c, x);
            cur += !sat[c];
        }
        if (cur < best) {
            best = cur;
            best_x = x;
        }
        std::vector<int> cands;
        for (int step = 0; step < opt.max_flips && best > 0; ++step) {
            int best_delta = 1 << 30;
            cands.clear();
            for (int p = 0; p < n; ++p) {
                const std::uint64_t y = x ^ (std::uint64_t{1} << p);
                int delta = 0;
                for (int c : ev.contexts_of_point[p]) delta += int(!ev.satisfied(c, y)) - int(!sat[c]);
                if (delta < best_delta) {
                    best_delta = delta;
                    cands.assign(1, p);
                } else if (delta == best_delta) {
                    cands.push_back(p);
                }
            }
            int p = 0;
            if (best_delta < 0 || (best_delta == 0 && rng() % 4 != 0))
                p = cands[rng() % cands.size()];
            else
                p = static_cast<int>(rng() % n);
            x ^= std::uint64_t{1} << p;
            for (int c : ev.contexts_of_point[p]) {
                const char s = ev.satisfied(c, x);
                cur += int(!s) - int(!sat[c]);
                sat[c] = s;
            }
            if (cur < best) {
                best = cur;
                best_x = x;
            }
        }
    }

    // disjoint inconsistent subsystems each force one violation
    const auto eq = equations(sys);
    ContextSet active;
    for (int c = 0; c < sys.num_contexts(); ++c) active.set(c);
    int lower = 0;
    while (auto cert = inconsistency_certificate(eq, active)) {
        ContextSet core = *cert;
        for (int c = 0; c < sys.num_contexts(); ++c) {
            if (!core.test(c)) continue;
            ContextSet trial = core;
            trial.reset(c);
            if (inconsistency_certificate(eq, trial)) core = trial;
        }
        ++lower;
        active &= ~core;
    }
    if (lower > best) throw std::logic_error("degree_bound: lower bound exceeds upper bound");
    return finish(sys, best_x, lower, best, "bound");
}

DegreeResult contextuality_degree(const IncidenceSystem& sys, DegreeMode mode, const BoundOptions& opt) {
    sys.validate();
    if (mode == DegreeMode::bound) return degree_bound(sys, opt);
    if (sys.num_points() <= 24) return degree_exhaustive(sys);
    if (sys.single_parity() && sys.num_contexts() <= 24) return degree_coset_leader(sys);
    throw DomainError("contextuality_degree: exact mode needs <= 24 points or <= 24 single-parity contexts");
}

LiftResult max_stabilizer_lift(const IncidenceSystem& sys) {
    DegreeResult d = contextuality_degree(sys, DegreeMode::exact);
    return {sys.num_contexts() - d.upper, d.witness};
}

DegreeResult plane_contextuality_w52(const IncidenceSystem& planes, const BoundOptions& opt) {
    if (planes.num_points() != 63 || planes.num_contexts() != 135)
        throw std::invalid_argument("plane_contextuality_w52: expected 63 points and 135 planes");
    return degree_bound(planes, opt);
}

}  // namespace doily
