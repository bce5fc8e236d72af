#include "cge/ilp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cge/errors.hpp"

namespace cge {

std::string ver_var(int i) { return "x_ver_" + std::to_string(i); }
std::string rob_var(int i) { return "x_rob_" + std::to_string(i); }
std::string cyc_var(int i) { return "x_cyc_" + std::to_string(i); }

int IlpSystem::find_variable(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    return it == variables.end() ? -1 : static_cast<int>(it - variables.begin());
}

long long IlpAssignment::value_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw DomainMismatch("variable " + name + " missing from assignment");
    return values[static_cast<size_t>(it - names.begin())];
}

namespace {

int sub_position(const VertexType& t, const NeiSub& s) {
    auto it = std::lower_bound(t.nei_subsets.begin(), t.nei_subsets.end(), s);
    if (it == t.nei_subsets.end() || *it != s) throw PreconditionViolated("sub-multiset not in vertex type");
    return static_cast<int>(it - t.nei_subsets.begin());
}

using SubKey = std::pair<int, int>;  // (vertex type, position of NeiSub inside it)

std::map<SubKey, int> robot_sub_counts(const RobotType& r, const TypeSpace& ts) {
    std::map<SubKey, int> out;
    for (const auto& e : r.alloc) {
        int v = ts.find_ver(e.type);
        if (v < 0) throw PreconditionViolated("allocation target outside the type space");
        ++out[{v, sub_position(e.type, e.nei)}];
    }
    return out;
}

NeiSub pair_at(const Cycle& c, size_t i) { return {std::min(c[i - 1], c[i + 1]), std::max(c[i - 1], c[i + 1])}; }

std::map<SubKey, int> pattern_sub_counts(const CyclePattern& p, const TypeSpace& ts, int n) {
    std::map<SubKey, int> out;
    size_t j = 0;
    for (size_t i = 1; i + 1 < p.cycle.size(); ++i) {
        if (p.cycle[i] < n) continue;
        int v = p.pa[j++];
        ++out[{v, sub_position(ts.ver[static_cast<size_t>(v)], pair_at(p.cycle, i))}];
    }
    return out;
}

void normalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
    std::vector<Term> out;
    for (const auto& t : terms) {
        if (!out.empty() && out.back().var == t.var) out.back().coef += t.coef;
        else out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coef == 0; }), out.end());
    terms = std::move(out);
}

}  // namespace

IlpSystem build_ilp_system(const ExplorationInstance& inst, const FptContext& ctx, const TypeSpace& ts) {
    IlpSystem sys;
    const int nv = static_cast<int>(ts.ver.size());
    const int nr = static_cast<int>(ts.rob.size());
    const int nc = static_cast<int>(ts.cyc.size());
    const int n = ctx.g.n();
    for (int i = 0; i < nv; ++i) sys.variables.push_back(ver_var(i));
    for (int i = 0; i < nr; ++i) sys.variables.push_back(rob_var(i));
    for (int i = 0; i < nc; ++i) sys.variables.push_back(cyc_var(i));
    auto rv = [&](int r) { return nv + r; };
    auto cv = [&](int c) { return nv + nr + c; };
    sys.bud = ts.rob_bud;
    sys.cyc_bud = ts.rob_cyc_bud;

    auto add = [&](const char* tag, std::vector<Term> terms, Rel rel, long long rhs) {
        normalize(terms);
        sys.constraints.push_back({tag, std::move(terms), rel, rhs});
    };

    {
        std::vector<Term> t;
        for (int r = 0; r < nr; ++r) t.push_back({rv(r), 1});
        add("eq1", t, Rel::Eq, inst.k);
    }
    for (size_t c = 0; c < ctx.eq.classes.size(); ++c) {
        std::vector<Term> t;
        for (int v = 0; v < nv; ++v)
            if (ts.ver[static_cast<size_t>(v)].class_id == static_cast<int>(c)) t.push_back({v, 1});
        add("eq2", t, Rel::Eq, static_cast<long long>(ctx.eq.classes[c].members.size()));
    }

    // eq3 rows: every sub-multiset of a vertex type is handed out at least x_VerTyp times
    std::map<SubKey, std::vector<Term>> eq3;
    for (int v = 0; v < nv; ++v)
        for (size_t s = 0; s < ts.ver[static_cast<size_t>(v)].nei_subsets.size(); ++s)
            eq3[{v, static_cast<int>(s)}].push_back({v, -1});
    for (int r = 0; r < nr; ++r)
        for (const auto& [key, cnt] : robot_sub_counts(ts.rob[static_cast<size_t>(r)], ts))
            eq3[key].push_back({rv(r), cnt});
    std::vector<std::map<SubKey, int>> pat_counts;
    for (const auto& p : ts.patterns) pat_counts.push_back(pattern_sub_counts(p, ts, n));
    for (int q = 0; q < nc; ++q)
        for (const auto& [key, cnt] : pat_counts[static_cast<size_t>(ts.cyc[static_cast<size_t>(q)].first)])
            eq3[key].push_back({cv(q), cnt});
    for (auto& [key, terms] : eq3) add("eq3", std::move(terms), Rel::Ge, 0);

    // eq4 rows: cover-internal edges
    for (const auto& [e, m] : ctx.g.edges()) {
        if (!ctx.vc.contains(e.first) || !ctx.vc.contains(e.second)) continue;
        std::vector<Term> t;
        for (int r = 0; r < nr; ++r)
            for (const auto& [ce, cm] : ts.rob[static_cast<size_t>(r)].cc)
                if (ce == e) t.push_back({rv(r), 1});
        for (int q = 0; q < nc; ++q) {
            const auto& c = ts.patterns[static_cast<size_t>(ts.cyc[static_cast<size_t>(q)].first)].cycle;
            for (size_t i = 0; i + 1 < c.size(); ++i)
                if (make_edge(c[i], c[i + 1]) == e) {
                    t.push_back({cv(q), 1});
                    break;
                }
        }
        add("eq4", t, Rel::Ge, 1);
    }

    // eq5 and eq6 rows per robot type
    const auto lengths = counted_lengths(ctx.vc.size());
    std::vector<std::vector<int>> cyc_of_rob(static_cast<size_t>(nr));
    for (int q = 0; q < nc; ++q) cyc_of_rob[static_cast<size_t>(ts.cyc[static_cast<size_t>(q)].second)].push_back(q);
    auto len_of = [&](int q) {
        return static_cast<int>(ts.patterns[static_cast<size_t>(ts.cyc[static_cast<size_t>(q)].first)].cycle.size()) - 1;
    };
    for (int r = 0; r < nr; ++r) {
        const auto& rt = ts.rob[static_cast<size_t>(r)];
        for (int j : lengths) {
            std::vector<Term> t;
            for (int q : cyc_of_rob[static_cast<size_t>(r)])
                if (len_of(q) == j) t.push_back({cv(q), 1});
            int nj = static_cast<size_t>(j) < rt.num_of_cyc.size() ? rt.num_of_cyc[static_cast<size_t>(j)] : 0;
            t.push_back({rv(r), -nj});
            add("eq5", t, Rel::Eq, 0);
        }
    }
    for (int r = 0; r < nr; ++r) {
        std::vector<Term> t;
        for (int q : cyc_of_rob[static_cast<size_t>(r)])
            if (len_of(q) == 4) t.push_back({cv(q), 4});
        t.push_back({rv(r), -ts.rob_cyc_bud[static_cast<size_t>(r)]});
        add("eq6", t, Rel::Le, 0);
    }
    return sys;
}

IlpAssignment witness_from_solution(const std::vector<ValidPair>& pairs, const FptContext& ctx, const TypeSpace& ts) {
    const size_t nv = ts.ver.size(), nr = ts.rob.size(), nc = ts.cyc.size();
    IlpAssignment a;
    for (size_t i = 0; i < nv; ++i) a.names.push_back(ver_var(static_cast<int>(i)));
    for (size_t i = 0; i < nr; ++i) a.names.push_back(rob_var(static_cast<int>(i)));
    for (size_t i = 0; i < nc; ++i) a.names.push_back(cyc_var(static_cast<int>(i)));
    a.values.assign(nv + nr + nc, 0);

    for (Vertex u = 0; u < ctx.g.n(); ++u) {
        if (ctx.vc.contains(u)) continue;
        int v = ts.find_ver(derive_vertex_type(u, pairs, ctx));
        if (v < 0) throw PreconditionViolated("derived vertex type of " + std::to_string(u) + " not enumerated");
        ++a.values[static_cast<size_t>(v)];
    }
    for (size_t i = 0; i < pairs.size(); ++i) {
        int r = ts.find_rob(derive_robot_type(static_cast<int>(i), pairs, ctx));
        if (r < 0) throw PreconditionViolated("derived robot type of robot " + std::to_string(i + 1) + " not enumerated");
        ++a.values[nv + static_cast<size_t>(r)];
        for (const auto& c : pairs[i].cycles) {
            int q = ts.find_cyc(derive_cycle_type(static_cast<int>(i), c, pairs, ctx));
            if (q < 0) throw PreconditionViolated("derived cycle type not enumerated");
            ++a.values[nv + nr + static_cast<size_t>(q)];
        }
    }
    return a;
}

IlpAssignment witness_from_solution(const Solution& sol, const FptContext& ctx, const TypeSpace& ts,
                                    std::vector<ValidPair>* pairs_out) {
    std::vector<ValidPair> pairs;
    for (const auto& m : sol.multisets) pairs.push_back(decompose_valid_pair(cap_multiplicity(m), ctx));
    auto a = witness_from_solution(pairs, ctx, ts);
    if (pairs_out) *pairs_out = std::move(pairs);
    return a;
}

CheckResult check_assignment(const IlpSystem& sys, const IlpAssignment& a) {
    if (a.names.size() != a.values.size()) throw DomainMismatch("assignment names and values differ in length");
    std::map<std::string, long long> val;
    for (size_t i = 0; i < a.names.size(); ++i)
        if (!val.emplace(a.names[i], a.values[i]).second) throw DomainMismatch("duplicate variable " + a.names[i]);
    if (val.size() != sys.variables.size()) throw DomainMismatch("assignment domain differs from the system");
    std::vector<long long> x;
    for (const auto& name : sys.variables) {
        auto it = val.find(name);
        if (it == val.end()) throw DomainMismatch("variable " + name + " missing from assignment");
        if (it->second < 0) throw DomainMismatch("negative value for " + name);
        x.push_back(it->second);
    }
    CheckResult res;
    for (size_t i = 0; i < sys.constraints.size(); ++i) {
        const auto& c = sys.constraints[i];
        long long lhs = 0;
        for (const auto& t : c.terms) lhs += t.coef * x[static_cast<size_t>(t.var)];
        bool ok = c.rel == Rel::Eq ? lhs == c.rhs : c.rel == Rel::Le ? lhs <= c.rhs : lhs >= c.rhs;
        if (!ok) res.violated.push_back(static_cast<int>(i));
    }
    res.ok = res.violated.empty();
    return res;
}

std::vector<Multigraph> reconstruct_solution(const IlpSystem& sys, const IlpAssignment& a,
                                             const ExplorationInstance& inst, const FptContext& ctx,
                                             const TypeSpace& ts) {
    const size_t nv = ts.ver.size(), nr = ts.rob.size(), nc = ts.cyc.size();
    if (sys.variables.size() != nv + nr + nc) throw DomainMismatch("system does not match the type space");
    if (!check_assignment(sys, a).ok) throw PreconditionViolated("assignment does not satisfy the system");
    const int n = ctx.g.n();
    std::map<std::string, long long> byname;
    for (size_t i = 0; i < a.names.size(); ++i) byname.emplace(a.names[i], a.values[i]);
    std::vector<long long> x;
    for (const auto& name : sys.variables) x.push_back(byname.at(name));
    auto xv = [&](size_t i) { return x[i]; };
    auto xr = [&](size_t i) { return x[nv + i]; };
    auto xc = [&](size_t i) { return x[nv + nr + i]; };

    // vertex types to class members, ascending on both sides
    std::vector<std::vector<Vertex>> of_type(nv);
    for (size_t c = 0; c < ctx.eq.classes.size(); ++c) {
        const auto& members = ctx.eq.classes[c].members;
        size_t next = 0;
        for (size_t v = 0; v < nv; ++v) {
            if (ts.ver[v].class_id != static_cast<int>(c)) continue;
            for (long long t = 0; t < xv(v); ++t) {
                if (next >= members.size()) throw InfeasibleAllocation("too many vertices of class " + std::to_string(c));
                of_type[v].push_back(members[next++]);
            }
        }
        if (next != members.size()) throw InfeasibleAllocation("class " + std::to_string(c) + " not fully typed");
    }

    // robot types to robots
    std::vector<int> type_of_robot;
    std::vector<std::vector<int>> robots_of(nr);
    for (size_t r = 0; r < nr; ++r)
        for (long long t = 0; t < xr(r); ++t) {
            robots_of[r].push_back(static_cast<int>(type_of_robot.size()));
            type_of_robot.push_back(static_cast<int>(r));
        }
    if (static_cast<int>(type_of_robot.size()) != inst.k) throw InfeasibleAllocation("robot count mismatch");

    // hand out sub-multisets: robots first, then cycle instances, each in ascending order
    std::map<SubKey, long long> handed;
    auto take = [&](int v, const NeiSub& s) -> Vertex {
        SubKey key{v, sub_position(ts.ver[static_cast<size_t>(v)], s)};
        long long q = handed[key]++;
        const auto& pool = of_type[static_cast<size_t>(v)];
        if (pool.empty()) return ctx.eq.classes[static_cast<size_t>(ts.ver[static_cast<size_t>(v)].class_id)].members.front();
        return pool[static_cast<size_t>(q % static_cast<long long>(pool.size()))];
    };

    std::vector<Multigraph> out(static_cast<size_t>(inst.k), Multigraph(n));
    for (int i = 0; i < inst.k; ++i) {
        const auto& rt = ts.rob[static_cast<size_t>(type_of_robot[static_cast<size_t>(i)])];
        for (const auto& [e, m] : rt.cc)
            if (e.first < n && e.second < n) out[static_cast<size_t>(i)].add_edge(e.first, e.second, m);
        for (const auto& en : rt.alloc) {
            Vertex u = take(ts.find_ver(en.type), en.nei);
            for (Vertex w : en.nei) out[static_cast<size_t>(i)].add_edge(u, w);
        }
    }

    std::map<std::pair<int, int>, long long> placed;  // (robot type, length) -> instances so far
    for (size_t q = 0; q < nc; ++q) {
        const auto& [p, r] = ts.cyc[q];
        const auto& pat = ts.patterns[static_cast<size_t>(p)];
        const int len = static_cast<int>(pat.cycle.size()) - 1;
        const auto& hosts = robots_of[static_cast<size_t>(r)];
        for (long long t = 0; t < xc(q); ++t) {
            Cycle c = pat.cycle;
            size_t j = 0;
            for (size_t i = 1; i + 1 < c.size(); ++i) {
                if (c[i] < n) continue;
                c[i] = take(pat.pa[j++], pair_at(pat.cycle, i));
            }
            if (hosts.empty()) throw InfeasibleAllocation("cycle type without robots of its robot type");
            long long idx = placed[{r, len}]++;
            size_t host;
            if (len == 4) {
                host = static_cast<size_t>(idx % static_cast<long long>(hosts.size()));
            } else {
                int nj = ts.rob[static_cast<size_t>(r)].num_of_cyc[static_cast<size_t>(len)];
                if (nj == 0 || idx / nj >= static_cast<long long>(hosts.size()))
                    throw InfeasibleAllocation("too many cycles of length " + std::to_string(len));
                host = static_cast<size_t>(idx / nj);
            }
            out[static_cast<size_t>(hosts[host])] += cycle_edges(c);
        }
    }
    for (size_t r = 0; r < nr; ++r) {
        if (robots_of[r].empty()) continue;
        for (int j : counted_lengths(ctx.vc.size())) {
            long long want = static_cast<long long>(ts.rob[r].num_of_cyc[static_cast<size_t>(j)]) *
                             static_cast<long long>(robots_of[r].size());
            auto it = placed.find({static_cast<int>(r), j});
            if ((it == placed.end() ? 0 : it->second) != want)
                throw InfeasibleAllocation("cycle count mismatch for a robot type");
        }
    }
    for (auto& m : out) m.resize(n);
    return out;
}

// ---------------------------------------------------------------------------
// text formats

static const char* rel_text(Rel r) { return r == Rel::Le ? "<=" : r == Rel::Eq ? "=" : ">="; }

std::string export_ilp(const IlpSystem& sys) {
    std::ostringstream os;
    os << "ilp " << sys.variables.size() << " " << sys.constraints.size() << "\n";
    for (const auto& v : sys.variables) os << "var " << v << "\n";
    for (const auto& c : sys.constraints) {
        os << "c " << c.tag << " :";
        if (c.terms.empty()) os << " 0";
        for (size_t i = 0; i < c.terms.size(); ++i) {
            if (i) os << " +";
            os << " " << c.terms[i].coef << " " << sys.variables[static_cast<size_t>(c.terms[i].var)];
        }
        os << " " << rel_text(c.rel) << " " << c.rhs << "\n";
    }
    return os.str();
}

namespace {

long long parse_int(const std::string& tok, int line) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw ParseError(line, "bad integer '" + tok + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError(line, "bad integer '" + tok + "'");
    } catch (const std::out_of_range&) {
        throw ParseError(line, "integer out of range '" + tok + "'");
    }
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

bool parse_rel(const std::string& t, Rel& r) {
    if (t == "<=") r = Rel::Le;
    else if (t == "=") r = Rel::Eq;
    else if (t == ">=") r = Rel::Ge;
    else return false;
    return true;
}

}  // namespace

IlpSystem parse_ilp(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int ln = 0;
    IlpSystem sys;
    if (!std::getline(is, line)) throw ParseError(1, "empty ILP text");
    ++ln;
    auto head = split(line);
    if (head.size() != 3 || head[0] != "ilp") throw ParseError(ln, "expected 'ilp <vars> <constraints>'");
    long long nvar = parse_int(head[1], ln), ncon = parse_int(head[2], ln);
    if (nvar < 0 || ncon < 0) throw ParseError(ln, "negative count");
    std::map<std::string, int> index;
    while (std::getline(is, line)) {
        ++ln;
        auto tok = split(line);
        if (tok.empty()) throw ParseError(ln, "blank line");
        if (tok[0] == "var") {
            if (tok.size() != 2) throw ParseError(ln, "expected 'var <name>'");
            if (!sys.constraints.empty()) throw ParseError(ln, "variable after constraints");
            if (!index.emplace(tok[1], static_cast<int>(sys.variables.size())).second)
                throw ParseError(ln, "duplicate variable " + tok[1]);
            sys.variables.push_back(tok[1]);
        } else if (tok[0] == "c") {
            if (tok.size() < 6 || tok[2] != ":") throw ParseError(ln, "malformed constraint");
            Constraint c;
            c.tag = tok[1];
            if (c.tag.size() != 3 || c.tag.compare(0, 2, "eq") != 0 || c.tag[2] < '1' || c.tag[2] > '6')
                throw ParseError(ln, "unknown constraint tag '" + c.tag + "'");
            size_t i = 3;
            if (tok[i] == "0" && tok.size() == 6) {
                i = 4;
            } else {
                while (true) {
                    if (i + 1 >= tok.size()) throw ParseError(ln, "truncated term");
                    long long coef = parse_int(tok[i], ln);
                    auto it = index.find(tok[i + 1]);
                    if (it == index.end()) throw ParseError(ln, "unknown variable " + tok[i + 1]);
                    c.terms.push_back({it->second, coef});
                    i += 2;
                    if (i < tok.size() && tok[i] == "+") {
                        ++i;
                        continue;
                    }
                    break;
                }
            }
            if (i + 2 != tok.size() || !parse_rel(tok[i], c.rel)) throw ParseError(ln, "expected '<rel> <rhs>'");
            c.rhs = parse_int(tok[i + 1], ln);
            sys.constraints.push_back(std::move(c));
        } else {
            throw ParseError(ln, "unknown line kind '" + tok[0] + "'");
        }
    }
    if (static_cast<long long>(sys.variables.size()) != nvar) throw ParseError(ln, "variable count mismatch");
    if (static_cast<long long>(sys.constraints.size()) != ncon) throw ParseError(ln, "constraint count mismatch");
    return sys;
}

std::string export_assignment(const IlpAssignment& a) {
    std::ostringstream os;
    os << "assign " << a.names.size() << "\n";
    for (size_t i = 0; i < a.names.size(); ++i) os << a.names[i] << " " << a.values[i] << "\n";
    return os.str();
}

IlpAssignment parse_assignment(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int ln = 0;
    IlpAssignment a;
    if (!std::getline(is, line)) throw ParseError(1, "empty assignment text");
    ++ln;
    auto head = split(line);
    if (head.size() != 2 || head[0] != "assign") throw ParseError(ln, "expected 'assign <count>'");
    long long count = parse_int(head[1], ln);
    while (std::getline(is, line)) {
        ++ln;
        auto tok = split(line);
        if (tok.size() != 2) throw ParseError(ln, "expected '<variable> <value>'");
        a.names.push_back(tok[0]);
        a.values.push_back(parse_int(tok[1], ln));
    }
    if (static_cast<long long>(a.names.size()) != count) throw ParseError(ln, "assignment count mismatch");
    return a;
}

}  // namespace cge
