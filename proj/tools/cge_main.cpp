#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cge/approx.hpp"
#include "cge/errors.hpp"
#include "cge/exact.hpp"
#include "cge/ilp.hpp"
#include "cge/io.hpp"
#include "cge/reductions.hpp"
#include "cge/types.hpp"

namespace {

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kGuard = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

cge::ExplorationInstance load_cge(const std::string& path) {
    auto doc = cge::read_instance_file(path);
    if (doc.kind != cge::InstanceDocument::Kind::Cge) throw UsageError(path + ": expected a cge instance");
    return doc.cge;
}

cge::BinPackingInstance load_binpack(const std::string& path) {
    auto doc = cge::read_instance_file(path);
    if (doc.kind != cge::InstanceDocument::Kind::Binpack) throw UsageError(path + ": expected a binpack instance");
    return doc.binpack;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

std::vector<cge::Vertex> parse_vertex_list(const std::string& s) {
    std::vector<cge::Vertex> out;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw UsageError("bad vertex '" + tok + "' in --vc");
        }
        if (pos != tok.size()) throw UsageError("bad vertex '" + tok + "' in --vc");
        out.push_back(v);
    }
    return out;
}

cge::VertexCover make_cover(const cge::Multigraph& g, const std::vector<cge::Vertex>& verts) {
    cge::VertexCover vc;
    vc.vertices = verts;
    std::sort(vc.vertices.begin(), vc.vertices.end());
    vc.vertices.erase(std::unique(vc.vertices.begin(), vc.vertices.end()), vc.vertices.end());
    for (cge::Vertex v : vc.vertices)
        if (v < 0 || v >= g.n()) throw UsageError("--vc vertex out of range");
    if (!cge::is_vertex_cover(g, vc.vertices)) throw cge::NotACover("--vc is not a vertex cover");
    return vc;
}

// The FPT pipeline always works on the connected 2-approximate cover.
cge::FptContext fpt_context(const cge::ExplorationInstance& inst) {
    auto vc = cge::connect_cover(inst.graph, cge::vertex_cover_2approx(inst.graph), inst.v_init);
    return cge::FptContext::make(inst.graph, vc, inst.v_init);
}

int require_budget(const cge::ExplorationInstance& inst) {
    if (!inst.budget) throw UsageError("instance has no budget line");
    return *inst.budget;
}

int cmd_solve_approx(const std::string& file, const std::string& vc_arg) {
    auto inst = load_cge(file);
    cge::VertexCover vc = vc_arg.empty() ? cge::vertex_cover_2approx(inst.graph)
                                         : make_cover(inst.graph, parse_vertex_list(vc_arg));
    auto sol = cge::approx_solve(inst, vc);
    std::cout << cge::format_solution(sol);
    return kOk;
}

int cmd_solve_exact(const std::string& file, int max_budget, std::uint64_t node_limit) {
    auto inst = load_cge(file);
    cge::SearchConfig cfg;
    cfg.max_budget = max_budget;
    cfg.node_limit = node_limit;
    if (inst.budget) {
        auto res = cge::exact_decide(inst, *inst.budget, cfg);
        if (!res.yes) {
            std::cout << "no\n";
            return kNo;
        }
        std::cout << "yes\n" << cge::format_solution(*res.witness);
        return kOk;
    }
    auto res = cge::exact_optimum(inst, cfg);
    std::cout << cge::format_solution(res.witness);
    return kOk;
}

int cmd_verify(const std::string& inst_file, const std::string& sol_file) {
    auto inst = load_cge(inst_file);
    auto sol = cge::parse_solution(cge::read_file(sol_file));
    auto report = cge::verify_solution(inst, sol);
    std::cout << report.describe();
    return report.ok ? kOk : kNo;
}

int cmd_reduce_bin(const std::string& file, bool to_exact, bool to_cge) {
    auto bp = load_binpack(file);
    if (!to_exact && !to_cge) {
        bool yes = cge::brute_binpacking(bp);
        std::cout << (yes ? "yes\n" : "no\n");
        return yes ? kOk : kNo;
    }
    if (to_exact) {
        try {
            bp = cge::binpacking_to_exact(bp);
        } catch (const cge::ImmediateNo& e) {
            std::cout << "no\n";
            std::cerr << e.what() << "\n";
            return kNo;
        }
    }
    if (to_cge) std::cout << cge::format_instance(cge::bin_to_rob(bp));
    else std::cout << cge::format_binpacking(bp);
    return kOk;
}

int cmd_build_ilp(const std::string& file, const std::string& out) {
    auto inst = load_cge(file);
    int budget = require_budget(inst);
    auto ctx = fpt_context(inst);
    auto ts = cge::enumerate_type_space(ctx, budget, inst.k);
    auto sys = cge::build_ilp_system(inst, ctx, ts);
    write_file(out, cge::export_ilp(sys));
    std::cout << "variables " << sys.variables.size() << "\nconstraints " << sys.constraints.size() << "\n";
    return kOk;
}

int cmd_derive_witness(const std::string& inst_file, const std::string& sol_file, const std::string& out) {
    auto inst = load_cge(inst_file);
    int budget = require_budget(inst);
    auto sol = cge::parse_solution(cge::read_file(sol_file));
    auto report = cge::verify_solution(inst, sol);
    if (!report.ok) {
        std::cout << report.describe();
        return kNo;
    }
    auto ctx = fpt_context(inst);
    auto ts = cge::enumerate_type_space(ctx, budget, inst.k);
    auto sys = cge::build_ilp_system(inst, ctx, ts);
    auto a = cge::witness_from_solution(sol, ctx, ts);
    write_file(out, cge::export_assignment(a));
    auto check = cge::check_assignment(sys, a);
    std::cout << (check.ok ? "satisfied\n" : "violated\n");
    return check.ok ? kOk : kNo;
}

int report_check(const cge::IlpSystem& sys, const cge::CheckResult& r) {
    if (r.ok) {
        std::cout << "satisfied\n";
        return kOk;
    }
    std::cout << "violated " << r.violated.size() << "\n";
    for (int i : r.violated) std::cout << "constraint " << i << " " << sys.constraints[static_cast<size_t>(i)].tag << "\n";
    return kNo;
}

int cmd_check_witness(const std::string& ilp_file, const std::string& assign_file) {
    auto sys = cge::parse_ilp(cge::read_file(ilp_file));
    auto a = cge::parse_assignment(cge::read_file(assign_file));
    try {
        return report_check(sys, cge::check_assignment(sys, a));
    } catch (const cge::DomainMismatch& e) {
        std::cout << "mismatch: " << e.what() << "\n";
        return kNo;
    }
}

int cmd_reconstruct(const std::string& ilp_file, const std::string& assign_file, const std::string& inst_file) {
    auto inst = load_cge(inst_file);
    int budget = require_budget(inst);
    auto given = cge::read_file(ilp_file);
    auto a = cge::parse_assignment(cge::read_file(assign_file));
    cge::parse_ilp(given);
    auto ctx = fpt_context(inst);
    auto ts = cge::enumerate_type_space(ctx, budget, inst.k);
    auto sys = cge::build_ilp_system(inst, ctx, ts);
    if (cge::export_ilp(sys) != given) throw UsageError(ilp_file + " was not built from " + inst_file);
    std::vector<cge::Multigraph> multisets;
    try {
        multisets = cge::reconstruct_solution(sys, a, inst, ctx, ts);
    } catch (const cge::DomainMismatch& e) {
        std::cout << "mismatch: " << e.what() << "\n";
        return kNo;
    } catch (const cge::PreconditionViolated& e) {
        std::cout << "unsatisfied: " << e.what() << "\n";
        return kNo;
    } catch (const cge::InfeasibleAllocation& e) {
        std::cout << "infeasible: " << e.what() << "\n";
        return kNo;
    }
    auto sol = cge::solution_from_multisets(multisets, inst.v_init);
    std::cout << cge::format_solution(sol);
    return cge::verify_solution(inst, sol).ok ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collective graph exploration toolkit"};
    app.require_subcommand(1);

    std::string file, file2, file3, out, vc_arg;
    int max_budget = cge::SearchConfig{}.max_budget;
    std::uint64_t node_limit = cge::SearchConfig{}.node_limit;
    bool to_exact = false, to_cge = false;

    auto* approx = app.add_subcommand("solve-approx", "run the vertex-cover approximation");
    approx->add_option("file", file, "instance file")->required();
    approx->add_option("--vc", vc_arg, "comma-separated vertex cover");

    auto* exact = app.add_subcommand("solve-exact", "exact search (decides when the instance has a budget)");
    exact->add_option("file", file, "instance file")->required();
    exact->add_option("--max-budget", max_budget, "largest budget tried")->check(CLI::PositiveNumber);
    exact->add_option("--node-limit", node_limit, "search node limit")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "check a solution against an instance");
    verify->add_option("instance", file, "instance file")->required();
    verify->add_option("solution", file2, "solution file")->required();

    auto* reduce = app.add_subcommand("reduce-bin", "bin-packing reductions");
    reduce->add_option("file", file, "binpack file")->required();
    reduce->add_flag("--to-exact", to_exact, "pad to an exact instance");
    reduce->add_flag("--to-cge", to_cge, "emit the tree-of-stars exploration instance");

    auto* build = app.add_subcommand("build-ilp", "export the type-count ILP");
    build->add_option("file", file, "instance file with a budget")->required();
    build->add_option("-o", out, "output path")->required();

    auto* derive = app.add_subcommand("derive-witness", "count the types of a solution");
    derive->add_option("instance", file, "instance file with a budget")->required();
    derive->add_option("solution", file2, "solution file")->required();
    derive->add_option("-o", out, "output path")->required();

    auto* check = app.add_subcommand("check-witness", "check an assignment against an ILP");
    check->add_option("ilp", file, "ILP file")->required();
    check->add_option("assign", file2, "assignment file")->required();

    auto* recon = app.add_subcommand("reconstruct", "rebuild robot walks from an assignment");
    recon->add_option("ilp", file, "ILP file")->required();
    recon->add_option("assign", file2, "assignment file")->required();
    recon->add_option("instance", file3, "instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*approx) return cmd_solve_approx(file, vc_arg);
        if (*exact) return cmd_solve_exact(file, max_budget, node_limit);
        if (*verify) return cmd_verify(file, file2);
        if (*reduce) return cmd_reduce_bin(file, to_exact, to_cge);
        if (*build) return cmd_build_ilp(file, out);
        if (*derive) return cmd_derive_witness(file, file2, out);
        if (*check) return cmd_check_witness(file, file2);
        if (*recon) return cmd_reconstruct(file, file2, file3);
    } catch (const cge::ResourceGuard& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kGuard;
    } catch (const cge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
