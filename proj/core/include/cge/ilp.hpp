#pragma once

#include <string>
#include <vector>

#include "cge/euler.hpp"
#include "cge/types.hpp"
#include "cge/valid_pair.hpp"

namespace cge {

enum class Rel { Le, Eq, Ge };

struct Term {
    int var = 0;
    long long coef = 0;
    bool operator==(const Term&) const = default;
};

struct Constraint {
    std::string tag;  // eq1 .. eq6
    std::vector<Term> terms;
    Rel rel = Rel::Eq;
    long long rhs = 0;
    bool operator==(const Constraint&) const = default;
};

struct IlpSystem {
    std::vector<std::string> variables;
    std::vector<Constraint> constraints;
    // per robot type (empty for parsed systems)
    std::vector<int> bud;
    std::vector<int> cyc_bud;

    int find_variable(const std::string& name) const;
};

struct IlpAssignment {
    std::vector<std::string> names;
    std::vector<long long> values;

    long long value_of(const std::string& name) const;
};

struct CheckResult {
    bool ok = false;
    std::vector<int> violated;  // constraint indices
};

std::string ver_var(int i);
std::string rob_var(int i);
std::string cyc_var(int i);

IlpSystem build_ilp_system(const ExplorationInstance& inst, const FptContext& ctx, const TypeSpace& ts);

// Counts of derived types (RobExpToILP). Throws PreconditionViolated if a derived
// type is missing from the enumerated space.
IlpAssignment witness_from_solution(const std::vector<ValidPair>& pairs, const FptContext& ctx,
                                    const TypeSpace& ts);
// Convenience: cap multiplicities, decompose each robot multiset, then count.
IlpAssignment witness_from_solution(const Solution& sol, const FptContext& ctx, const TypeSpace& ts,
                                    std::vector<ValidPair>* pairs_out = nullptr);

CheckResult check_assignment(const IlpSystem& sys, const IlpAssignment& a);

std::vector<Multigraph> reconstruct_solution(const IlpSystem& sys, const IlpAssignment& a,
                                             const ExplorationInstance& inst, const FptContext& ctx,
                                             const TypeSpace& ts);

std::string export_ilp(const IlpSystem& sys);
IlpSystem parse_ilp(const std::string& text);

std::string export_assignment(const IlpAssignment& a);
IlpAssignment parse_assignment(const std::string& text);

}  // namespace cge
