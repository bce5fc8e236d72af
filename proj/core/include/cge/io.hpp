#pragma once

#include <string>
#include <variant>

#include "cge/euler.hpp"
#include "cge/multigraph.hpp"
#include "cge/reductions.hpp"

namespace cge {

struct InstanceDocument {
    enum class Kind { Cge, Binpack };
    Kind kind = Kind::Cge;
    ExplorationInstance cge;
    BinPackingInstance binpack;
    std::string source_path;
};

InstanceDocument parse_instance(const std::string& text);
InstanceDocument read_instance_file(const std::string& path);

std::string format_instance(const ExplorationInstance& inst);
std::string format_binpacking(const BinPackingInstance& inst);

std::string format_solution(const Solution& sol);
Solution parse_solution(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace cge
