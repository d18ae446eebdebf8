#pragma once

#include <string>
#include <vector>

#include "minsurf/fields.hpp"

namespace minsurf {

// CSV layout for 1D profiles: header "x,value", one row per node,
// 17 significant digits (doubles round-trip exactly).
void write_profile_csv(const std::string& path, const SampledFunction1D& f,
                       const std::string& value_name = "value");
SampledFunction1D read_profile_csv(const std::string& path);

std::string format_g17(double v);

void write_text_file(const std::string& path, const std::string& content);

struct Evolution;       // evolution.hpp
struct GraphEvolution;  // graph_solver.hpp
struct Embedding;       // reconstruction.hpp

// One time level of a psi evolution: "r,psi,lambda,nu,source".
void write_snapshot_csv(const std::string& path, const Evolution& ev, int level);
// One time level of a graph evolution: "x,phi,phi_t".
void write_graph_snapshot_csv(const std::string& path, const GraphEvolution& ev, int level);
// Full embedding sample: "u,v,x0,x1,x2".
void write_embedding_csv(const std::string& path, const Embedding& e);

}  // namespace minsurf
