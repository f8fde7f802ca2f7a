#pragma once

#include <cmath>

#include "vbvr/gen/families/common.hpp"
#include "vbvr/gen/family.hpp"
#include "vbvr/solvers/digraph.hpp"

namespace vbvr::gen {

inline constexpr double kNodeRadius = 26.0;

/// G-31: minimum-hop navigation along directed edges.
class DigraphNavGenerator final : public FamilyGenerator {
 public:
  DigraphNavGenerator() {
    spec_.task = TaskId{"G-31", Faculty::Spatiality};
    spec_.num_strata = 3;
    spec_.int_ranges["num_nodes"] = {5, 8};
    spec_.prompt_template =
        "The scene shows a network of nodes connected by directed edges (edges with arrows "
        "indicating direction) with a green starting node, a red ending node, and a blue "
        "triangular agent positioned at the green starting node. The agent can only move along "
        "edges in the direction they point (from the source node to the target node, cannot move "
        "backwards), moving from one node to an adjacent node each step. Move the blue "
        "triangular agent from the green starting node to the red ending node along the path "
        "with the minimum number of steps.";
    spec_.rubric = {{"shortest_path", 0.40},
                    {"direction_compliance", 0.35},
                    {"motion_legality", 0.15},
                    {"graph_fidelity", 0.10}};
  }

  const FamilySpec& spec() const override { return spec_; }

  static solvers::DirectedGraph graph_from_params(const ParamAssignment& p) {
    solvers::DirectedGraph g;
    for (const auto& c : p.get_coords("layout")) g.layout.push_back({c.x, c.y});
    for (const auto& e : p.get_coords("edges")) {
      g.edges.insert({static_cast<int>(e.x), static_cast<int>(e.y)});
    }
    g.start = static_cast<int>(p.get_int("start"));
    g.goal = static_cast<int>(p.get_int("goal"));
    return g;
  }

  ParamAssignment sample_parameters(Rng& rng, int stratum) const override {
    static constexpr int kNodes[3][2] = {{5, 6}, {7, 7}, {8, 8}};
    for (int attempt = 0; attempt < kDrawAttemptBudget; ++attempt) {
      const int n = kNodes[stratum][rng.uniform_int(0, 1)];
      // 3x3 lattice of slots with jitter; 150 px spacing dominates the jitter
      std::vector<int> slots(9);
      for (int i = 0; i < 9; ++i) slots[static_cast<std::size_t>(i)] = i;
      rng.shuffle(slots);
      solvers::DirectedGraph g;
      for (int i = 0; i < n; ++i) {
        const int s = slots[static_cast<std::size_t>(i)];
        const double x = 106 + (s % 3) * 150 + static_cast<double>(rng.uniform_int(-18, 18));
        const double y = 106 + (s / 3) * 150 + static_cast<double>(rng.uniform_int(-18, 18));
        g.layout.push_back({x, y});
      }
      g.start = static_cast<int>(rng.uniform_int(0, n - 1));
      g.goal = static_cast<int>(rng.uniform_int(0, n - 1));
      if (g.start == g.goal) continue;

      // spine path of the intended length, then extra edges
      const int want = static_cast<int>(rng.uniform_int(2, std::min(4, n - 1)));
      std::vector<int> others;
      for (int i = 0; i < n; ++i) {
        if (i != g.start && i != g.goal) others.push_back(i);
      }
      rng.shuffle(others);
      std::vector<int> spine{g.start};
      for (int i = 0; i < want - 1; ++i) spine.push_back(others[static_cast<std::size_t>(i)]);
      spine.push_back(g.goal);
      for (std::size_t i = 0; i + 1 < spine.size(); ++i) g.edges.insert({spine[i], spine[i + 1]});
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a == b || g.has_edge(a, b) || g.has_edge(b, a)) continue;
          if (rng.chance(0.22)) g.edges.insert({a, b});
        }
      }

      if (!layout_separable(g)) continue;
      try {
        const auto path = solvers::digraph_shortest(g);
        if (path.size() < 3) continue;  // at least 2 hops
      } catch (const NoPathError&) {
        continue;
      }

      ParamAssignment p;
      p.difficulty_stratum = stratum;
      p.values["num_nodes"] = static_cast<std::int64_t>(n);
      p.values["start"] = static_cast<std::int64_t>(g.start);
      p.values["goal"] = static_cast<std::int64_t>(g.goal);
      std::vector<Coord> layout;
      for (const auto& np : g.layout) layout.push_back(Coord{np.x, np.y});
      p.values["layout"] = layout;
      std::vector<Coord> edges;
      for (const auto& [a, b] : g.edges) {
        edges.push_back(Coord{static_cast<double>(a), static_cast<double>(b)});
      }
      p.values["edges"] = edges;
      return p;
    }
    throw InfeasibleError("G-31: no feasible configuration found");
  }

  Trajectory solve(const ParamAssignment& p) const override {
    const auto path = solvers::digraph_shortest(graph_from_params(p));
    Trajectory t;
    t.step_semantics = "node-hop";
    for (int node : path) t.states.push_back(Json(node));
    return t;
  }

  render::SceneSpec build_scene(const ParamAssignment& p) const override {
    const auto g = graph_from_params(p);
    render::SceneSpec scene;
    int ei = 0;
    for (const auto& [a, b] : g.edges) {
      const auto& pa = g.layout[static_cast<std::size_t>(a)];
      const auto& pb = g.layout[static_cast<std::size_t>(b)];
      const double dx = pb.x - pa.x, dy = pb.y - pa.y;
      const double len = std::sqrt(dx * dx + dy * dy);
      const double ux = dx / len, uy = dy / len;
      scene.elements.push_back({"edge" + std::to_string(ei++),
                                render::ArrowShape{pa.x + ux * (kNodeRadius + 3),
                                                   pa.y + uy * (kNodeRadius + 3),
                                                   pb.x - ux * (kNodeRadius + 6),
                                                   pb.y - uy * (kNodeRadius + 6), 3, 14},
                                render::kBlack, 1, render::ElementRole::Annotation});
    }
    for (int i = 0; i < g.size(); ++i) {
      const auto& np = g.layout[static_cast<std::size_t>(i)];
      const render::Rgb fill =
          i == g.start ? render::kGreen : (i == g.goal ? render::kRed : render::kGridGray);
      scene.elements.push_back({"node" + std::to_string(i),
                                render::CircleShape{np.x, np.y, kNodeRadius}, fill, 2,
                                render::ElementRole::Solid});
    }
    scene.elements.push_back({"agent", agent_shape(g.layout[static_cast<std::size_t>(g.start)]),
                              render::kBlue, 5, render::ElementRole::Annotation});
    return scene;
  }

  std::vector<render::Keyframe> keyframes(const ParamAssignment& p,
                                          const Trajectory& t) const override {
    const auto g = graph_from_params(p);
    std::vector<render::Keyframe> kfs;
    for (const auto& state : t.states) {
      render::Keyframe kf;
      kf.poses["agent"] = agent_shape(g.layout[state.get<std::size_t>()]);
      kfs.push_back(std::move(kf));
    }
    return kfs;
  }

  bool check(const Sample& s, std::string& why) const override {
    const auto g = graph_from_params(s.params);
    const auto& states = s.solution.states;
    if (states.size() < 2) {
      why = "solution too short";
      return false;
    }
    if (states.front().get<int>() != g.start || states.back().get<int>() != g.goal) {
      why = "solution endpoints do not match start/goal";
      return false;
    }
    for (std::size_t i = 1; i < states.size(); ++i) {
      if (!g.has_edge(states[i - 1].get<int>(), states[i].get<int>())) {
        why = "solution hop is not a directed edge";
        return false;
      }
    }
    const auto optimal = solvers::digraph_shortest(g);
    if (states.size() != optimal.size()) {
      why = "solution hop count differs from the minimum";
      return false;
    }
    return true;
  }

  /// Upward-pointing triangle centered on the node.
  static render::PolyShape agent_shape(solvers::DirectedGraph::NodePos at) {
    const double r = kNodeRadius * 0.62;
    return render::PolyShape{{{at.x, at.y - r}, {at.x + 0.87 * r, at.y + 0.5 * r},
                              {at.x - 0.87 * r, at.y + 0.5 * r}}};
  }

 protected:
  FamilySpec& mutable_spec() override { return spec_; }

 private:
  /// Every edge must keep clear of non-endpoint nodes so track extraction
  /// never quantizes a passing agent onto an off-path node.
  static bool layout_separable(const solvers::DirectedGraph& g) {
    for (const auto& [a, b] : g.edges) {
      const auto& pa = g.layout[static_cast<std::size_t>(a)];
      const auto& pb = g.layout[static_cast<std::size_t>(b)];
      for (int w = 0; w < g.size(); ++w) {
        if (w == a || w == b) continue;
        const auto& pw = g.layout[static_cast<std::size_t>(w)];
        const double vx = pb.x - pa.x, vy = pb.y - pa.y;
        const double wx = pw.x - pa.x, wy = pw.y - pa.y;
        const double len2 = vx * vx + vy * vy;
        double t = len2 > 0 ? (wx * vx + wy * vy) / len2 : 0;
        t = std::clamp(t, 0.0, 1.0);
        const double dx = pw.x - (pa.x + t * vx), dy = pw.y - (pa.y + t * vy);
        if (std::sqrt(dx * dx + dy * dy) < kNodeRadius + 22) return false;
      }
    }
    return true;
  }

  FamilySpec spec_;
};

}  // namespace vbvr::gen
