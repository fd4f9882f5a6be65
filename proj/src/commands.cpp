#include "mop/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "json.hpp"

#include "mop/conditional.hpp"
#include "mop/document.hpp"
#include "mop/errors.hpp"
#include "mop/geometry.hpp"
#include "mop/oracle.hpp"

namespace mop {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r) { return to_string(r); }

Json point_json(const RationalPoint& x) {
  Json coords = Json::array();
  for (const auto& c : x.coords) coords.push_back(rational_json(c));
  return coords;
}

std::string point_text(const Poset& P, const RationalPoint& x) {
  std::string out;
  for (std::size_t p = 0; p < P.size(); ++p) {
    if (!out.empty()) out += ' ';
    out += P.element(p) + "=" + to_string(x[p]);
  }
  return out;
}

std::vector<std::string> block_members(const Poset& P, const std::vector<std::size_t>& block) {
  std::vector<std::string> names;
  for (std::size_t p : block) names.push_back(P.element(p));
  return names;
}

std::string partition_text(const Poset& P, const Partition& pi) {
  std::string out;
  for (const auto& block : pi.blocks()) {
    if (!out.empty()) out += " | ";
    for (std::size_t i = 0; i < block.size(); ++i) out += (i ? " " : "") + P.element(block[i]);
  }
  return out;
}

Json blocks_json(const Poset& P, const Partition& pi, bool free_only) {
  Json blocks = Json::array();
  for (std::size_t b = 0; b < pi.block_count(); ++b)
    if (!free_only || pi.is_free(b)) blocks.push_back(block_members(P, pi.block(b)));
  return blocks;
}

Json cover_json(const Poset& P, const Cover& c) { return {P.element(c.first), P.element(c.second)}; }

std::string cover_text(const Poset& P, const Cover& c) {
  return P.element(c.first) + "<" + P.element(c.second);
}

Json describe_json(const MarkedPoset& M) {
  const Poset& P = M.poset();
  Json j;
  j["elements"] = P.elements();
  j["covers"] = Json::array();
  for (const auto& c : P.covers()) j["covers"].push_back(cover_json(P, c));
  j["marks"] = Json::object();
  for (std::size_t a : M.marked_indices()) j["marks"][P.element(a)] = rational_json(M.mark(a));
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// A random point of O(M) that often lands on lower-dimensional faces.
RationalPoint random_point(const MarkedPoset& M, std::mt19937_64& rng) {
  const Poset& P = M.poset();
  std::vector<std::optional<Rational>> value(M.marks());
  for (std::size_t p : P.topological_order()) {
    if (value[p]) continue;
    std::optional<Rational> lo, hi;
    for (std::size_t r = 0; r < P.size(); ++r) {
      if (!value[r]) continue;
      if (P.less(r, p) && (!lo || *value[r] > *lo)) lo = *value[r];
      if (P.less(p, r) && (!hi || *value[r] < *hi)) hi = *value[r];
    }
    const auto roll = rng() % 4;
    if (lo && hi)
      value[p] = roll == 0 ? *lo : roll == 1 ? *hi : *lo + (*hi - *lo) * Rational(1 + rng() % 3, 4);
    else if (lo)
      value[p] = *lo + Rational(roll % 3);
    else if (hi)
      value[p] = *hi - Rational(roll % 3);
    else
      value[p] = Rational(roll % 3);
  }
  RationalPoint x;
  for (auto& v : value) x.coords.push_back(std::move(*v));
  return x;
}

struct Context {
  const Document& doc;
  const CommandOptions& options;
  std::ostream& out;
};

int cmd_check(const Context& ctx) {
  const MarkedPoset& M = ctx.doc.poset;
  const RegularityReport report = regularity_report(M);
  const bool pointed = is_pointed(M);
  const std::size_t dim = dimension(M);
  const std::size_t k = ctx.doc.conditions ? ctx.doc.conditions->size() : 0;
  if (ctx.options.json) {
    Json j = describe_json(M);
    j["strict"] = report.strict;
    j["regular"] = report.is_regular;
    j["pointed"] = pointed;
    j["dim"] = dim;
    j["conditions"] = k;
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }
  const Poset& P = M.poset();
  ctx.out << P.size() << " elements, " << P.covers().size() << " covers, "
          << M.marked_indices().size() << " marks, " << k << " conditions\n"
          << "strict: " << yes_no(report.strict) << "\n"
          << "no marked covers: " << yes_no(report.no_marked_covers) << "\n"
          << "single marked neighbours: " << yes_no(report.single_marked_neighbours) << "\n"
          << "regular: " << yes_no(report.is_regular) << "\n";
  for (const auto& c : report.redundant_covers) ctx.out << "  redundant cover " << cover_text(P, c) << "\n";
  ctx.out << "pointed: " << yes_no(pointed) << "\n"
          << "dimension: " << dim << "\n";
  return kExitOk;
}

int cmd_dim(const Context& ctx) {
  const std::size_t dim = dimension(ctx.doc.poset);
  std::optional<int> conditional_dim;
  if (ctx.doc.conditions)
    conditional_dim = oracle::affine_dimension(conditional_system(ctx.doc.poset, *ctx.doc.conditions));
  if (ctx.options.json) {
    Json j;
    j["dim"] = dim;
    if (conditional_dim) j["conditional_dim"] = *conditional_dim;
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << dim << "\n";
    if (conditional_dim) ctx.out << "with conditions: " << *conditional_dim << "\n";
  }
  return kExitOk;
}

int cmd_faces(const Context& ctx) {
  const MarkedPoset& M = ctx.doc.poset;
  const Poset& P = M.poset();
  const FaceLattice lattice = enumerate_face_partitions(M, ctx.options.max_elements);
  const auto f = lattice.f_vector();
  if (ctx.options.json) {
    Json j;
    j["f_vector"] = f;
    j["faces"] = Json::array();
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
      j["faces"].push_back({{"blocks", blocks_json(P, lattice.nodes[i], false)},
                            {"free_blocks", blocks_json(P, lattice.nodes[i], true)},
                            {"dim", lattice.dims[i]}});
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }
  ctx.out << lattice.nodes.size() << " faces, f-vector (";
  for (std::size_t d = 0; d < f.size(); ++d) ctx.out << (d ? "," : "") << f[d];
  ctx.out << ")\n";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
    ctx.out << "dim " << lattice.dims[i] << ": " << partition_text(P, lattice.nodes[i]) << "\n";
  return kExitOk;
}

struct RegularForm {
  Strictification strict;
  Regularization regular;
};

RegularForm regular_form(const MarkedPoset& M) {
  Strictification s = strictify(M);
  Regularization r = regularize(s.poset);
  return {std::move(s), std::move(r)};
}

int cmd_facets(const Context& ctx) {
  const RegularForm form = regular_form(ctx.doc.poset);
  const MarkedPoset& R = form.regular.poset;
  const Poset& P = R.poset();
  const FaceLattice lattice = enumerate_face_partitions(R, ctx.options.max_elements);
  const std::size_t dim = dimension(R);
  const std::size_t oracle_count = oracle::facets(h_representation(R)).size();
  const std::size_t contracted = ctx.doc.poset.size() - R.size();

  // Facet of a cover p<q: the face of codimension one on which x_p == x_q.
  std::vector<std::optional<std::size_t>> facet_of;
  for (const auto& [p, q] : P.covers()) {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < lattice.nodes.size() && !found; ++i)
      if (lattice.dims[i] + 1 == dim && lattice.nodes[i].block_of(p) == lattice.nodes[i].block_of(q))
        found = i;
    facet_of.push_back(found);
  }

  if (ctx.options.json) {
    Json j;
    j["contracted_elements"] = contracted;
    j["removed_covers"] = Json::array();
    for (const auto& c : form.regular.removed) j["removed_covers"].push_back(cover_json(P, c));
    j["covers"] = Json::array();
    for (const auto& c : P.covers()) j["covers"].push_back(cover_json(P, c));
    j["facets"] = Json::array();
    for (std::size_t i = 0; i < P.covers().size(); ++i) {
      Json facet{{"cover", cover_json(P, P.covers()[i])}};
      if (facet_of[i]) {
        facet["blocks"] = blocks_json(P, lattice.nodes[*facet_of[i]], false);
        facet["dim"] = lattice.dims[*facet_of[i]];
      }
      j["facets"].push_back(std::move(facet));
    }
    j["oracle_facet_count"] = oracle_count;
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (contracted > 0) ctx.out << "strictify contracted " << contracted << " elements\n";
  for (const auto& c : form.regular.removed) ctx.out << "removed cover " << cover_text(P, c) << "\n";
  ctx.out << P.covers().size() << " facets (oracle: " << oracle_count << ")\n";
  for (std::size_t i = 0; i < P.covers().size(); ++i) {
    ctx.out << "  " << cover_text(P, P.covers()[i]) << " -> ";
    if (facet_of[i])
      ctx.out << partition_text(P, lattice.nodes[*facet_of[i]]) << "\n";
    else
      ctx.out << "no facet\n";
  }
  return kExitOk;
}

int cmd_vertices(const Context& ctx) {
  const MarkedPoset& M = ctx.doc.poset;
  const auto vs = vertices(M, ctx.options.max_elements);
  if (ctx.options.json) {
    Json j;
    j["elements"] = M.poset().elements();
    j["vertices"] = Json::array();
    for (const auto& v : vs) j["vertices"].push_back({{"coords", point_json(v)}});
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }
  ctx.out << vs.size() << " vertices\n";
  for (const auto& v : vs) ctx.out << "  " << point_text(M.poset(), v) << "\n";
  return kExitOk;
}

int cmd_regularize(const Context& ctx) {
  const RegularForm form = regular_form(ctx.doc.poset);
  const MarkedPoset& R = form.regular.poset;
  const Poset& P = R.poset();
  const std::size_t contracted = ctx.doc.poset.size() - R.size();
  if (ctx.options.json) {
    Json j = describe_json(R);
    j["contracted_elements"] = contracted;
    j["removed_covers"] = Json::array();
    for (const auto& c : form.regular.removed) j["removed_covers"].push_back(cover_json(P, c));
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (contracted > 0) ctx.out << "# strictify contracted " << contracted << " elements\n";
  for (const auto& c : form.regular.removed) ctx.out << "# removed cover " << cover_text(P, c) << "\n";
  ctx.out << serialize_document(Document{R, std::nullopt});
  return kExitOk;
}

int cmd_minkowski(const Context& ctx) {
  const MarkedPoset& M = ctx.doc.poset;
  const auto summands = minkowski_markings(M);
  const MinkowskiCheck check = minkowski_sum_check(M, ctx.options.max_elements);
  const Poset& P = M.poset();
  if (ctx.options.json) {
    Json j;
    j["summands"] = Json::array();
    for (const auto& s : summands) {
      Json marking = Json::object();
      for (std::size_t a : M.marked_indices())
        marking[P.element(a)] = rational_json(s.marking.at(P.element(a)));
      j["summands"].push_back({{"coefficient", rational_json(s.coefficient)}, {"marking", marking}});
    }
    j["holds"] = check.holds;
    j["vertices"] = Json::array();
    for (const auto& v : check.hull) j["vertices"].push_back({{"coords", point_json(v)}});
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& s : summands) {
    ctx.out << to_string(s.coefficient) << " *";
    for (std::size_t a : M.marked_indices())
      ctx.out << " " << P.element(a) << "=" << to_string(s.marking.at(P.element(a)));
    ctx.out << "\n";
  }
  ctx.out << "sum of summands " << (check.holds ? "equals" : "differs from") << " the polyhedron ("
          << check.hull.size() << " vs " << check.expected.size() << " vertices)\n";
  return kExitOk;
}

int cmd_conditional_dim(const Context& ctx) {
  if (!ctx.options.point) throw Error("conditional-dim needs --point");
  const MarkedPoset& M = ctx.doc.poset;
  const Poset& P = M.poset();
  const LinearConditions S = ctx.doc.conditions.value_or(LinearConditions{});
  const RationalPoint x = point_from_values(M, parse_assignments(*ctx.options.point));
  const std::size_t kernel = minimal_face_dimension(M, S, x);
  const Partition pi = partition_from_point(M, x);
  const TilingMap T = tiling_map(M, S, pi);
  const int oracle_dim = oracle::minimal_face_dimension(conditional_system(M, S), x);
  if (ctx.options.json) {
    Json j;
    j["partition"] = blocks_json(P, pi, false);
    j["columns"] = T.columns;
    j["tiling_matrix"] = Json::array();
    for (const auto& row : T.matrix) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(rational_json(v));
      j["tiling_matrix"].push_back(std::move(r));
    }
    j["kernel_dim"] = kernel;
    j["oracle_dim"] = oracle_dim;
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }
  ctx.out << "partition: " << partition_text(P, pi) << "\n"
          << "columns:";
  for (const auto& c : T.columns) ctx.out << " " << c;
  ctx.out << "\ntiling matrix:\n";
  for (const auto& row : T.matrix) {
    ctx.out << "  [";
    for (std::size_t i = 0; i < row.size(); ++i) ctx.out << (i ? " " : "") << to_string(row[i]);
    ctx.out << "]\n";
  }
  ctx.out << "kernel dimension: " << kernel << " (oracle: " << oracle_dim << ")\n";
  return kExitOk;
}

int cmd_oracle_verify(const Context& ctx) {
  const MarkedPoset& M = ctx.doc.poset;
  const HPolyhedron H = h_representation(M);
  std::vector<std::pair<std::string, bool>> results;
  const auto record = [&](std::string name, bool ok) { results.emplace_back(std::move(name), ok); };

  const FaceLattice lattice = enumerate_face_partitions(M, ctx.options.max_elements);
  const auto faces = oracle::enumerate_faces(H);
  std::set<Partition> from_oracle;
  for (const auto& f : faces) from_oracle.insert(partition_from_point(M, f.witness));
  const std::set<Partition> combinatorial(lattice.nodes.begin(), lattice.nodes.end());
  record("face partitions (" + std::to_string(combinatorial.size()) + " vs oracle " +
             std::to_string(faces.size()) + ")",
         combinatorial == from_oracle && faces.size() == combinatorial.size());

  const int oracle_dim = oracle::affine_dimension(H);
  record("dimension", static_cast<int>(dimension(M)) == oracle_dim);

  if (is_pointed(M)) {
    const auto V = oracle::enumerate_vertices_and_rays(H);
    record("vertices", V.pointed && vertices(M, ctx.options.max_elements) == V.vertices);
    record("construct_vertex", std::binary_search(V.vertices.begin(), V.vertices.end(),
                                                  construct_vertex(M)));
  }

  const RegularForm form = regular_form(M);
  record("facets match covers after regularization",
         oracle::facets(h_representation(form.regular.poset)).size() ==
             form.regular.poset.poset().covers().size());

  if (!M.marked_indices().empty())
    record("minkowski decomposition", minkowski_sum_check(M, ctx.options.max_elements).holds);

  record("generic point", partition_from_point(M, generic_point(M)) == strictify(M).partition);

  std::mt19937_64 rng(ctx.options.seed);
  bool sampled = true;
  for (std::size_t i = 0; i < ctx.options.samples; ++i) {
    const RationalPoint x = random_point(M, rng);
    const Partition pi = partition_from_point(M, x);
    if (static_cast<int>(face_dimension(M, pi)) != oracle::minimal_face_dimension(H, x)) sampled = false;
  }
  record("random point face dimensions (seed " + std::to_string(ctx.options.seed) + ")", sampled);

  if (ctx.doc.conditions) {
    const LinearConditions& S = *ctx.doc.conditions;
    bool ok = true;
    for (const auto& f : oracle::enumerate_faces(conditional_system(M, S)))
      if (static_cast<int>(minimal_face_dimension(M, S, f.witness)) != f.affine_dim) ok = false;
    record("conditional kernel dimensions", ok);
  }

  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.second; });
  if (ctx.options.json) {
    Json j;
    j["checks"] = Json::array();
    for (const auto& [name, ok] : results) j["checks"].push_back({{"name", name}, {"ok", ok}});
    j["ok"] = all;
    ctx.out << j.dump(2) << "\n";
  } else {
    for (const auto& [name, ok] : results) ctx.out << (ok ? "ok   " : "FAIL ") << name << "\n";
  }
  return all ? kExitOk : kExitDomainError;
}

const std::map<std::string, std::function<int(const Context&)>, std::less<>>& command_table() {
  static const std::map<std::string, std::function<int(const Context&)>, std::less<>> table{
      {"check", cmd_check},
      {"dim", cmd_dim},
      {"faces", cmd_faces},
      {"facets", cmd_facets},
      {"vertices", cmd_vertices},
      {"regularize", cmd_regularize},
      {"minkowski", cmd_minkowski},
      {"conditional-dim", cmd_conditional_dim},
      {"oracle-verify", cmd_oracle_verify},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check",    "dim",        "faces",
                                              "facets",   "vertices",   "regularize",
                                              "minkowski", "conditional-dim", "oracle-verify"};
  return names;
}

int run_command(std::string_view name, std::string_view document, const CommandOptions& options,
                std::ostream& out, std::ostream& err) {
  const auto& table = command_table();
  const auto it = table.find(name);
  if (it == table.end()) {
    err << "unknown command '" << name << "'\n";
    return kExitParseError;
  }
  try {
    const Document doc = parse_document(document);
    return it->second(Context{doc, options, out});
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace mop
