#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpg/fpg.hpp"
#include "fpg/io/misc_io.hpp"
#include "fpg/io/presentation_io.hpp"
#include "fpg/io/representation_io.hpp"

#ifndef FPG_FIXTURE_DIR
#define FPG_FIXTURE_DIR "fixtures"
#endif

namespace fpg::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kBraidOrientation =
    "sigma_i: x_i -> x_i x_(i+1) x_i^-1, x_(i+1) -> x_i; braid words act left to right";
inline constexpr const char* kPermutationConvention = "right action; in a product the left factor acts first";

/// Settings shared by every subcommand.
struct Context {
  std::string format = "text";
  std::string commutator = "standard";
  std::string sqrt2 = "auto";
  std::string sqrt2_used;  // filled by commands that instantiate a representation
  int exit_code = kExitOk;

  CommutatorConvention commutator_convention() const {
    return commutator == "inverse" ? CommutatorConvention::Inverse : CommutatorConvention::Standard;
  }
};

/// Coset cap: FPG_COSET_CAP overrides the default.
inline std::size_t coset_cap_from_env() {
  if (const char* v = std::getenv("FPG_COSET_CAP")) {
    const long n = io::parse_long(v, "FPG_COSET_CAP");
    if (n < 1) fail(ErrorCode::Usage, "FPG_COSET_CAP must be positive");
    return static_cast<std::size_t>(n);
  }
  return kDefaultCosetCap;
}

// ------------------------------------------------------------------ JSON helpers

inline Json presentation_json(const Presentation& p) {
  Json j;
  j["generators"] = p.generators();
  Json rels = Json::array();
  for (const auto& r : p.relators()) rels.push_back(p.word_string(r));
  j["relators"] = rels;
  return j;
}

inline Json abelian_json(const AbelianInvariants& a) {
  Json j;
  j["text"] = a.to_string();
  j["free_rank"] = a.free_rank;
  Json tors = Json::array();
  for (const auto& d : a.torsion) tors.push_back(to_string(d));
  j["torsion"] = tors;
  return j;
}

inline Json tietze_json(const TietzeResult& t, bool with_trace) {
  Json j;
  j["presentation"] = presentation_json(t.presentation);
  j["verdict"] = t.verdict();
  j["free"] = t.free;
  j["limit_exceeded"] = t.limit_exceeded;
  j["moves"] = t.trace.size();
  if (with_trace) {
    Json tr = Json::array();
    for (const auto& m : t.trace) {
      std::string s = to_string(m.kind);
      if (m.kind == TietzeMoveKind::EliminateGenerator) s += " generator#" + std::to_string(m.generator + 1);
      if (m.kind == TietzeMoveKind::Substitute) s += " relator#" + std::to_string(m.source + 1) + " into relator#" + std::to_string(m.relator + 1);
      s += " (gens " + std::to_string(m.gens_before) + "->" + std::to_string(m.gens_after) + ", rels " +
           std::to_string(m.rels_before) + "->" + std::to_string(m.rels_after) + ", length " +
           std::to_string(m.length_before) + "->" + std::to_string(m.length_after) + ")";
      tr.push_back(s);
    }
    j["trace"] = tr;
  }
  return j;
}

inline std::string laurent_text(const NFLaurent& p, const NumberFieldElement& sqrt2) {
  return p.to_string("t", [&](const NumberFieldElement& c) { return render_with_sqrt2(c, sqrt2); });
}

inline std::string ratio_text(const LaurentRatio& r, const NumberFieldElement& sqrt2) {
  if (r.exact) return laurent_text(r.quotient, sqrt2);
  return "(" + laurent_text(r.numerator, sqrt2) + ") / (" + laurent_text(r.denominator, sqrt2) + ")";
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Usage, "cannot write '" + path + "'");
  out << content;
}

// ------------------------------------------------------------------ rendering

inline std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_text(v, out, indent + 2);
    } else if (v.is_array()) {
      if (v.empty()) {
        out << pad << it.key() << ": []\n";
        continue;
      }
      out << pad << it.key() << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          // "- key: value" for the first field, the rest aligned under it
          std::ostringstream sub;
          render_text(e, sub, indent + 4);
          std::string body = sub.str();
          if (body.size() >= static_cast<std::size_t>(indent) + 4) body.replace(0, static_cast<std::size_t>(indent) + 4, pad + "  - ");
          out << body;
        } else if (e.is_array()) {
          std::string row;
          for (const auto& x : e) row += (row.empty() ? "" : " | ") + scalar_text(x);
          out << pad << "  - " << row << "\n";
        } else {
          out << pad << "  - " << scalar_text(e) << "\n";
        }
      }
    } else {
      out << pad << it.key() << ": " << scalar_text(v) << "\n";
    }
  }
}

inline Json metadata_json(const Context& ctx) {
  Json m;
  m["tool"] = "fpg";
  m["commutator"] = to_string(ctx.commutator_convention());
  m["sqrt2"] = ctx.sqrt2_used.empty() ? to_string(Sqrt2Convention::Primary) + " (mode " + ctx.sqrt2 + ")"
                                      : ctx.sqrt2_used;
  m["braid_orientation"] = kBraidOrientation;
  m["permutations"] = kPermutationConvention;
  return m;
}

inline void emit(const Context& ctx, const std::string& command, const Json& result, std::ostream& out) {
  Json doc;
  doc["command"] = command;
  doc["metadata"] = metadata_json(ctx);
  doc["result"] = result;
  if (ctx.format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  out << "# command: " << command << "\n";
  for (auto it = doc["metadata"].begin(); it != doc["metadata"].end(); ++it)
    out << "# " << it.key() << ": " << scalar_text(it.value()) << "\n";
  render_text(result, out, 0);
}

// ------------------------------------------------------------------ commands

inline Presentation load(const Context& ctx, const std::string& path) {
  return io::load_presentation(path, ctx.commutator_convention()).presentation;
}

inline Word word_arg(const Context& ctx, const Presentation& p, const std::string& text) {
  return io::parse_word(text, p.generators(), ctx.commutator_convention());
}

inline Json cmd_simplify(Context& ctx, const std::string& path, double growth, std::size_t iters, bool trace,
                         const std::string& write) {
  const Presentation p = load(ctx, path);
  const TietzeResult t = tietze_simplify(p, TietzeLimits{growth, iters});
  Json j;
  j["input"] = presentation_json(p);
  j["output"] = tietze_json(t, trace);
  if (!write.empty()) write_text_file(write, io::serialize_presentation(t.presentation));
  return j;
}

inline Json cmd_abelianize(Context& ctx, const std::string& path) {
  const Presentation p = load(ctx, path);
  Json j;
  j["abelianization"] = abelian_json(abelianization(p));
  return j;
}

inline Json cmd_quotient(Context& ctx, const std::string& path, const std::vector<std::string>& words) {
  const Presentation p = load(ctx, path);
  std::vector<Word> extra;
  for (const auto& w : words) extra.push_back(word_arg(ctx, p, w));
  const Presentation q = quotient_by_normal_closure(p, extra);
  Json j;
  j["presentation"] = presentation_json(q);
  j["abelianization"] = abelian_json(abelianization(q));
  return j;
}

inline Json cmd_orbifold(Context&, std::size_t genus, std::size_t punctures, const std::vector<long>& cones) {
  const OrbifoldSignature sig{genus, punctures, cones};
  const Presentation p = orbifold_presentation(sig);
  Json j;
  j["presentation"] = presentation_json(p);
  j["orbifold_euler_characteristic"] = sig.orbifold_euler_characteristic().get_str();
  j["abelianization"] = abelian_json(abelianization(p));
  return j;
}

inline Json cmd_zvk(Context& ctx, const std::string& path, bool trace) {
  const io::BraidList b = io::parse_braids(io::read_file(path));
  const Presentation p = zvk_presentation(b.strands, b.braids);
  Json j;
  j["strands"] = b.strands;
  j["braids"] = b.braids.size();
  j["presentation"] = presentation_json(p);
  j["abelianization"] = abelian_json(abelianization(p));
  j["simplified"] = tietze_json(tietze_simplify(p), trace);
  (void)ctx;
  return j;
}

inline Json cmd_rs(Context& ctx, const std::string& path, const std::string& hom,
                   const std::vector<std::string>& subgroup, bool simplify_output, const std::string& write) {
  const Presentation p = load(ctx, path);
  CosetTable table;
  Json j;
  if (!hom.empty()) {
    if (!subgroup.empty()) fail(ErrorCode::Usage, "use either --hom or --subgroup");
    table = coset_table_from_hom(p, io::parse_hom_spec(hom, p));
    j["source"] = "homomorphism " + hom;
  } else {
    std::vector<Word> gens;
    for (const auto& w : subgroup) gens.push_back(word_arg(ctx, p, w));
    table = todd_coxeter(p, gens, coset_cap_from_env());
    j["source"] = "coset enumeration";
  }
  const SubgroupPresentation sp = reidemeister_schreier(p, table);
  j["index"] = table.index();
  Json tab;
  for (std::size_t g = 0; g < p.num_generators(); ++g) tab[p.generators()[g]] = perm_to_cycles(table.action()[g]);
  j["coset_table"] = tab;
  Json sg = Json::array();
  for (std::size_t k = 0; k < sp.raw.num_generators(); ++k) {
    Json e;
    e["name"] = sp.raw.generators()[k];
    e["parent_word"] = p.word_string(sp.parent_words[k]);
    sg.push_back(e);
  }
  j["schreier_generators"] = sg;
  Json raw;
  raw["generators"] = sp.raw.num_generators();
  raw["relators"] = sp.raw.num_relators();
  raw["euler_characteristic"] = sp.raw.euler_characteristic();
  j["raw"] = raw;
  if (simplify_output) {
    j["simplified"] = tietze_json(sp.simplified, false);
    j["verdict"] = sp.simplified.verdict();
  } else {
    j["presentation"] = presentation_json(sp.raw);
  }
  if (!write.empty())
    write_text_file(write, io::serialize_presentation(simplify_output ? sp.simplified.presentation : sp.raw));
  return j;
}

inline Json cmd_fox(Context& ctx, const std::string& path) {
  const Presentation p = load(ctx, path);
  const FoxMatrix f = fox_matrix(p);
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.rows; ++i) {
    Json r;
    r["relator"] = p.word_string(p.relators()[i]);
    Json d;
    for (std::size_t g = 0; g < f.cols; ++g) d[p.generators()[g]] = f(i, g).to_string(p.generators());
    r["derivatives"] = d;
    rows.push_back(r);
  }
  Json j;
  j["rows"] = rows;
  j["fundamental_identity"] = "verified for every relator";
  return j;
}

/// Grading "x:1,0 y:0,1" (two variables) or "x:1 y:1" (one variable);
/// unlisted generators grade to zero.
inline std::pair<Grading, bool> parse_grading(const std::string& text, const Presentation& p) {
  Grading g(p.num_generators(), {0, 0});
  bool two = false;
  for (const auto& tok : io::split_ws(text)) {
    const auto c = tok.find(':');
    if (c == std::string::npos) fail(ErrorCode::Parse, "grading entries look like x:1 or x:1,0");
    const long k = p.find_generator(tok.substr(0, c));
    if (k < 0) fail(ErrorCode::UnknownGenerator, "grading names unknown generator '" + tok.substr(0, c) + "'");
    const auto parts = io::split_on(tok.substr(c + 1), ',');
    if (parts.size() > 2) fail(ErrorCode::Parse, "at most two grading variables are supported");
    g[static_cast<std::size_t>(k)].first = io::parse_long(parts[0], "grading");
    if (parts.size() == 2) {
      g[static_cast<std::size_t>(k)].second = io::parse_long(parts[1], "grading");
      two = true;
    }
  }
  return {g, two};
}

inline Json cmd_alexander(Context& ctx, const std::string& path, const std::string& grading) {
  const Presentation p = load(ctx, path);
  const auto [eps, two] = parse_grading(grading, p);
  const AlexanderGcds a = alexander_poly_gcds(p, eps);
  const std::string v1 = two ? "t1" : "t", v2 = "t2";
  Json j;
  j["variables"] = two ? Json::array({"t1", "t2"}) : Json::array({"t"});
  j["matrix_size"] = std::to_string(a.matrix.rows()) + "x" + std::to_string(a.matrix.cols());
  if (a.no_relators) j["note"] = "no relators";
  Json g = Json::array();
  for (const auto& d : a.gcds) g.push_back(d.to_string(v1, v2));
  j["gcds"] = g;
  j["rank"] = a.rank;
  j["relevant_gcd"] = a.relevant().to_string(v1, v2);
  j["relevant_is_unit"] = is_unit(a.relevant());
  return j;
}

inline Representation choose_representation(Context& ctx, const Presentation& p, const SymbolicRepresentation& srep,
                                            Json& log) {
  Json lines = Json::array();
  Representation rep;
  if (ctx.sqrt2 == "auto") {
    const ConventionChoice c = select_convention(p, srep);
    for (const auto& l : c.log) lines.push_back(l);
    ctx.sqrt2_used = to_string(c.convention) + (c.pinned_by_delta0 ? " (selected by the Delta0 pin)" : " (selected by relator verification)");
    rep = c.rep;
  } else {
    const Sqrt2Convention c = ctx.sqrt2 == "primary" ? Sqrt2Convention::Primary : Sqrt2Convention::Conjugate;
    rep = srep.instantiate(p, c);
    const auto r = verify_representation(p, rep);
    lines.push_back(to_string(c) + (r.ok ? ": relators verified (forced)" : ": relator " + r.failing_relator + " fails (forced)"));
    ctx.sqrt2_used = to_string(c) + " (forced)";
    if (!r.ok) fail(ErrorCode::RepresentationNotVerified, "relator " + r.failing_relator + ": " + r.reason);
  }
  log = lines;
  return rep;
}

inline Json cmd_twisted(Context& ctx, const std::string& path, const std::string& rep_path, const std::string& del) {
  const Presentation p = load(ctx, path);
  const SymbolicRepresentation srep = io::parse_representation(io::read_file(rep_path));
  Json log;
  const Representation rho = choose_representation(ctx, p, srep, log);
  std::optional<std::size_t> deleted;
  if (!del.empty()) {
    const long k = p.find_generator(del);
    if (k < 0) fail(ErrorCode::UnknownGenerator, "unknown generator '" + del + "'");
    deleted = static_cast<std::size_t>(k);
  }
  const WadaResult w = twisted_alexander_wada(p, rho, deleted);
  const NumberFieldElement s = sqrt2_element(rho.field(), ctx.sqrt2_used.rfind(to_string(Sqrt2Convention::Conjugate), 0) == 0
                                                             ? Sqrt2Convention::Conjugate
                                                             : Sqrt2Convention::Primary);
  Json j;
  j["convention_log"] = log;
  j["deleted_generator"] = p.generators()[w.deleted];
  j["minor_size"] = w.minor_size;
  j["delta1"] = laurent_text(w.delta1, s);
  j["delta0"] = laurent_text(w.delta0, s);
  j["wada_ratio"] = ratio_text(w.wada, s);
  j["h1_torsion_order"] = laurent_text(w.h1_order, s);
  j["h0_torsion_order"] = laurent_text(w.h0_order, s);
  j["delta"] = ratio_text(w.delta, s);
  j["delta_exact"] = w.delta.exact;
  j["normalization"] = "unit-normalized: constant term nonzero, monic";
  j["notes"] = w.notes;
  return j;
}

inline Json cmd_homcount(Context& ctx, const std::string& path, std::size_t degree, bool parallel, std::size_t cap) {
  const auto np = io::load_presentation(path, ctx.commutator_convention());
  const HomCountReport r = count_homs(np.presentation, degree, parallel, cap);
  Json j;
  j["presentation"] = np.name.empty() ? path : np.name;
  j["degree"] = r.degree;
  j["count"] = to_string(r.total);
  j["partitions"] = r.partitions;
  j["note"] = "counts all homomorphisms to the symmetric group, including non-surjective ones";
  return j;
}

inline Json cmd_separate(Context& ctx, const std::string& path, const std::string& a, const std::string& b,
                         std::size_t degree, std::size_t cap) {
  const Presentation p = load(ctx, path);
  const Word wa = word_arg(ctx, p, a), wb = word_arg(ctx, p, b);
  const auto h = find_separating_hom(p, wa, wb, degree, cap);
  Json j;
  j["found"] = h.has_value();
  if (h) {
    j["degree"] = h->degree;
    Json imgs;
    for (std::size_t g = 0; g < p.num_generators(); ++g) imgs[p.generators()[g]] = perm_to_cycles(h->images[g]);
    j["images"] = imgs;
    j["image_a"] = perm_to_cycles(h->evaluate(wa));
    j["image_b"] = perm_to_cycles(h->evaluate(wb));
    j["verified"] = verify_finite_hom(p, *h);
  }
  return j;
}

inline Json cmd_cw(Context&, const std::string& path) {
  const MonodromyData d = io::parse_monodromy(io::read_file(path));
  const Presentation p = cw_fibration_presentation(d);
  const PresentationHomology h = presentation_homology(p);
  Json j;
  j["presentation"] = presentation_json(p);
  j["relator_count"] = p.num_relators();
  j["euler_characteristic"] = p.euler_characteristic();
  j["expected_euler_characteristic"] =
      1 - static_cast<long>(d.loops + d.fiber_rank) + static_cast<long>(d.loops * d.fiber_rank);
  j["H1"] = abelian_json(h.h1);
  j["H2_rank"] = h.h2.free_rank;
  return j;
}

inline Json cmd_homology(Context& ctx, const std::string& path) {
  const Presentation p = load(ctx, path);
  const PresentationHomology h = presentation_homology(p);
  Json j;
  j["H1"] = abelian_json(h.h1);
  j["H2_rank"] = h.h2.free_rank;
  j["boundary_rank"] = h.boundary_rank;
  j["euler_characteristic"] = h.euler_characteristic;
  return j;
}

inline Json cmd_wedge(Context&, long r, long chi, std::optional<long> cyclic) {
  const WedgeType w = wedge_homotopy_type(r, chi, cyclic);
  Json j;
  j["circles"] = w.circles;
  j["spheres"] = w.spheres;
  j["cyclic"] = w.cyclic;
  if (w.cyclic) j["order"] = w.order;
  j["homotopy_type"] = w.to_string();
  return j;
}

inline Json cmd_kernel_rank(Context&, const std::vector<long>& cones, long r, long m) {
  OrbifoldSignature sig{0, static_cast<std::size_t>(r + 1), cones};
  if (r < 0) fail(ErrorCode::InconsistentInput, "r must be nonnegative");
  Json j;
  j["orbifold_euler_characteristic"] = sig.orbifold_euler_characteristic().get_str();
  j["rank"] = orbifold_kernel_rank(sig, m);
  if (cones.size() == 2 && std::gcd(cones[0], cones[1]) == 1)
    j["rank_pqr_formula"] = kernel_rank_expected(r, cones[0], cones[1]);
  return j;
}

inline Json cmd_threshold(Context&, const std::string& path) {
  const ThresholdInstance t = io::parse_threshold(io::read_file(path));
  const auto mins = threshold_minimal_sets(t);
  Json j;
  j["values"] = t.values;
  j["members"] = static_cast<std::size_t>(std::count(t.member.begin(), t.member.end(), true));
  j["upward_closed"] = true;
  Json ms = Json::array();
  for (auto m : mins) ms.push_back(t.subset_string(m));
  j["minimal_sets"] = ms;
  return j;
}

inline Json cmd_verify_rep(Context& ctx, const std::string& path, const std::string& rep_path, const std::string& hom,
                           const std::vector<std::string>& compare) {
  const Presentation p = load(ctx, path);
  Json j;
  if (rep_path.empty() == hom.empty()) fail(ErrorCode::Usage, "give exactly one of --rep or --hom");
  if (!compare.empty() && compare.size() != 2) fail(ErrorCode::Usage, "--compare takes two words");
  if (!rep_path.empty()) {
    const SymbolicRepresentation srep = io::parse_representation(io::read_file(rep_path));
    Json log;
    try {
      choose_representation(ctx, p, srep, log);
      j["verified"] = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RepresentationNotVerified) throw;
      j["verified"] = false;
      j["reason"] = e.what();
      ctx.exit_code = kExitMath;
    }
    j["convention_log"] = log;
    return j;
  }
  const FiniteImages f = io::parse_hom_spec(hom, p);
  const FiniteHom h{f.degree, f.images};
  j["degree"] = f.degree;
  bool ok = true;
  std::string failing;
  {
    std::vector<Perm> inv;
    for (const auto& a : h.images) inv.push_back(perm_inverse(a));
    for (const auto& r : p.relators())
      if (!perm_is_identity(perm_evaluate(h.images, inv, r, h.degree))) {
        ok = false;
        failing = p.word_string(r);
        break;
      }
  }
  j["verified"] = ok;
  if (!ok) {
    j["failing_relator"] = failing;
    ctx.exit_code = kExitMath;
  }
  if (compare.size() == 2) {
    const Perm ia = h.evaluate(word_arg(ctx, p, compare[0])), ib = h.evaluate(word_arg(ctx, p, compare[1]));
    j["image_a"] = perm_to_cycles(ia);
    j["image_b"] = perm_to_cycles(ib);
    j["distinct"] = ia != ib;
  }
  return j;
}

inline Json cmd_consequence(Context& ctx, const std::string& path, const std::string& word, std::size_t depth,
                            std::size_t width) {
  const Presentation p = load(ctx, path);
  const Word w = word_arg(ctx, p, word);
  const auto c = consequence_check_bounded(p, w, depth, width);
  Json j;
  j["word"] = p.word_string(w);
  j["status"] = c ? "witness" : "inconclusive";
  if (c) {
    j["depth"] = c->depth();
    Json fs = Json::array();
    for (const auto& f : c->factors) {
      Json e;
      e["conjugator"] = p.word_string(f.conjugator);
      e["relator"] = p.word_string(p.relators()[f.relator]);
      e["exponent"] = f.sign;
      fs.push_back(e);
    }
    j["factors"] = fs;
    j["reverified_by_free_reduction"] = verify_certificate(p, w, *c);
  }
  return j;
}

// ------------------------------------------------------------------ self-test

/// Parse every fixture, check round trips and run its module-level
/// verification. Returns one line per file.
inline std::vector<std::pair<bool, std::string>> selftest(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, Presentation>> pres;
  for (const auto& f : files)
    if (f.extension() == ".pres") pres.emplace_back(f.filename().string(), io::load_presentation(f.string()).presentation);

  std::vector<std::pair<bool, std::string>> out;
  for (const auto& f : files) {
    const std::string name = f.filename().string(), ext = f.extension().string();
    try {
      const std::string text = io::read_file(f.string());
      std::string what;
      if (ext == ".pres") {
        const Presentation p = io::parse_presentation(text);
        if (!(io::parse_presentation(io::serialize_presentation(p)) == p)) throw Error(ErrorCode::Parse, "round trip");
        fox_matrix(p);
        what = std::to_string(p.num_generators()) + " generators, " + std::to_string(p.num_relators()) +
               " relators, abelianization " + abelianization(p).to_string();
      } else if (ext == ".rep") {
        const SymbolicRepresentation r = io::parse_representation(text);
        if (!(io::parse_representation(io::serialize_representation(r)) == r)) throw Error(ErrorCode::Parse, "round trip");
        std::vector<std::string> sorted_gens = r.generators;
        std::sort(sorted_gens.begin(), sorted_gens.end());
        for (const auto& [pn, p] : pres) {
          auto g = p.generators();
          std::sort(g.begin(), g.end());
          if (g != sorted_gens) continue;
          const ConventionChoice c = select_convention(p, r);
          what = "verified on " + pn + " with " + to_string(c.convention);
          break;
        }
        if (what.empty()) throw Error(ErrorCode::RepresentationNotVerified, "no fixture presentation matches");
      } else if (ext == ".braid") {
        const io::BraidList b = io::parse_braids(text);
        if (!(io::parse_braids(io::serialize_braids(b)).braids == b.braids)) throw Error(ErrorCode::Parse, "round trip");
        what = "ZVK abelianization " + abelianization(zvk_presentation(b.strands, b.braids)).to_string();
      } else if (ext == ".mono") {
        const MonodromyData d = io::parse_monodromy(text);
        const Presentation p = cw_fibration_presentation(d);
        what = "CW presentation with " + std::to_string(p.num_relators()) + " relators";
      } else if (ext == ".thr") {
        const ThresholdInstance t = io::parse_threshold(text);
        what = std::to_string(threshold_minimal_sets(t).size()) + " minimal sets, upward closed";
      } else {
        continue;
      }
      out.emplace_back(true, "ok " + name + ": " + what);
    } catch (const std::exception& e) {
      out.emplace_back(false, "FAIL " + name + ": " + e.what());
    }
  }
  return out;
}

// ------------------------------------------------------------------ entry point

/// Run the command line; output goes to `out`, diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fpg: finitely presented groups, Fox calculus and twisted Alexander polynomials"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  Context ctx;
  bool self = false;
  std::string fixture_dir = FPG_FIXTURE_DIR;
  app.add_option("--format", ctx.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--commutator", ctx.commutator, "commutator convention: standard = a b a^-1 b^-1, inverse = a^-1 b^-1 a b")
      ->check(CLI::IsMember({"standard", "inverse"}));
  app.add_option("--sqrt2", ctx.sqrt2, "sqrt2 convention: auto, primary (xi^3 - xi) or conjugate (xi - xi^3)")
      ->check(CLI::IsMember({"auto", "primary", "conjugate"}));
  app.add_flag("--selftest", self, "parse and verify every fixture");
  app.add_option("--fixtures", fixture_dir, "fixture directory for --selftest");

  std::function<Json()> action;
  std::string command;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&command, name] { command = name; });
    return s;
  };

  std::string pres, rep, hom, write, del, a, b, word, braids, mono, file, grading;
  std::vector<std::string> words, subgroup, compare;
  std::vector<long> cones;
  double growth = 4.0;
  std::size_t iters = 1000, degree = 0, cap = kDefaultDegreeCap, genus = 0, punctures = 0, depth = 1, width = 2;
  long r = 0, chi = 0, m = 1;
  std::optional<long> cyclic;
  bool trace = false, parallel = false, no_simplify = false;

  auto add_pres = [&](CLI::App* s) { s->add_option("-p,--presentation", pres, "presentation file")->required(); };

  CLI::App* s_simplify = sub("simplify", "Tietze simplification with a replayable trace");
  add_pres(s_simplify);
  s_simplify->add_option("--growth", growth, "relator length growth bound (factor)");
  s_simplify->add_option("--max-iterations", iters, "iteration cap");
  s_simplify->add_flag("--trace", trace, "print the applied moves");
  s_simplify->add_option("--write", write, "write the simplified presentation to a file");

  add_pres(sub("abelianize", "abelianization by Smith normal form"));

  CLI::App* s_quot = sub("quotient", "quotient by the normal closure of words");
  add_pres(s_quot);
  s_quot->add_option("-w,--word", words, "extra relator (repeatable)")->required();

  CLI::App* s_orb = sub("orbifold", "orbifold fundamental group presentation");
  s_orb->add_option("--genus", genus, "genus")->required();
  s_orb->add_option("--punctures", punctures, "number of punctures")->required();
  s_orb->add_option("--cones", cones, "cone orders, comma separated")->delimiter(',');

  CLI::App* s_zvk = sub("zvk", "Zariski-Van Kampen presentation from braid monodromy");
  s_zvk->add_option("-b,--braids", braids, "braid file")->required();
  s_zvk->add_flag("--trace", trace, "print the Tietze moves");

  CLI::App* s_rs = sub("rs", "coset table and Reidemeister-Schreier subgroup presentation");
  add_pres(s_rs);
  s_rs->add_option("--hom", hom, "homomorphism, e.g. \"a:3 b:2 mod 6\" or \"x:(1,2) y:(1,3)\"");
  s_rs->add_option("--subgroup", subgroup, "subgroup generator word for coset enumeration (repeatable)");
  s_rs->add_flag("--no-simplify", no_simplify, "skip the Tietze pass");
  s_rs->add_option("--write", write, "write the subgroup presentation to a file");

  add_pres(sub("fox", "Fox matrix of a presentation"));

  CLI::App* s_alex = sub("alexander", "elementary-ideal gcds of the abelianized Fox matrix");
  add_pres(s_alex);
  s_alex->add_option("-g,--grading", grading, "grading, e.g. \"x:1,0 y:0,1\" or \"x:1 y:1\"")->required();

  CLI::App* s_tw = sub("twisted", "twisted Alexander polynomial by Wada's method");
  add_pres(s_tw);
  s_tw->add_option("-r,--rep", rep, "representation file")->required();
  s_tw->add_option("--delete", del, "generator whose column block is deleted (default: first admissible)");

  CLI::App* s_hc = sub("homcount", "number of homomorphisms to the symmetric group");
  add_pres(s_hc);
  s_hc->add_option("-n,--degree", degree, "symmetric group degree")->required();
  s_hc->add_flag("--parallel", parallel, "partition the search and run the parts concurrently");
  s_hc->add_option("--cap", cap, "largest allowed degree");

  CLI::App* s_sep = sub("separate", "find a homomorphism to a symmetric group separating two words");
  add_pres(s_sep);
  s_sep->add_option("-a", a, "first word")->required();
  s_sep->add_option("-b", b, "second word")->required();
  s_sep->add_option("-n,--degree", degree, "largest degree searched")->required();
  s_sep->add_option("--cap", cap, "largest allowed degree");

  CLI::App* s_cw = sub("cw", "CW presentation of a fibration from monodromy data");
  s_cw->add_option("-m,--monodromy", mono, "monodromy file")->required();

  add_pres(sub("homology", "cellular homology of the presentation complex"));

  CLI::App* s_wedge = sub("wedge", "homotopy type of a complement with free or cyclic group");
  s_wedge->add_option("-r", r, "number of circles")->required();
  s_wedge->add_option("--chi", chi, "Euler characteristic of the curve")->required();
  s_wedge->add_option("--cyclic", cyclic, "cyclic fundamental group of this order");

  CLI::App* s_kr = sub("kernel-rank", "rank of the free kernel of an orbifold group");
  s_kr->add_option("--cones", cones, "cone orders, comma separated")->delimiter(',');
  s_kr->add_option("-r", r, "punctures minus one")->required();
  s_kr->add_option("-m", m, "lcm of the cone orders")->required();

  CLI::App* s_thr = sub("threshold", "minimal sets of a threshold table");
  s_thr->add_option("-f,--file", file, "threshold file")->required();

  CLI::App* s_vr = sub("verify-rep", "verify a matrix representation or a permutation homomorphism");
  add_pres(s_vr);
  s_vr->add_option("-r,--rep", rep, "representation file");
  s_vr->add_option("--hom", hom, "permutation images, e.g. \"x:(1,2) y:(1,3)\"");
  s_vr->add_option("--compare", compare, "two words whose images are compared")->expected(2);

  CLI::App* s_cons = sub("consequence", "bounded search for a consequence certificate");
  add_pres(s_cons);
  s_cons->add_option("-w,--word", word, "word to express as a product of conjugated relators")->required();
  s_cons->add_option("--depth", depth, "maximal number of factors");
  s_cons->add_option("--width", width, "maximal conjugator length");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (self) {
      bool all = true;
      for (const auto& [ok, line] : selftest(fixture_dir)) {
        out << line << "\n";
        all = all && ok;
      }
      return all ? kExitOk : kExitMath;
    }
    if (command.empty()) {
      out << app.help();
      return kExitUsage;
    }
    Json result;
    if (command == "simplify") result = cmd_simplify(ctx, pres, growth, iters, trace, write);
    else if (command == "abelianize") result = cmd_abelianize(ctx, pres);
    else if (command == "quotient") result = cmd_quotient(ctx, pres, words);
    else if (command == "orbifold") result = cmd_orbifold(ctx, genus, punctures, cones);
    else if (command == "zvk") result = cmd_zvk(ctx, braids, trace);
    else if (command == "rs") result = cmd_rs(ctx, pres, hom, subgroup, !no_simplify, write);
    else if (command == "fox") result = cmd_fox(ctx, pres);
    else if (command == "alexander") result = cmd_alexander(ctx, pres, grading);
    else if (command == "twisted") result = cmd_twisted(ctx, pres, rep, del);
    else if (command == "homcount") result = cmd_homcount(ctx, pres, degree, parallel, cap);
    else if (command == "separate") result = cmd_separate(ctx, pres, a, b, degree, cap);
    else if (command == "cw") result = cmd_cw(ctx, mono);
    else if (command == "homology") result = cmd_homology(ctx, pres);
    else if (command == "wedge") result = cmd_wedge(ctx, r, chi, cyclic);
    else if (command == "kernel-rank") result = cmd_kernel_rank(ctx, cones, r, m);
    else if (command == "threshold") result = cmd_threshold(ctx, file);
    else if (command == "verify-rep") result = cmd_verify_rep(ctx, pres, rep, hom, compare);
    else if (command == "consequence") result = cmd_consequence(ctx, pres, word, depth, width);
    emit(ctx, command, result, out);
    return ctx.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool input = e.is_input_error() || e.code() == ErrorCode::UnknownGenerator;
    return input ? kExitUsage : kExitMath;
  }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), out, err);
}

}  // namespace fpg::cli
