#include "arcat/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "arcat/ar.hpp"
#include "json.hpp"

namespace arcat {

namespace {

AlgebraPtr truncated_poly(u32 p, int n, const std::string& name) {
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"x", 0, 0}};
  Path xn{0, 0, std::vector<int>(n, 0)};
  return make_algebra(p, q, {Relation{{1, xn}}}, n, name);
}

}  // namespace

std::vector<std::string> bundled_algebra_names() {
  return {"lambda2", "lambda3", "lambda4", "nakayama2", "kA2", "kA3"};
}

AlgebraPtr bundled_algebra(const std::string& name) {
  if (name == "lambda2") return truncated_poly(2, 2, "F2[x]/(x^2)");
  if (name == "lambda3") return truncated_poly(2, 3, "F2[x]/(x^3)");
  if (name == "lambda4") return truncated_poly(2, 4, "F2[x]/(x^4)");
  if (name == "nakayama2") {
    // Cyclic Nakayama on two vertices with rad^2 = 0; self-injective, not symmetric.
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
    Relation ba{{1, Path{0, 0, {0, 1}}}};  // traverse a then b
    Relation ab{{1, Path{1, 1, {1, 0}}}};
    return make_algebra(2, q, {ba, ab}, 2, "Nakayama(2, rad^2=0)");
  }
  if (name == "kA2") {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return make_algebra(2, q, {}, 2, "F2 A2");
  }
  if (name == "kA3") {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    return make_algebra(2, q, {}, 3, "F2 A3");
  }
  throw ParseError("unknown bundled algebra: " + name);
}

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "." + key + ": missing");
  return *it;
}

long long need_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<long long>();
}

std::string need_str(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

const json& need_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

// Vertex and arrow references accept the declared name or a 0-based index
// (declared names win if they happen to look numeric).
int resolve_name(const std::vector<std::string>& names, const json& j, const std::string& where,
                 const char* kind) {
  long long i = -1;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    for (size_t k = 0; k < names.size(); ++k)
      if (names[k] == s) return static_cast<int>(k);
    if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(where + ": unknown " + kind + " \"" + s + "\"");
    i = std::stoll(s);
  } else {
    i = need_int(j, where);
  }
  if (i < 0 || i >= static_cast<long long>(names.size()))
    throw ParseError(where + ": " + kind + " index out of range");
  return static_cast<int>(i);
}

bool is_small_prime(long long n) {
  if (n < 2 || n >= (1 << 16)) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u32 reduce_mod(long long c, u32 p) {
  long long r = c % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<u32>(r);
}

Mat parse_matrix(const json& j, int rows, int cols, u32 p, const std::string& where) {
  need_array(j, where);
  if (static_cast<int>(j.size()) != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows, got " +
                     std::to_string(j.size()));
  Mat m(rows, cols, p);
  for (int i = 0; i < rows; ++i) {
    const std::string wrow = where + "[" + std::to_string(i) + "]";
    need_array(j[i], wrow);
    if (static_cast<int>(j[i].size()) != cols)
      throw ParseError(wrow + ": expected " + std::to_string(cols) + " entries, got " +
                       std::to_string(j[i].size()));
    for (int k = 0; k < cols; ++k) m.at(i, k) = reduce_mod(need_int(j[i][k], wrow), p);
  }
  return m;
}

// {dims: {vertex: n}, matrices: {arrow: [[row-major]]}}
Module parse_module_record(const AlgebraPtr& alg, const json& rec, const std::string& where) {
  const json& r = rec.is_object() && rec.contains("module") ? rec["module"] : rec;
  if (!r.is_object()) throw ParseError(where + ": expected a module record");
  const Quiver& q = alg->quiver;

  std::vector<int> dim(q.num_vertices(), 0);
  const json& dims = need(r, "dims", where);
  if (!dims.is_object()) throw ParseError(where + ".dims: expected an object");
  for (auto it = dims.begin(); it != dims.end(); ++it) {
    int v = resolve_name(q.vertices, json(it.key()), where + ".dims." + it.key(), "vertex");
    long long n = need_int(it.value(), where + ".dims." + it.key());
    if (n < 0) throw ParseError(where + ".dims." + it.key() + ": negative dimension");
    dim[v] = static_cast<int>(n);
  }

  std::vector<std::string> arrow_names;
  for (const Arrow& a : q.arrows) arrow_names.push_back(a.name);
  std::vector<Mat> act;
  for (const Arrow& a : q.arrows) act.push_back(Mat::zero(dim[a.to], dim[a.from], alg->p));
  if (r.contains("matrices")) {
    const json& ms = r["matrices"];
    if (!ms.is_object()) throw ParseError(where + ".matrices: expected an object");
    for (auto it = ms.begin(); it != ms.end(); ++it) {
      const std::string wm = where + ".matrices." + it.key();
      int a = resolve_name(arrow_names, json(it.key()), wm, "arrow");
      act[a] = parse_matrix(it.value(), dim[q.arrows[a].to], dim[q.arrows[a].from], alg->p, wm);
    }
  }
  try {
    return make_module(alg, std::move(dim), std::move(act));
  } catch (const ArcatError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::string strip_ws(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Strip one layer of parentheses that encloses the whole string, repeatedly.
std::string strip_outer_parens(std::string s) {
  s = strip_ws(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool whole = true;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0) {
        whole = false;
        break;
      }
    }
    if (!whole) break;
    s = strip_ws(s.substr(1, s.size() - 2));
  }
  return s;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
  return s;
}

// One atom of a module reference: 0, or S/P/I/L with an optional (vertex).
Module parse_module_atom(const AlgebraPtr& alg, const std::string& atom_in,
                         const std::string& whole) {
  std::string atom = strip_ws(atom_in);
  if (atom.empty()) throw ParseError("module ref \"" + whole + "\": empty summand");
  if (atom == "0") return zero_module(alg);

  std::string stem = atom;
  std::string vtx;
  size_t open = atom.find('(');
  if (open != std::string::npos) {
    if (atom.back() != ')')
      throw ParseError("module ref \"" + whole + "\": unbalanced parentheses in \"" + atom + "\"");
    stem = strip_ws(atom.substr(0, open));
    vtx = strip_ws(atom.substr(open + 1, atom.size() - open - 2));
  }

  const Quiver& q = alg->quiver;
  if (stem == "L" && vtx.empty()) {
    std::vector<Module> parts;
    for (int v = 0; v < q.num_vertices(); ++v) parts.push_back(projective_module(alg, v));
    return direct_sum(alg, parts).sum;
  }
  if (stem != "S" && stem != "P" && stem != "I" && stem != "L")
    throw ParseError("module ref \"" + whole + "\": unknown atom \"" + atom +
                     "\" (expected 0, S, P, I, or L)");
  int v = 0;
  if (!vtx.empty()) {
    v = resolve_name(q.vertices, json(vtx), "module ref \"" + whole + "\"", "vertex");
  } else if (q.num_vertices() != 1) {
    throw ParseError("module ref \"" + whole + "\": \"" + stem +
                     "\" needs a vertex on a multi-vertex algebra");
  }
  if (stem == "S") return simple_module(alg, v);
  if (stem == "I") return injective_module(alg, v);
  return projective_module(alg, v);  // P, or L(v) as an alias
}

}  // namespace

AlgebraPtr parse_algebra_text(const std::string& text) {
  json root = parse_json(text);
  const json& a = root.is_object() && root.contains("algebra") ? root["algebra"] : root;
  const std::string where = "algebra";
  if (!a.is_object()) throw ParseError(where + ": expected an object");

  long long p = need_int(need(a, "p", where), where + ".p");
  if (!is_small_prime(p)) throw ParseError(where + ".p: must be a prime < 2^16");

  Quiver q;
  const json& vs = need_array(need(a, "vertices", where), where + ".vertices");
  for (size_t i = 0; i < vs.size(); ++i)
    q.vertices.push_back(need_str(vs[i], where + ".vertices[" + std::to_string(i) + "]"));

  const json& as = need_array(need(a, "arrows", where), where + ".arrows");
  for (size_t i = 0; i < as.size(); ++i) {
    const std::string wa = where + ".arrows[" + std::to_string(i) + "]";
    Arrow arr;
    arr.name = need_str(need(as[i], "name", wa), wa + ".name");
    arr.from = resolve_name(q.vertices, need(as[i], "from", wa), wa + ".from", "vertex");
    arr.to = resolve_name(q.vertices, need(as[i], "to", wa), wa + ".to", "vertex");
    q.arrows.push_back(std::move(arr));
  }
  std::vector<std::string> arrow_names;
  for (const Arrow& arr : q.arrows) arrow_names.push_back(arr.name);

  std::vector<Relation> rels;
  if (a.contains("relations")) {
    const json& rs = need_array(a["relations"], where + ".relations");
    for (size_t i = 0; i < rs.size(); ++i) {
      const std::string wr = where + ".relations[" + std::to_string(i) + "]";
      Relation rel;
      for (size_t t = 0; t < need_array(rs[i], wr).size(); ++t) {
        const std::string wt = wr + "[" + std::to_string(t) + "]";
        const json& term = rs[i][t];
        if (!term.is_object()) throw ParseError(wt + ": expected {coef, path}");
        u32 coeff = term.contains("coef")
                        ? reduce_mod(need_int(term["coef"], wt + ".coef"), static_cast<u32>(p))
                        : 1;
        if (coeff == 0) continue;
        const json& pw = need_array(need(term, "path", wt), wt + ".path");
        if (pw.empty()) throw ParseError(wt + ".path: empty path word");
        Path path;
        for (size_t k = 0; k < pw.size(); ++k)
          path.arrows.push_back(
              resolve_name(arrow_names, pw[k], wt + ".path[" + std::to_string(k) + "]", "arrow"));
        path.from = q.arrows[path.arrows.front()].from;
        path.to = q.arrows[path.arrows.back()].to;
        rel.push_back({coeff, std::move(path)});
      }
      if (!rel.empty()) rels.push_back(std::move(rel));
    }
  }

  long long bound = need_int(need(a, "bound", where), where + ".bound");
  if (bound < 1) throw ParseError(where + ".bound: must be >= 1");
  std::string name = a.contains("name") ? need_str(a["name"], where + ".name") : "algebra";

  try {
    return make_algebra(static_cast<u32>(p), std::move(q), std::move(rels),
                        static_cast<int>(bound), name);
  } catch (const ArcatError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Module parse_module_text(const AlgebraPtr& alg, const std::string& text) {
  return parse_module_record(alg, parse_json(text), "module");
}

Module parse_module_ref(const AlgebraPtr& alg, const std::string& spec) {
  std::string s = replace_all(strip_outer_parens(spec), "\xe2\x8a\x95", "+");  // ⊕
  if (s.empty()) throw ParseError("empty module reference");
  std::vector<Module> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+') {
      parts.push_back(parse_module_atom(alg, s.substr(start, i - start), spec));
      start = i + 1;
    }
  }
  if (parts.size() == 1) return parts[0];
  return direct_sum(alg, parts).sum;
}

MorphObject parse_morph_inline(const AlgebraPtr& alg, const std::string& spec) {
  std::string s = strip_outer_parens(replace_all(spec, "\xe2\x86\x92", "->"));  // →
  if (s.empty()) throw ParseError("empty object spec");

  for (const char* ctor : {"cover", "envelope", "pres"}) {
    std::string head = std::string(ctor) + "(";
    if (s.rfind(head, 0) == 0 && s.back() == ')') {
      Module c = parse_module_ref(alg, s.substr(head.size(), s.size() - head.size() - 1));
      if (head[0] == 'c') return make_morph(projective_cover(c));
      if (head[0] == 'e') return make_morph(injective_envelope(c));
      return make_morph(minimal_presentation(c).g);
    }
  }

  size_t arrow = s.find("->");
  if (arrow != std::string::npos) {
    Module a = parse_module_ref(alg, s.substr(0, arrow));
    Module b = parse_module_ref(alg, s.substr(arrow + 2));
    if (a.is_zero_module()) return morph_from_zero(b);
    if (b.is_zero_module()) return morph_to_zero(a);
    throw ParseError("object \"" + spec +
                     "\": inline arrows need a zero side; use cover/envelope/pres or a JSON "
                     "morph record for a general map");
  }
  size_t eq = s.find('=');
  if (eq != std::string::npos) {
    Module a = parse_module_ref(alg, s.substr(0, eq));
    Module b = parse_module_ref(alg, s.substr(eq + 1));
    if (!is_isomorphic(a, b))
      throw ParseError("object \"" + spec + "\": sides of \"=\" are not isomorphic");
    return morph_identity(a);
  }
  throw ParseError("object \"" + spec +
                   "\": expected \"0->C\", \"C->0\", \"C=C\", cover(C), envelope(C), or pres(C)");
}

MorphObject parse_morph_text(const AlgebraPtr& alg, const std::string& text) {
  json root = parse_json(text);
  const json& r = root.is_object() && root.contains("morph") ? root["morph"] : root;
  const std::string where = "morph";
  if (!r.is_object()) throw ParseError(where + ": expected a morph record");

  auto side = [&](const char* key) {
    const json& j = need(r, key, where);
    if (j.is_string()) return parse_module_ref(alg, j.get<std::string>());
    return parse_module_record(alg, j, where + "." + key);
  };
  Module a = side("A");
  Module b = side("B");

  const Quiver& q = alg->quiver;
  std::vector<Mat> comp;
  for (int v = 0; v < q.num_vertices(); ++v) comp.push_back(Mat::zero(b.dim[v], a.dim[v], alg->p));
  if (r.contains("f")) {
    const json& f = r["f"];
    if (!f.is_object()) throw ParseError(where + ".f: expected an object");
    for (auto it = f.begin(); it != f.end(); ++it) {
      const std::string wf = where + ".f." + it.key();
      int v = resolve_name(q.vertices, json(it.key()), wf, "vertex");
      comp[v] = parse_matrix(it.value(), b.dim[v], a.dim[v], alg->p, wf);
    }
  }
  try {
    return make_morph(make_map(std::move(a), std::move(b), std::move(comp)));
  } catch (const ArcatError& e) {
    throw ParseError(where + ".f: " + e.what());
  }
}

AlgebraPtr load_algebra(const std::string& name_or_path) {
  for (const std::string& n : bundled_algebra_names())
    if (n == name_or_path) return bundled_algebra(n);
  std::ifstream in(name_or_path);
  if (!in)
    throw ParseError("algebra \"" + name_or_path +
                     "\": not a bundled name and not a readable file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str());
}

namespace {

// --object and --module take a file path when one exists, else inline text.
std::optional<std::string> slurp_if_file(const std::string& s) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(s, ec)) return std::nullopt;
  std::ifstream in(s);
  if (!in) throw ParseError("cannot read file: " + s);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Module load_module(const AlgebraPtr& alg, const std::string& spec_or_path) {
  if (auto text = slurp_if_file(spec_or_path)) return parse_module_text(alg, *text);
  return parse_module_ref(alg, spec_or_path);
}

MorphObject load_object(const AlgebraPtr& alg, const std::string& spec_or_path) {
  if (auto text = slurp_if_file(spec_or_path)) return parse_morph_text(alg, *text);
  return parse_morph_inline(alg, spec_or_path);
}

std::string module_display_name(const Module& m) {
  if (m.is_zero_module()) return "0";
  const AlgebraPtr& alg = m.alg;
  int nv = alg->quiver.num_vertices();
  bool single = nv == 1;
  auto at = [&](const char* stem, int v) {
    return single ? std::string(stem) : std::string(stem) + "(" + alg->quiver.vertices[v] + ")";
  };
  for (int v = 0; v < nv; ++v)
    if (is_isomorphic(m, simple_module(alg, v))) return at("S", v);
  for (int v = 0; v < nv; ++v)
    if (is_isomorphic(m, projective_module(alg, v))) return single ? "L" : at("P", v);
  for (int v = 0; v < nv; ++v)
    if (is_isomorphic(m, injective_module(alg, v))) return at("I", v);
  return "M" + dim_vector_string(m);
}

std::string map_tag(const ModuleMap& f) {
  if (is_iso(f)) return "1";
  if (is_zero(f)) return "0";
  if (is_surjective_map(f)) return "p";
  if (is_injective_map(f)) return "i";
  return "f";
}

std::string morph_display_name(const MorphObject& x) {
  if (x.is_zero_object()) return "(0)";
  std::string a = module_display_name(x.a());
  std::string b = module_display_name(x.b());
  if (x.a().is_zero_module()) return "(0 -> " + b + ")";
  if (x.b().is_zero_module()) return "(" + a + " -> 0)";
  std::string tag = map_tag(x.f);
  if (tag == "1") return "(" + a + " = " + b + ")_1";
  return "(" + a + " -> " + b + ")_" + tag;
}

std::string morph_compact_label(const MorphObject& x) {
  if (x.is_zero_object()) return "[0]";
  auto compact = [](std::string s) {
    std::string out;
    for (char c : s)
      if (c != '(' && c != ')' && c != ',') out += c;
    return out;
  };
  std::string a = compact(module_display_name(x.a()));
  std::string b = compact(module_display_name(x.b()));
  if (x.a().is_zero_module() || x.b().is_zero_module()) return "[" + a + b + "]";
  return "[" + a + b + "_" + map_tag(x.f) + "]";
}

}  // namespace arcat
