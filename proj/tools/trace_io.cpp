#include "trace_io.hpp"

#include <fstream>
#include <sstream>

#include "quadell/errors.hpp"
#include "quadell/integer_math.hpp"

namespace quadell::cli {

using nlohmann::json;

namespace {

Int json_int(const json& v, const std::string& what) {
  try {
    if (v.is_number_integer()) return parse_int(std::to_string(v.get<long long>()));
    if (v.is_string()) return parse_int(v.get<std::string>());
  } catch (const Error&) {
  }
  throw ParseFailure("expected an integer for " + what);
}

Rational json_rational(const json& v, const std::string& what) {
  try {
    if (v.is_number_integer()) return Rational(parse_int(std::to_string(v.get<long long>())));
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const Error&) {
  }
  throw ParseFailure("expected a rational for " + what);
}

QuadricForm quadric_from_json(const json& rows, const std::string& what) {
  if (!rows.is_array() || rows.size() != 16)
    throw ParseFailure(what + " must hold 16 row-major entries");
  std::array<std::array<Rational, 4>, 4> m;
  for (std::size_t i = 0; i < 16; ++i) m[i / 4][i % 4] = json_rational(rows[i], what);
  try {
    return QuadricForm(m);
  } catch (const Error& e) {
    throw ParseFailure(what + ": " + e.what());
  }
}

json rational_list(const auto& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json matrix_json(const auto& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(rational_list(row));
  return out;
}

std::string factored_or_plain(const WeierstrassCurve& w) {
  if (w.is_special() && is_integer(w.a2) && is_integer(w.a4) && is_integer(w.a6)) {
    if (auto roots = monic_cubic_integer_roots(num(w.a2), num(w.a4), num(w.a6))) {
      std::string s = "y^2 = ";
      // the zero root prints first, the rest in descending order
      std::vector<Int> ordered;
      bool has_zero = false;
      for (int i = 2; i >= 0; --i) {
        if ((*roots)[i] == 0)
          has_zero = true;
        else
          ordered.push_back((*roots)[i]);
      }
      if (has_zero) s += "x";
      for (const Int& r : ordered)
        s += (r > 0) ? "(x-" + r.get_str() + ")" : "(x+" + Int(-r).get_str() + ")";
      return s;
    }
  }
  return w.equation_text();
}

}  // namespace

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseFailure("instance document must be a JSON object");
  if (doc.contains("family") && (doc.contains("quadrics") || doc.contains("point")))
    throw ParseFailure("give either a family or explicit quadrics, not both");
  if (doc.contains("family")) {
    std::string fam = doc["family"].is_string() ? doc["family"].get<std::string>() : "";
    if (fam == "euler") {
      if (!doc.contains("M") || !doc.contains("N")) throw ParseFailure("euler needs M and N");
      return euler_instance(json_int(doc["M"], "M"), json_int(doc["N"], "N"));
    }
    if (fam == "klm") {
      for (const char* key : {"k", "l", "m"})
        if (!doc.contains(key)) throw ParseFailure("klm needs k, l and m");
      return klm_instance(json_int(doc["k"], "k"), json_int(doc["l"], "l"),
                          json_int(doc["m"], "m"));
    }
    throw ParseFailure("unknown family '" + fam + "'");
  }
  if (!doc.contains("quadrics") || !doc.contains("point"))
    throw ParseFailure("instance needs either a family or quadrics plus point");
  const json& qs = doc["quadrics"];
  if (!qs.is_array() || qs.size() != 2) throw ParseFailure("quadrics must hold two matrices");
  QuadricForm a = quadric_from_json(qs[0], "quadrics[0]");
  QuadricForm b = quadric_from_json(qs[1], "quadrics[1]");
  const json& pj = doc["point"];
  if (!pj.is_array() || pj.size() != 4) throw ParseFailure("point must hold 4 entries");
  std::array<Rational, 4> raw;
  for (std::size_t i = 0; i < 4; ++i) raw[i] = json_rational(pj[i], "point");
  ProjectivePoint3 p = [&] {
    try {
      return normalize_point(raw);
    } catch (const Error& e) {
      throw ParseFailure(std::string("point: ") + e.what());
    }
  }();
  json echo;
  echo["quadrics"] = json::array({json::array(), json::array()});
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      echo["quadrics"][0].push_back(to_string(a.at(r, c)));
      echo["quadrics"][1].push_back(to_string(b.at(r, c)));
    }
  echo["point"] = point3_json(p);
  return Instance{a, b, p, echo};
}

Instance instance_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseFailure("cannot open input file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseFailure(std::string("invalid JSON: ") + e.what());
  }
  return instance_from_json(doc);
}

Instance euler_instance(const Int& m, const Int& n) {
  FamilyQuadrics q = [&] {
    try {
      return euler_quadrics(EulerInstance(m, n));
    } catch (const Error& e) {
      throw ParseFailure(e.what());
    }
  }();
  json echo;
  echo["family"] = "euler";
  echo["M"] = to_string(m);
  echo["N"] = to_string(n);
  return Instance{q.a, q.b, q.base, echo};
}

Instance klm_instance(const Int& k, const Int& l, const Int& m) {
  FamilyQuadrics q = [&] {
    try {
      return klm_quadrics(KlmInstance(k, l, m));
    } catch (const Error& e) {
      throw ParseFailure(e.what());
    }
  }();
  json echo;
  echo["family"] = "klm";
  echo["k"] = to_string(k);
  echo["l"] = to_string(l);
  echo["m"] = to_string(m);
  return Instance{q.a, q.b, q.base, echo};
}

json point2_json(const ProjectivePoint2& p) {
  json out = json::array();
  for (const auto& c : p.coords()) out.push_back(c.get_str());
  return out;
}

json point3_json(const ProjectivePoint3& p) {
  json out = json::array();
  for (const auto& c : p.coords()) out.push_back(c.get_str());
  return out;
}

json trace_to_json(const Instance& inst, const PipelineTrace& trace) {
  json doc;
  doc["instance"] = inst.echo;
  doc["branches"] = {{"yz_swap", trace.chain.yz_swapped},
                     {"inflection_shortcut", trace.chain.inflection_shortcut}};

  json qs;
  qs["forward"] = matrix_json(trace.quadric.forward.matrix());
  qs["pencil"] = {{"q1", rational_list(trace.quadric.pencil.q1.c)},
                  {"q2", rational_list(trace.quadric.pencil.q2.c)},
                  {"l1", rational_list(trace.quadric.pencil.l1.c)},
                  {"l2", rational_list(trace.quadric.pencil.l2.c)},
                  {"u", rational_list(trace.quadric.pencil.u)},
                  {"v", rational_list(trace.quadric.pencil.v)}};
  qs["cubic"] = rational_list(trace.quadric.cubic.coeffs());
  qs["distinguished_image"] = point2_json(trace.quadric.base_image);
  doc["quadric_stage"] = qs;

  doc["steps"] = json::array();
  for (const auto& rec : trace.chain.steps) {
    json s;
    s["name"] = rec.name;
    s["kind"] = rec.kind == StepKind::Linear ? "linear" : "quadratic";
    if (rec.kind == StepKind::Linear) {
      s["forward"] = matrix_json(rec.forward->matrix());
      s["inverse"] = matrix_json(rec.inverse->matrix());
    } else {
      s["forward"] = "(X,Y,Z) -> (X*Z, X*Y, Z^2)";
      s["inverse"] = "(X,Y,Z) -> (X^2, Y*Z, X*Z)";
    }
    s["gamma"] = rational_list(rec.cubic_after.coeffs());
    s["gamma_exact"] = rational_list(rec.cubic_exact.coeffs());
    s["point"] = point2_json(rec.point_after);
    doc["steps"].push_back(s);
  }

  const WeierstrassCurve& w = trace.curve();
  doc["curve"] = {{"a2", to_string(w.a2)},
                  {"a4", to_string(w.a4)},
                  {"a6", to_string(w.a6)},
                  {"discriminant", to_string(w.discriminant())},
                  {"equation", factored_or_plain(w)}};
  if (trace.split()) {
    const SplitForm& sf = *trace.split();
    doc["split_form"] = {{"A", sf.A.get_str()},
                         {"B", sf.B.get_str()},
                         {"shift", sf.shift.get_str()},
                         {"quartered", sf.quartered},
                         {"equation", sf.equation_text()}};
  } else {
    doc["split_form"] = nullptr;
  }
  return doc;
}

std::string trace_to_text(const Instance& inst, const PipelineTrace& trace) {
  std::ostringstream out;
  out << "instance: " << inst.echo.dump() << "\n";
  out << "cubic C(0): " << trace.quadric.cubic.str() << "\n";
  out << "distinguished point on C(0): " << trace.quadric.base_image.str() << "\n";
  for (const auto& rec : trace.chain.steps) {
    out << "step " << rec.name << ": gamma " << rec.cubic_after.str() << ", point "
        << rec.point_after.str() << "\n";
  }
  out << "curve: " << factored_or_plain(trace.curve())
      << "  (discriminant " << to_string(trace.curve().discriminant()) << ")\n";
  if (trace.split())
    out << "split form: " << trace.split()->equation_text() << "\n";
  else
    out << "split form: none (no three rational roots)\n";
  return out.str();
}

namespace {

std::optional<std::vector<Rational>> parse_coords(const std::string& text, std::size_t n) {
  std::vector<Rational> vals;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    // tolerate surrounding blanks and parentheses
    std::erase_if(token, [](char c) { return c == ' ' || c == '(' || c == ')'; });
    try {
      vals.push_back(parse_rational(token));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  if (vals.size() != n) return std::nullopt;
  return vals;
}

}  // namespace

std::optional<ProjectivePoint2> parse_point2(const std::string& text) {
  auto v = parse_coords(text, 3);
  if (!v) return std::nullopt;
  try {
    return normalize_point(std::array<Rational, 3>{(*v)[0], (*v)[1], (*v)[2]});
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<ProjectivePoint3> parse_point3(const std::string& text) {
  auto v = parse_coords(text, 4);
  if (!v) return std::nullopt;
  try {
    return normalize_point(std::array<Rational, 4>{(*v)[0], (*v)[1], (*v)[2], (*v)[3]});
  } catch (const Error&) {
    return std::nullopt;
  }
}

json error_json(const Error& e) {
  return {{"error", {{"kind", std::string(to_string(e.kind()))},
                     {"step", e.where()},
                     {"message", e.what()}}}};
}

}  // namespace quadell::cli
